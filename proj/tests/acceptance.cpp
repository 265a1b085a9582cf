// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.

#include "shintani/error.hpp"
#include "shintani/oracle.hpp"
#include "shintani/verify.hpp"
#include "shintani/zeta.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace shintani;

namespace {

std::atomic<int> subfield_failures{0};

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome from_reports(const std::vector<Report>& reports) {
    size_t checks = 0, failed = 0;
    std::string first;
    for (const Report& r : reports) {
        checks += r.checks.size();
        failed += r.failures();
        for (const Check& c : r.checks)
            if (!c.passed && first.empty()) first = r.title + ": " + c.name + " " + c.data.dump();
    }
    Outcome o;
    o.ok = failed == 0 && checks > 0;
    o.detail = std::to_string(checks) + " checks, " + std::to_string(failed) + " failed";
    if (!first.empty()) o.detail += "; first failure " + first;
    return o;
}

int run(int id, const char* title, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotInSubfield) ++subfield_failures;
        o = {false, std::string("exception: ") + e.what()};
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d: %s (%s; %.2f s)\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
    std::fflush(stdout);
    return o.ok ? 0 : 1;
}

IdealSpec principal(const FieldSpec& f, int64_t n) { return IdealSpec::principal(f, FieldElement::from_int(n)); }

}  // namespace

int main() {
    int failed = 0;

    failed += run(1, "g=1 Lerch values equal the Hurwitz-Bernoulli oracle", [] {
        FieldSpec q = FieldSpec::rational();
        Fan fan = standard_fan(q);
        size_t n_cmp = 0, bad = 0;
        for (int64_t n = 2; n <= 12; ++n) {
            ResidueRing r(principal(q, n));
            for (int64_t a = 1; a < n; ++a)
                for (int k = 0; k <= 6; ++k) {
                    ++n_cmp;
                    if (lerch_value(fan, make_torsion_point(r, a, 0), k) != oracle::hurwitz_lerch(n, a, k)) ++bad;
                }
        }
        bool anchors =
            lerch_value(fan, make_torsion_point(ResidueRing(principal(q, 2)), 1, 0), 0) ==
                CycNumber::rational(make_rational(-1, 2)) &&
            lerch_value(fan, make_torsion_point(ResidueRing(principal(q, 4)), 1, 0), 0) ==
                (CycNumber::zeta_power(4, 1) - CycNumber::rational(1)) * make_rational(1, 2);
        return Outcome{bad == 0 && anchors, std::to_string(n_cmp) + " comparisons, " + std::to_string(bad) +
                                                 " mismatches, anchors " + (anchors ? "ok" : "wrong")};
    });

    failed += run(2, "cocycle defect vanishes on 200 random triples for D=5,8,12", [] {
        std::vector<Report> rs;
        for (int64_t d : {5, 8, 12}) rs.push_back(verify_cocycle(FieldSpec::quadratic(d), 200, 20240 + static_cast<uint64_t>(d), 12));
        return from_reports(rs);
    });

    failed += run(3, "Lerch values independent of the fan (D=5,8; f=(2),(3); k=0,1,2)", [] {
        std::vector<Report> rs;
        for (int64_t d : {5, 8}) {
            FieldSpec f = FieldSpec::quadratic(d);
            for (int64_t n : {2, 3}) rs.push_back(verify_fan_independence(standard_fan(f), principal(f, n), {0, 1, 2}));
        }
        return from_reports(rs);
    });

    failed += run(4, "unit-orbit and Galois equivariance", [] {
        std::vector<Report> rs;
        for (int64_t d : {5, 8, 12, 13}) {
            FieldSpec f = FieldSpec::quadratic(d);
            for (int64_t n : {2, 3, 5}) rs.push_back(verify_equivariance(standard_fan(f), principal(f, n), {0, 1, 2}));
        }
        FieldSpec q = FieldSpec::rational();
        for (int64_t n : {5, 7, 8, 12}) rs.push_back(verify_equivariance(standard_fan(q), principal(q, n), {0, 1, 2, 3}));
        return from_reports(rs);
    });

    failed += run(5, "base-change factorization for (5,3), (8,3), (5,7), k=0,1,2", [] {
        std::vector<Report> rs;
        for (auto [d, q] : std::vector<std::pair<int64_t, int64_t>>{{5, 3}, {8, 3}, {5, 7}})
            rs.push_back(verify_base_change(d, q, (q - 1) / 2, {0, 1, 2}));
        return from_reports(rs);
    });

    failed += run(6, "diagonal-weight values descend to Q(zeta_n)", [] {
        size_t tried = 0, bad = 0;
        auto probe = [&](const Fan& fan, const IdealSpec& f, int kmax) {
            for (const TorsionPoint& xi : torsion_points(ResidueRing(f))) {
                if (xi.is_trivial()) continue;
                for (int k = 0; k <= kmax; ++k) {
                    ++tried;
                    LerchDetail det;
                    try {
                        lerch_value(fan, xi, k, &det);
                        restrict_to_subfield(det.raw, xi.order());
                    } catch (const Error& e) {
                        if (e.code() != ErrorCode::NotInSubfield) throw;
                        ++bad;
                    }
                }
            }
        };
        FieldSpec q = FieldSpec::rational();
        for (int64_t n = 2; n <= 12; ++n) probe(standard_fan(q), principal(q, n), 6);
        for (int64_t d : {5, 8, 12, 13}) {
            FieldSpec f = FieldSpec::quadratic(d);
            for (int64_t n : {2, 3, 4, 5}) probe(standard_fan(f), principal(f, n), 2);
        }
        int earlier = subfield_failures.load();
        return Outcome{bad == 0 && earlier == 0, std::to_string(tried) + " values, " + std::to_string(bad) +
                                                     " restriction failures here, " + std::to_string(earlier) +
                                                     " in earlier criteria"};
    });

    failed += run(7, "quotient complexes for D=5, f=(2),(3): d o d, homology (1,1), fundamental class, 100 coboundary trials", [] {
        std::vector<Report> rs;
        FieldSpec f = FieldSpec::quadratic(5);
        for (int64_t n : {2, 3}) {
            rs.push_back(verify_homology(standard_fan(f), principal(f, n)));
            rs.push_back(verify_coboundary(standard_fan(f), principal(f, n), 0, 100, 77 + static_cast<uint64_t>(n)));
            rs.push_back(verify_coboundary(standard_fan(f), principal(f, n), 1, 100, 99 + static_cast<uint64_t>(n)));
        }
        return from_reports(rs);
    });

    failed += run(8, "Fourier inversion and vanishing off primitive torsion points", [] {
        std::vector<Report> rs;
        for (auto [d, q] : std::vector<std::pair<int64_t, int64_t>>{{5, 3}, {8, 3}, {5, 7}, {13, 3}, {5, 5}}) {
            FieldSpec f = FieldSpec::quadratic(d);
            for (int64_t j = 1; j < q - 1; ++j) rs.push_back(verify_fourier_inversion(HeckeCharacter::norm_character(f, q, j)));
        }
        FieldSpec q = FieldSpec::rational();
        for (int64_t p : {3, 5, 7, 11})
            for (int64_t j = 1; j < p - 1; ++j) rs.push_back(verify_fourier_inversion(HeckeCharacter::norm_character(q, p, j)));
        return from_reports(rs);
    });

    std::printf("%s: %d of 8 criteria failed\n", failed ? "FAIL" : "PASS", failed);
    return failed ? 1 : 0;
}
