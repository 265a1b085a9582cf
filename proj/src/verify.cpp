#include "shintani/verify.hpp"

#include "shintani/cech.hpp"
#include "shintani/error.hpp"
#include "shintani/genfun.hpp"
#include "shintani/oracle.hpp"
#include "shintani/parallel.hpp"
#include "shintani/zeta.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

namespace shintani {

using ojson = nlohmann::ordered_json;

bool Report::passed() const { return failures() == 0; }

size_t Report::failures() const {
    size_t n = 0;
    for (const Check& c : checks) n += c.passed ? 0 : 1;
    return n;
}

void Report::add(std::string name, bool ok, ojson data) { checks.push_back({std::move(name), ok, std::move(data)}); }

ojson Report::to_json() const {
    ojson j;
    j["report"] = title;
    j["passed"] = passed();
    j["checks_run"] = checks.size();
    j["failures"] = failures();
    for (const auto& [k, v] : summary.items()) j[k] = v;
    ojson arr = ojson::array();
    for (const Check& c : checks) {
        ojson e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        if (!c.data.is_null()) e["data"] = c.data;
        arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << title << "\n";
    for (const auto& [k, v] : summary.items()) os << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    for (const Check& c : checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.passed && !c.data.is_null()) os << "  " << c.data.dump();
        os << "\n";
    }
    os << checks.size() << " checks, " << failures() << " failed\n";
    return os.str();
}

namespace {

ojson elements_json(const std::vector<FieldElement>& xs) {
    ojson a = ojson::array();
    for (const FieldElement& x : xs) a.push_back(x.to_string());
    return a;
}

std::vector<TorsionPoint> nontrivial_points(const ResidueRing& ring) {
    std::vector<TorsionPoint> out;
    for (const TorsionPoint& xi : torsion_points(ring))
        if (!xi.is_trivial()) out.push_back(xi);
    return out;
}

void require_field(const Fan& fan, const IdealSpec& conductor) {
    require(fan.field == conductor.field(), ErrorCode::InvalidArgument, "fan and conductor live over different fields");
    require(!conductor.is_unit_ideal(), ErrorCode::InvalidArgument, "the conductor must be a proper ideal");
}

}  // namespace

Report verify_cocycle(const FieldSpec& field, size_t trials, uint64_t seed, int64_t bound) {
    require(field.degree() == 2, ErrorCode::UnsupportedDegree, "the cocycle check needs a real quadratic field");
    std::vector<FieldElement> pool;
    for (const FieldElement& x : small_totally_positive(field, 64))
        if (x.trace() <= 10 && is_primitive(field, x)) pool.push_back(x);

    std::vector<std::vector<FieldElement>> triples(trials);
    std::vector<char> rational_ok(trials), series_ok(trials);
    parallel_for(trials, [&](size_t t) {
        std::mt19937_64 rng(derive_seed(seed, t));
        for (int i = 0; i < 3; ++i) triples[t].push_back(pool[rng() % pool.size()]);
        rational_ok[t] = cocycle_defect(field, triples[t]).numerator.is_zero();
        series_ok[t] = cocycle_defect_series(field, triples[t], bound).is_zero();
    });

    Report r;
    r.title = "cocycle";
    r.summary["trials"] = trials;
    r.summary["series_bound"] = bound;
    for (size_t t = 0; t < trials; ++t) {
        ojson d;
        d["alphas"] = elements_json(triples[t]);
        d["rational_function_zero"] = static_cast<bool>(rational_ok[t]);
        d["series_zero"] = static_cast<bool>(series_ok[t]);
        r.add("triple " + std::to_string(t), rational_ok[t] && series_ok[t], std::move(d));
    }
    return r;
}

Report verify_homology(const Fan& fan, const IdealSpec& conductor) {
    require_field(fan, conductor);
    const ResidueRing ring(conductor);
    const std::vector<TorsionPoint> points = nontrivial_points(ring);
    std::vector<Report> parts(points.size());
    parallel_for(points.size(), [&](size_t i) {
        const TorsionPoint& xi = points[i];
        const std::string tag = xi.to_string() + ": ";
        Report& p = parts[i];
        QuotientComplex c = build_quotient_complex(adapt_fan_to(fan, xi), xi);
        std::vector<HomologyGroup> h = homology(c);
        ojson hj = ojson::array();
        for (const auto& g : h) hj.push_back({{"rank", g.rank}, {"torsion", g.torsion}});

        p.add(tag + "d o d = 0", boundary_squares_to_zero(c));
        std::vector<HomologyGroup> expected(static_cast<size_t>(fan.field.degree()), HomologyGroup{1, {}});
        p.add(tag + "homology", h == expected,
              ojson{{"groups", hj}, {"vertices", c.vertices.size()}, {"cells", c.cell_count()}});
        p.add(tag + "fundamental class is a cycle", fundamental_class_is_cycle(c));

        bool control = true;
        for (size_t j = 0; j < c.cell_count() && fan.field.degree() == 2; ++j) {
            bool loop = c.ends[j][0] == c.ends[j][1];
            if (!loop && fundamental_class_is_cycle(c, j)) control = false;
        }
        p.add(tag + "flipped orientation is not a cycle", control);

        LerchDetail det;
        CycNumber expect = lerch_value(fan, xi, 0, &det);
        CycNumber paired = pairing(shintani_cochain(c, xi, 0), c) * c.period_factor;
        CycNumber got = minimal_level_form(restrict_to_subfield(paired, xi.order()));
        p.add(tag + "pairing equals lerch value", got == expect,
              ojson{{"pairing", got.to_json()}, {"lerch", expect.to_json()}});
    });
    Report r;
    r.title = "homology";
    r.summary["conductor"] = conductor.to_string();
    r.summary["torsion_points"] = points.size();
    for (Report& p : parts)
        for (Check& c : p.checks) r.checks.push_back(std::move(c));
    return r;
}

Report verify_coboundary(const Fan& fan, const IdealSpec& conductor, int k, size_t trials, uint64_t seed) {
    require_field(fan, conductor);
    const ResidueRing ring(conductor);
    const std::vector<TorsionPoint> points = nontrivial_points(ring);
    Report r;
    r.title = "coboundary";
    r.summary["conductor"] = conductor.to_string();
    r.summary["k"] = k;
    r.summary["trials"] = trials;
    for (size_t i = 0; i < points.size(); ++i) {
        CoboundaryReport c = coboundary_invariance(fan, points[i], k, trials, derive_seed(seed, i));
        r.add(points[i].to_string() + ": " + std::to_string(trials) + " trials pair to 0", c.failures == 0,
              ojson{{"failures", c.failures}, {"pairing", c.base_pairing.to_json()}});
    }
    return r;
}

Report verify_fan_independence(const Fan& fan, const IdealSpec& conductor, const std::vector<int>& ks) {
    require_field(fan, conductor);
    require(fan.field.degree() == 2, ErrorCode::UnsupportedDegree, "fan subdivision needs a real quadratic field");
    const Cone& c0 = fan.cones.front();
    Fan once = subdivide(fan, 0, primitive_part(c0.gens[0] + c0.gens[1]));
    const Cone& c1 = once.cones[1];
    Fan twice = subdivide(once, 1, primitive_part(c1.gens[0] + c1.gens[1]));
    const std::vector<const Fan*> fans{&fan, &once, &twice};

    const ResidueRing ring(conductor);
    const std::vector<TorsionPoint> points = nontrivial_points(ring);
    struct Job {
        TorsionPoint xi;
        int k;
    };
    std::vector<Job> jobs;
    for (const TorsionPoint& xi : points)
        for (int k : ks) jobs.push_back({xi, k});
    std::vector<std::vector<CycNumber>> values(jobs.size());
    parallel_for(jobs.size(), [&](size_t i) {
        for (const Fan* f : fans) values[i].push_back(lerch_value(*f, jobs[i].xi, jobs[i].k));
    });

    Report r;
    r.title = "fan-independence";
    r.summary["conductor"] = conductor.to_string();
    r.summary["fans"] = ojson::array({fan_hash(fan), fan_hash(once), fan_hash(twice)});
    for (size_t i = 0; i < jobs.size(); ++i) {
        bool same = values[i][0] == values[i][1] && values[i][0] == values[i][2];
        ojson d = ojson::array();
        for (const CycNumber& v : values[i]) d.push_back(v.to_json());
        r.add(jobs[i].xi.to_string() + ", k=" + std::to_string(jobs[i].k), same, std::move(d));
    }
    return r;
}

Report verify_equivariance(const Fan& fan, const IdealSpec& conductor, const std::vector<int>& ks) {
    require_field(fan, conductor);
    const FieldSpec& field = fan.field;
    const ResidueRing ring(conductor);
    const std::vector<TorsionPoint> points = nontrivial_points(ring);
    const FieldElement eps = field.degree() == 2 ? fundamental_totally_positive_unit(field) : FieldElement::from_int(1);

    std::vector<std::pair<TorsionPoint, int>> keys;
    for (const TorsionPoint& xi : points)
        for (int k : ks) keys.push_back({xi, k});
    std::vector<CycNumber> vals(keys.size());
    parallel_for(keys.size(), [&](size_t i) { vals[i] = lerch_value(fan, keys[i].first, keys[i].second); });
    std::map<std::pair<TorsionPoint, int>, CycNumber> table;
    for (size_t i = 0; i < keys.size(); ++i) table.emplace(keys[i], vals[i]);
    auto value = [&](const TorsionPoint& xi, int k) -> const CycNumber& { return table.at({xi, k}); };

    Report r;
    r.title = "equivariance";
    r.summary["conductor"] = conductor.to_string();
    for (const auto& [xi, k] : keys) {
        const std::string tag = xi.to_string() + ", k=" + std::to_string(k);
        const CycNumber& v = value(xi, k);
        TorsionPoint moved = unit_action(field, eps, xi);
        r.add(tag + ": unit orbit", value(moved, k) == v, ojson{{"moved", moved.to_string()}});
        const int64_t n = xi.order();
        bool galois = true;
        ojson bad = ojson::array();
        for (int64_t j = 2; j < n; ++j) {
            if (std::gcd(j, n) != 1) continue;
            if (galois_apply(j, v) != value(xi.power(j), k)) {
                galois = false;
                bad.push_back(j);
            }
        }
        r.add(tag + ": galois", galois, ojson{{"failing_j", bad}});
    }
    return r;
}

Report verify_character(const HeckeCharacter& chi) {
    const CharacterReport rep = validate_character(chi);
    ojson problems = rep.problems;
    Report r;
    r.title = "character";
    r.summary["conductor"] = chi.ring().ideal().to_string();
    r.summary["modulus"] = chi.modulus();
    r.add("multiplicative", rep.multiplicative, ojson{{"problems", problems}});
    r.add("trivial on totally positive units", rep.trivial_on_units, ojson{{"problems", problems}});
    r.add("primitive", rep.primitive, ojson{{"problems", problems}});
    return r;
}

Report verify_fourier_inversion(const HeckeCharacter& chi) {
    const ResidueRing& ring = chi.ring();
    const std::vector<TorsionPoint> points = torsion_points(ring);
    std::vector<CycNumber> coeff(points.size());
    parallel_for(points.size(), [&](size_t i) { coeff[i] = fourier_coefficient(chi, points[i]); });
    const CharacterReport rep = validate_character(chi);

    Report r;
    r.title = "fourier-inversion";
    r.summary["conductor"] = ring.ideal().to_string();
    r.summary["primitive"] = rep.primitive;
    for (int64_t a = 0; a < ring.size(); ++a) {
        const Coords x = ring.element(a);
        CycNumber s;
        for (size_t i = 0; i < points.size(); ++i)
            if (!coeff[i].is_zero()) s += coeff[i] * CycNumber::zeta_power(points[i].level, points[i].exponent_at(x));
        CycNumber expect = chi.value_at(x);
        r.add("inversion at " + FieldElement::from_coords(ring.field(), x).to_string(), s == expect,
              ojson{{"sum", s.to_json()}, {"chi", expect.to_json()}});
    }
    if (rep.primitive) {
        ojson bad = ojson::array();
        for (size_t i = 0; i < points.size(); ++i)
            if (!is_primitive_torsion(ring, points[i]) && !coeff[i].is_zero()) bad.push_back(points[i].to_string());
        r.add("c_chi vanishes off primitive torsion points", bad.empty(), ojson{{"nonzero_at", bad}});
    }
    return r;
}

Report verify_base_change(int64_t disc, int64_t q, int64_t j, const std::vector<int>& ks) {
    const FieldSpec field = FieldSpec::from_disc(disc);
    const HeckeCharacter chi = HeckeCharacter::norm_character(field, q, j);
    const Fan fan = standard_fan(field);
    const oracle::DirichletCharacter chi1 = oracle::power_character(q, j);
    const oracle::DirichletCharacter twisted = chi1 * oracle::kronecker_character(disc);

    std::vector<CycNumber> lhs(ks.size()), rhs(ks.size());
    parallel_for(ks.size(), [&](size_t i) {
        lhs[i] = hecke_L_value(chi, ks[i], fan);
        rhs[i] = minimal_level_form(oracle::dirichlet_L(chi1, ks[i]) * oracle::dirichlet_L(twisted, ks[i]));
    });
    Report r;
    r.title = "base-change";
    for (size_t i = 0; i < ks.size(); ++i)
        r.add("D=" + std::to_string(disc) + " q=" + std::to_string(q) + " j=" + std::to_string(j) +
                  " k=" + std::to_string(ks[i]),
              lhs[i] == rhs[i], ojson{{"hecke", lhs[i].to_json()}, {"oracle", rhs[i].to_json()}});
    return r;
}

Report verify_rational_lerch(int64_t max_level, int max_k) {
    const FieldSpec field = FieldSpec::rational();
    const Fan fan = standard_fan(field);
    struct Cell {
        int64_t n;
        int k;
    };
    std::vector<Cell> cells;
    for (int64_t n = 2; n <= max_level; ++n)
        for (int k = 0; k <= max_k; ++k) cells.push_back({n, k});
    std::vector<ojson> bad(cells.size(), ojson::array());
    parallel_for(cells.size(), [&](size_t i) {
        const auto [n, k] = cells[i];
        const ResidueRing ring(IdealSpec::principal(field, FieldElement::from_int(n)));
        for (int64_t a = 1; a < n; ++a) {
            CycNumber got = lerch_value(fan, make_torsion_point(ring, a, 0), k);
            if (got != minimal_level_form(oracle::hurwitz_lerch(n, a, k))) bad[i].push_back(a);
        }
    });
    Report r;
    r.title = "rational-lerch";
    for (size_t i = 0; i < cells.size(); ++i)
        r.add("n=" + std::to_string(cells[i].n) + " k=" + std::to_string(cells[i].k) + " all a", bad[i].empty(),
              ojson{{"failing_a", bad[i]}});
    return r;
}

Report selfcheck() {
    Report r;
    r.title = "selfcheck";

    const oracle::BernoulliTable bt(24);
    bool rec = bt.number(1) == make_rational(-1, 2);
    for (int k = 1; k < bt.max(); ++k) {
        Rational s = 0;
        for (int j = 0; j <= k; ++j) {
            Integer c;
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k + 1), static_cast<unsigned long>(j));
            s += Rational(c) * bt.number(j);
        }
        rec = rec && s == 0;
    }
    r.add("bernoulli recurrence up to 24", rec);

    r.add("L(chi_-4, 0) = 1/2", oracle::dirichlet_L(oracle::kronecker_character(-4), 0) ==
                                    CycNumber::rational(make_rational(1, 2), 1));
    r.add("L(chi_-3, 0) = 1/3", oracle::dirichlet_L(oracle::kronecker_character(-3), 0) ==
                                    CycNumber::rational(make_rational(1, 3), 1));

    for (int64_t q : {3, 5, 7, 11, 13}) {
        bool ok = true;
        ojson bad = ojson::array();
        for (int64_t j = 1; j < q - 1; ++j) {
            oracle::DirichletCharacter chi = oracle::power_character(q, j);
            for (int k = 0; k <= 6; ++k) {
                bool forced = chi.parity() == (k % 2 == 0 ? 1 : -1);
                bool zero = oracle::dirichlet_L(chi, k).is_zero();
                if (forced && !zero) {
                    ok = false;
                    bad.push_back({j, k});
                }
            }
        }
        r.add("parity zeros mod " + std::to_string(q), ok, ojson{{"failing_j_k", bad}});
    }

    for (Check& c : verify_rational_lerch(12, 6).checks) r.checks.push_back(std::move(c));
    const std::vector<int> ks{0, 1, 2};
    for (auto [d, q] : std::vector<std::pair<int64_t, int64_t>>{{5, 3}, {8, 3}, {5, 7}, {13, 3}})
        for (Check& c : verify_base_change(d, q, (q - 1) / 2, ks).checks) r.checks.push_back(std::move(c));
    return r;
}

}  // namespace shintani
