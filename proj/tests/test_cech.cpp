#include "helpers.hpp"

#include "shintani/cech.hpp"
#include "shintani/error.hpp"
#include "shintani/zeta.hpp"

#include <doctest.h>

using namespace shintani;
using testing::el;
using testing::rat;

namespace {

ResidueRing ring(const FieldSpec& f, int64_t n) { return ResidueRing(IdealSpec::principal(f, FieldElement::from_int(n))); }

QuotientComplex complex_for(const Fan& fan, const TorsionPoint& xi) {
    return build_quotient_complex(adapt_fan_to(fan, xi), xi);
}

CycNumber paired_value(const QuotientComplex& c, const TorsionPoint& xi, int k) {
    CycNumber p = pairing(shintani_cochain(c, xi, k), c) * c.period_factor;
    return minimal_level_form(restrict_to_subfield(p, xi.order()));
}

}  // namespace

TEST_SUITE("cech") {

TEST_CASE("quotient complexes over Q(sqrt5) mod 2") {
    FieldSpec f = FieldSpec::quadratic(5);
    Fan fan = standard_fan(f);
    for (const auto& xi : torsion_points(ring(f, 2))) {
        if (xi.is_trivial()) continue;
        CAPTURE(xi.to_string());
        QuotientComplex c = complex_for(fan, xi);
        CHECK(boundary_squares_to_zero(c));
        auto h = homology(c);
        REQUIRE(h.size() == 2);
        CHECK(h[0] == HomologyGroup{1, {}});
        CHECK(h[1] == HomologyGroup{1, {}});
        CHECK(fundamental_class_is_cycle(c));
        CHECK(c.vertices.size() == c.cell_count());
        for (size_t j = 0; j < c.cell_count(); ++j)
            if (c.ends[j][0] != c.ends[j][1]) CHECK_FALSE(fundamental_class_is_cycle(c, j));
    }
}

TEST_CASE("rational complexes") {
    FieldSpec q = FieldSpec::rational();
    TorsionPoint xi = make_torsion_point(ring(q, 5), 2, 0);
    QuotientComplex c = complex_for(standard_fan(q), xi);
    auto h = homology(c);
    REQUIRE(h.size() == 1);
    CHECK(h[0] == HomologyGroup{1, {}});
    CHECK(fundamental_class_is_cycle(c));
    CHECK(boundary_squares_to_zero(c));
    CHECK(paired_value(c, xi, 2) == lerch_value(standard_fan(q), xi, 2));
}

TEST_CASE("homology survives subdivision") {
    FieldSpec f = FieldSpec::quadratic(8);
    Fan fan = standard_fan(f);
    Fan sub = subdivide(fan, 0, el(f, 2, 1));
    for (const auto& xi : torsion_points(ring(f, 3))) {
        if (xi.is_trivial()) continue;
        QuotientComplex a = complex_for(fan, xi), b = complex_for(sub, xi);
        CHECK(homology(a) == homology(b));
        CHECK(b.cell_count() >= a.cell_count());
    }
}

TEST_CASE("pairing with the Shintani cochain is the Lerch value") {
    for (int64_t d : {5, 8, 12, 13}) {
        FieldSpec f = FieldSpec::quadratic(d);
        Fan fan = standard_fan(f);
        for (const auto& xi : torsion_points(ring(f, 3))) {
            if (xi.is_trivial()) continue;
            QuotientComplex c = complex_for(fan, xi);
            for (int k = 0; k <= 2; ++k) CHECK(paired_value(c, xi, k) == lerch_value(fan, xi, k));
        }
    }
}

TEST_CASE("pairing is linear and vanishes on zero") {
    FieldSpec f = FieldSpec::quadratic(5);
    TorsionPoint xi = make_torsion_point(ring(f, 3), 1, 0);
    QuotientComplex c = complex_for(standard_fan(f), xi);
    std::vector<CycNumber> zero(c.cell_count());
    CHECK(pairing(zero, c).is_zero());
    auto eta = shintani_cochain(c, xi, 1);
    auto eta2 = eta;
    for (auto& x : eta2) x *= Rational(3);
    CHECK(pairing(eta2, c) == pairing(eta, c) * Rational(3));
    CHECK_THROWS_AS(pairing(std::vector<CycNumber>(c.cell_count() + 1), c), Error);
}

TEST_CASE("indicator coboundaries pair to zero") {
    FieldSpec f = FieldSpec::quadratic(5);
    TorsionPoint xi = make_torsion_point(ring(f, 3), 1, 0);
    QuotientComplex c = complex_for(standard_fan(f), xi);
    for (size_t v = 0; v < c.vertices.size(); ++v) {
        std::vector<CycNumber> ind(c.vertices.size());
        ind[v] = rat(1);
        CHECK(pairing(coboundary(c, ind), c).is_zero());
    }
}

TEST_CASE("seeded coboundary trials") {
    FieldSpec f = FieldSpec::quadratic(5);
    Fan fan = standard_fan(f);
    for (const auto& xi : torsion_points(ring(f, 2))) {
        if (xi.is_trivial()) continue;
        CoboundaryReport r = coboundary_invariance(fan, xi, 0, 100, 42);
        CHECK(r.trials == 100);
        CHECK(r.failures == 0);
    }
    CHECK_THROWS_AS(coboundary_invariance(standard_fan(FieldSpec::rational()), TorsionPoint{2, 1, 0}, 0, 1, 1), Error);
}

TEST_CASE("reindexing a cell by the isotropy unit leaves the pairing alone") {
    FieldSpec f = FieldSpec::quadratic(13);
    Fan fan = standard_fan(f);
    for (const auto& xi : torsion_points(ring(f, 3))) {
        if (xi.is_trivial()) continue;
        Fan a = adapt_fan_to(fan, xi);
        QuotientComplex c = build_quotient_complex(a, xi);
        Fan moved = a;
        for (auto& g : moved.cones[0].gens) g = a.unit * g;
        QuotientComplex m = build_quotient_complex(moved, xi);
        for (int k = 0; k <= 1; ++k)
            CHECK(pairing(shintani_cochain(c, xi, k), c) == pairing(shintani_cochain(m, xi, k), m));
        CHECK(homology(m) == homology(c));
    }
}

TEST_CASE("non-adapted fans are rejected") {
    FieldSpec f = FieldSpec::quadratic(5);
    TorsionPoint xi = make_torsion_point(ring(f, 2), 0, 1);  // xi(1) = 1
    CHECK_THROWS_AS(build_quotient_complex(standard_fan(f), xi), Error);
    TorsionPoint eta = make_torsion_point(ring(f, 2), 1, 1);
    Fan a = adapt_fan_to(standard_fan(f), eta);
    a.unit = fundamental_totally_positive_unit(f);  // does not fix eta
    CHECK_THROWS_AS(build_quotient_complex(a, eta), Error);
}

}
