#include "helpers.hpp"

#include "shintani/error.hpp"
#include "shintani/genfun.hpp"

#include <doctest.h>

#include <random>

using namespace shintani;
using testing::el;

namespace {

Cone cone(std::vector<FieldElement> g) { return Cone{std::move(g)}; }

}  // namespace

TEST_SUITE("genfun") {

TEST_CASE("generating function of the rational ray is t/(1-t)") {
    FieldSpec q = FieldSpec::rational();
    ConeRatFunc g = generating_function(q, cone({FieldElement::from_int(1)}));
    CHECK(g.numerator == LaurentPoly::monomial({1, 0}));
    CHECK(g.denominator == std::map<Coords, int>{{{1, 0}, 1}});
    LaurentPoly s = series_expand(q, g, 6);
    LaurentPoly expect;
    for (int64_t n = 1; n <= 6; ++n) expect.add_term({n, 0}, FieldElement::from_int(1));
    CHECK(s == expect);
}

TEST_CASE("generating function of the standard cone over Q(sqrt5)") {
    FieldSpec f = FieldSpec::quadratic(5);
    FieldElement one = FieldElement::from_int(1), eps = fundamental_totally_positive_unit(f);
    ConeRatFunc g = generating_function(f, cone({one, eps}));
    CHECK(g.numerator == LaurentPoly::monomial({1, 0}));
    CHECK(g.denominator == std::map<Coords, int>{{{1, 0}, 1}, {{1, 1}, 1}});
    CHECK(rational_equal(g, generating_function(f, cone({eps, one}))));
    auto j = g.to_json();
    CHECK(j.contains("numerator"));
    CHECK(j.contains("denominator"));
    CHECK(j.contains("weight"));
}

TEST_CASE("norm derivation on monomials") {
    FieldSpec f = FieldSpec::quadratic(8);
    FieldElement a = el(f, 3, 1);  // norm 7
    ConeRatFunc m;
    m.numerator = LaurentPoly::monomial(a.coords(), FieldElement::from_int(2));
    m.weight = {0, 0};
    ConeRatFunc d = differentiate(f, Derivation::Norm, m);
    CHECK(d.numerator == LaurentPoly::monomial(a.coords(), FieldElement::from_int(14)));
    CHECK(d.weight == std::vector<int>{-1, -1});
    ConeRatFunc d1 = differentiate(f, Derivation::Tau1, m);
    CHECK(d1.numerator == LaurentPoly::monomial(a.coords(), a * Rational(2)));
    ConeRatFunc d2 = differentiate(f, Derivation::Tau2, d1);
    CHECK(rational_equal(d2, d));
}

TEST_CASE("derivatives commute with series expansion") {
    FieldSpec f = FieldSpec::quadratic(5);
    FieldElement one = FieldElement::from_int(1), eps = fundamental_totally_positive_unit(f);
    ConeRatFunc g = generating_function(f, cone({one, one + eps}));
    const int64_t bound = 14;
    LaurentPoly s = series_expand(f, g, bound);
    for (Derivation d : {Derivation::Tau1, Derivation::Tau2, Derivation::Norm}) {
        LaurentPoly lhs = series_expand(f, differentiate(f, d, g), bound);
        CHECK(lhs == differentiate_terms(f, d, s));
    }
    LaurentPoly twice = series_expand(f, differentiate(f, std::vector<int>{2, 1}, g), bound);
    LaurentPoly by_terms =
        differentiate_terms(f, Derivation::Tau2, differentiate_terms(f, Derivation::Tau1, differentiate_terms(f, Derivation::Tau1, s)));
    CHECK(twice == by_terms);
}

TEST_CASE("unit translates") {
    FieldSpec f = FieldSpec::quadratic(13);
    FieldElement one = FieldElement::from_int(1), eps = fundamental_totally_positive_unit(f);
    Cone s = cone({one, eps});
    Cone moved = cone({eps, eps * eps});
    CHECK(rational_equal(generating_function(f, moved), substitute_unit(f, generating_function(f, s), eps)));
}

TEST_CASE("cocycle relation") {
    FieldSpec f = FieldSpec::quadratic(5);
    FieldElement one = FieldElement::from_int(1), eps = fundamental_totally_positive_unit(f);
    std::vector<FieldElement> triple{one, one + eps, eps};
    CHECK(cocycle_defect(f, triple).numerator.is_zero());
    CHECK(cocycle_defect_series(f, triple, 12).is_zero());
    // negative control: the cone (1, eps) alone is not the sum over its subdivision minus one piece
    LaurentPoly whole = series_expand(f, generating_function(f, cone({one, eps})), 12);
    LaurentPoly left = series_expand(f, generating_function(f, cone({one, one + eps})), 12);
    LaurentPoly right = series_expand(f, generating_function(f, cone({one + eps, eps})), 12);
    CHECK(whole == left + right);
    CHECK_FALSE((whole - left).is_zero());
    CHECK_FALSE(right.is_zero());
}

TEST_CASE("cocycle relation on random triples") {
    for (int64_t d : {5, 8, 12, 13}) {
        FieldSpec f = FieldSpec::quadratic(d);
        std::vector<FieldElement> pool;
        for (const auto& x : small_totally_positive(f, 40))
            if (is_primitive(f, x)) pool.push_back(x);
        std::mt19937_64 rng(static_cast<uint64_t>(d));
        for (int t = 0; t < 25; ++t) {
            std::vector<FieldElement> tri;
            for (int i = 0; i < 3; ++i) tri.push_back(pool[rng() % pool.size()]);
            CAPTURE(tri[0].to_string());
            CAPTURE(tri[1].to_string());
            CAPTURE(tri[2].to_string());
            CHECK(cocycle_defect(f, tri).numerator.is_zero());
        }
    }
}

TEST_CASE("series expansion needs totally positive denominators") {
    FieldSpec f = FieldSpec::quadratic(5);
    ConeRatFunc bad;
    bad.numerator = LaurentPoly::monomial({0, 0});
    bad.denominator[{-1, 2}] = 1;
    CHECK_THROWS_AS(series_expand(f, bad, 5), Error);
    CHECK_THROWS_AS(cocycle_defect(f, {FieldElement::from_int(1)}), Error);
}

}
