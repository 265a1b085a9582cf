#include "helpers.hpp"

#include "shintani/error.hpp"
#include "shintani/field.hpp"

#include <doctest.h>

#include <cmath>

using namespace shintani;
using testing::el;

TEST_SUITE("field") {

TEST_CASE("totally positive") {
    FieldSpec f = FieldSpec::quadratic(5);
    CHECK(is_totally_positive(f, el(f, 1, 1)));              // (3+sqrt5)/2
    CHECK_FALSE(is_totally_positive(f, el(f, -1, 2)));       // sqrt5
    CHECK_FALSE(is_totally_positive(FieldSpec::rational(), FieldElement::from_int(0)));
    CHECK_FALSE(is_totally_positive(f, FieldElement::from_int(0)));
    CHECK(is_totally_positive(FieldSpec::rational(), FieldElement::from_int(3)));
}

TEST_CASE("primitivity by coordinate gcd") {
    FieldSpec f = FieldSpec::quadratic(5);
    FieldElement eps = fundamental_totally_positive_unit(f);
    FieldElement one_plus = FieldElement::from_int(1) + eps;
    CHECK(one_plus.coords() == Coords{2, 1});
    CHECK(is_primitive(f, one_plus));
    CHECK_FALSE(is_primitive(f, FieldElement::from_int(2)));
    CHECK_FALSE(is_primitive(FieldSpec::rational(), FieldElement::from_int(3)));
    CHECK(is_primitive(FieldSpec::rational(), FieldElement::from_int(1)));
    CHECK(primitive_part(el(f, 4, 6)) == el(f, 2, 3));
}

TEST_CASE("fundamental totally positive units") {
    struct Row {
        int64_t disc;
        Coords eps;
    };
    // (3+sqrt5)/2 = 1+w, 3+2sqrt2, 2+sqrt3, (11+3sqrt13)/2 = 4+3w
    for (Row r : {Row{5, {1, 1}}, Row{8, {3, 2}}, Row{12, {2, 1}}, Row{13, {4, 3}}}) {
        CAPTURE(r.disc);
        FieldSpec f = FieldSpec::quadratic(r.disc);
        FieldElement e = fundamental_totally_positive_unit(f);
        CHECK(e.coords() == r.eps);
        CHECK(e.norm() == 1);
        CHECK(is_totally_positive(f, e));
        CHECK(approximate(f, 0, e) > 1);
    }
    CHECK(fundamental_unit(FieldSpec::quadratic(5)).norm() == -1);
    CHECK(fundamental_unit(FieldSpec::quadratic(12)).norm() == 1);
}

TEST_CASE("small conjugates of large units keep relative precision") {
    FieldSpec f = FieldSpec::quadratic(13);
    FieldElement e = fundamental_totally_positive_unit(f);
    FieldElement u = FieldElement::from_int(1);
    for (int i = 0; i < 12; ++i) u = u * e;
    long double prod = approximate(f, 0, u) * approximate(f, 1, u);
    CHECK(approximate(f, 1, u) > 0);
    CHECK(std::fabs(prod - 1) < 1e-12L);
}

TEST_CASE("inverse different is trace dual to O") {
    for (int64_t d : {5, 8, 12, 13}) {
        FieldSpec f = FieldSpec::quadratic(d);
        auto basis = inverse_different_basis(f);
        REQUIRE(basis.size() == 2);
        for (const FieldElement& x : basis)
            for (const FieldElement& y : {el(f, 1, 0), el(f, 0, 1)}) CHECK((x * y).trace().get_den() == 1);
        // the dual lattice has covolume 1/D relative to O: det of traces is +-1
        Rational t00 = basis[0].trace(), t01 = (basis[0] * el(f, 0, 1)).trace();
        Rational t10 = basis[1].trace(), t11 = (basis[1] * el(f, 0, 1)).trace();
        CHECK(Rational(abs(Rational(t00 * t11 - t01 * t10))) == 1);
    }
    auto q = inverse_different_basis(FieldSpec::rational());
    REQUIRE(q.size() == 1);
    CHECK(q[0] == FieldElement::from_int(1));
}

TEST_CASE("swapped embeddings exchange signs") {
    FieldSpec f = FieldSpec::quadratic(5);
    FieldSpec g = f.with_swapped_embeddings();
    FieldElement r5 = el(f, -1, 2);
    CHECK(to_int(embedded_sign(f, 0, r5)) == 1);
    CHECK(to_int(embedded_sign(f, 1, r5)) == -1);
    CHECK(to_int(embedded_sign(g, 0, r5)) == -1);
    CHECK(to_int(embedded_sign(g, 1, r5)) == 1);
}

TEST_CASE("parsing and arithmetic") {
    FieldSpec f = FieldSpec::quadratic(8);
    FieldElement x = parse_element(f, "3+2*w");
    CHECK(x == el(f, 3, 2));
    CHECK(x * x.conj() == FieldElement::from_int(1));
    CHECK(parse_element(f, "[1,-1]") == el(f, 1, -1));
    CHECK((x / x) == FieldElement::from_int(1));
    CHECK_THROWS_AS(parse_element(FieldSpec::rational(), "w"), Error);
    CHECK_THROWS_AS(parse_element(f, "3+"), Error);
    CHECK_THROWS_AS(FieldSpec::from_disc(7), Error);   // not a fundamental discriminant
    CHECK_THROWS_AS(FieldSpec::from_disc(-4), Error);  // not real
    CHECK_THROWS_AS(FieldSpec::of_degree(3), Error);
}

}
