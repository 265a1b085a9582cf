#include "helpers.hpp"

#include "shintani/error.hpp"
#include "shintani/residue.hpp"

#include <doctest.h>

#include <set>

using namespace shintani;
using testing::el;
using testing::rat;

namespace {

IdealSpec principal(const FieldSpec& f, int64_t n) { return IdealSpec::principal(f, FieldElement::from_int(n)); }

}  // namespace

TEST_SUITE("residue") {

TEST_CASE("ideals") {
    FieldSpec f = FieldSpec::quadratic(5);
    CHECK(principal(f, 2).norm() == 4);
    CHECK(principal(f, 7).norm() == 49);
    IdealSpec p = IdealSpec::parse(f, "2+w");  // norm 4 + 2 - 1 = 5
    CHECK(p.norm() == 5);
    CHECK(p.contains(el(f, 2, 1).coords()));
    CHECK_FALSE(p.contains({1, 0}));
    CHECK(IdealSpec::parse(f, "[[2,0],[0,2]]") == principal(f, 2));
    CHECK_THROWS_AS(IdealSpec::parse(f, "[[2,1],[0,2]]"), Error);  // not closed under w
    CHECK(principal(FieldSpec::rational(), 6).norm() == 6);
    CHECK(principal(f, 1).is_unit_ideal());
}

TEST_CASE("torsion points") {
    FieldSpec q = FieldSpec::rational();
    auto pts = torsion_points(ResidueRing(principal(q, 4)));
    REQUIRE(pts.size() == 4);
    std::set<int64_t> values;
    for (const auto& xi : pts) values.insert(xi.exponent_at({1, 0}) * (4 / xi.level));
    CHECK(values == std::set<int64_t>{0, 1, 2, 3});

    FieldSpec f = FieldSpec::quadratic(5);
    ResidueRing r2(principal(f, 2));
    CHECK(r2.snf().diagonal() == std::vector<int64_t>{2, 2});
    auto p2 = torsion_points(r2);
    CHECK(p2.size() == 4);
    for (int64_t n : {3, 5, 7}) {
        ResidueRing r(principal(f, n));
        auto all = torsion_points(r);
        CHECK(all.size() == static_cast<size_t>(r.size()));
        CHECK(std::count_if(all.begin(), all.end(), [](const TorsionPoint& x) { return x.is_trivial(); }) == 1);
        std::set<TorsionPoint> uniq(all.begin(), all.end());
        CHECK(uniq.size() == all.size());
    }
    ResidueRing r5(IdealSpec::parse(f, "2+w"));
    CHECK(make_torsion_point(r5, 2, 1).level == 5);
    CHECK_THROWS_AS(make_torsion_point(r5, 1, 0), Error);
    CHECK_THROWS_AS(make_torsion_point(r5, 3, 1), Error);
}

TEST_CASE("unit action and isotropy") {
    FieldSpec f = FieldSpec::quadratic(5);
    FieldElement eps = fundamental_totally_positive_unit(f);
    ResidueRing r2(principal(f, 2));
    TorsionPoint one{2, 0, 0};
    CHECK(unit_action(f, eps, one) == one);
    CHECK(isotropy_index(f, one) == 1);
    for (const auto& xi : torsion_points(r2)) {
        int64_t e = isotropy_index(f, xi);
        CHECK(3 % e == 0);
        TorsionPoint y = xi;
        for (int64_t i = 0; i < e; ++i) y = unit_action(f, eps, y);
        CHECK(y == xi);
        if (!xi.is_trivial()) CHECK(e == 3);
    }
    auto orbits = orbit_representatives(r2, true);
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].size == 3);

    FieldSpec q = FieldSpec::rational();
    ResidueRing r5(principal(q, 5));
    auto qo = orbit_representatives(r5, false);
    CHECK(qo.size() == 5);
    for (const auto& o : qo) CHECK(o.size == 1);
    CHECK(isotropy_index(q, make_torsion_point(r5, 2, 0)) == 1);
}

TEST_CASE("orbit sizes add up") {
    for (int64_t d : {5, 8, 12, 13})
        for (int64_t n : {2, 3, 4, 5}) {
            FieldSpec f = FieldSpec::quadratic(d);
            ResidueRing r(principal(f, n));
            int64_t total = 0;
            for (const auto& o : orbit_representatives(r, false)) {
                CHECK(o.size == isotropy_index(f, o.representative));
                total += o.size;
            }
            CHECK(total == r.size());
        }
}

TEST_CASE("conductors of torsion points") {
    FieldSpec f = FieldSpec::quadratic(5);
    ResidueRing r(principal(f, 4));
    int64_t primitive = 0;
    for (const auto& xi : torsion_points(r)) {
        IdealSpec c = torsion_conductor(r, xi);
        CHECK(c.contains({4, 0}));
        if (is_primitive_torsion(r, xi)) {
            ++primitive;
            CHECK(c == r.ideal());
        }
    }
    CHECK(primitive == 16 - 4);  // characters of O/4 not factoring through O/2
}

TEST_CASE("unit groups") {
    FieldSpec f = FieldSpec::quadratic(5);
    UnitGroup u7 = unit_group_generators(ResidueRing(principal(f, 7)));  // F_49^x
    CHECK(u7.orders == std::vector<int64_t>{48});
    UnitGroup u2 = unit_group_generators(ResidueRing(principal(f, 2)));  // F_4^x
    CHECK(u2.orders == std::vector<int64_t>{3});
    FieldSpec g = FieldSpec::quadratic(13);
    UnitGroup u3 = unit_group_generators(ResidueRing(principal(g, 3)));  // F_3^x x F_3^x
    CHECK(u3.orders == std::vector<int64_t>{2, 2});
    UnitGroup q8 = unit_group_generators(ResidueRing(principal(FieldSpec::rational(), 8)));
    CHECK(q8.orders == std::vector<int64_t>{2, 2});
    ResidueRing r(principal(f, 7));
    CHECK(r.units().size() == 48);
}

TEST_CASE("character validation") {
    FieldSpec f = FieldSpec::quadratic(5);
    HeckeCharacter legendre = HeckeCharacter::norm_character(f, 3, 1);
    CharacterReport rep = validate_character(legendre);
    CHECK(rep.valid());
    CHECK(rep.primitive);

    // chi(eps) != 1: on O/2 = F_4 any nontrivial character of F_4^x sends eps = 1+w to a cube root != 1
    ResidueRing r2(principal(f, 2));
    UnitGroup ug = unit_group_generators(r2);
    HeckeCharacter bad = HeckeCharacter::from_generator_values(r2, 3, ug.generators, {1});
    CharacterReport br = validate_character(bad);
    CHECK_FALSE(br.trivial_on_units);
    CHECK_FALSE(br.valid());

    // inflate the mod-3 Legendre character of Q to modulus 9: imprimitive
    FieldSpec q = FieldSpec::rational();
    ResidueRing r9(principal(q, 9));
    std::vector<int64_t> table(9, -1);
    for (int64_t a = 0; a < 9; ++a)
        if (a % 3 != 0) table[static_cast<size_t>(r9.index_of({a, 0}))] = (a % 3 == 1) ? 0 : 1;
    CharacterReport ir = validate_character(HeckeCharacter(r9, 2, table));
    CHECK(ir.valid());
    CHECK_FALSE(ir.primitive);

    // D=5 and q=5 ramify: chi_1 o N has smaller conductor than (5)
    CHECK_FALSE(validate_character(HeckeCharacter::norm_character(f, 5, 2)).primitive);
}

TEST_CASE("character json") {
    FieldSpec f = FieldSpec::quadratic(5);
    HeckeCharacter chi = HeckeCharacter::norm_character(f, 7, 3);
    auto j = chi.to_json();
    HeckeCharacter back = HeckeCharacter::from_json(f, nlohmann::json::parse(j.dump()));
    CHECK(back.table() == chi.table());
    CHECK(back.modulus() == chi.modulus());
    HeckeCharacter viaspec =
        HeckeCharacter::from_json(f, nlohmann::json::parse(R"({"norm_character":{"q":7,"j":3}})"));
    CHECK(viaspec.table() == chi.table());
    CHECK_THROWS_AS(HeckeCharacter::from_json(f, nlohmann::json::parse(R"({"conductor":"7"})")), Error);
}

TEST_CASE("fourier coefficients") {
    FieldSpec f = FieldSpec::quadratic(5);
    HeckeCharacter chi = HeckeCharacter::norm_character(f, 3, 1);
    const ResidueRing& r = chi.ring();
    CHECK(fourier_coefficient(chi, TorsionPoint{3, 0, 0}).is_zero());
    for (const auto& xi : torsion_points(r)) {
        CycNumber c = fourier_coefficient(chi, xi);
        if (!is_primitive_torsion(r, xi)) CHECK(c.is_zero());
    }
    // inversion on Q mod 5
    FieldSpec q = FieldSpec::rational();
    HeckeCharacter chi5 = HeckeCharacter::norm_character(q, 5, 1);
    auto pts = torsion_points(chi5.ring());
    for (int64_t a = 0; a < 5; ++a) {
        CycNumber s;
        for (const auto& xi : pts) s += fourier_coefficient(chi5, xi) * CycNumber::zeta_power(xi.level, xi.exponent_at({a, 0}));
        CHECK(s == chi5.value_at({a, 0}));
    }
}

}
