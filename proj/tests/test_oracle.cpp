#include "helpers.hpp"

#include "shintani/error.hpp"
#include "shintani/oracle.hpp"

#include <doctest.h>

using namespace shintani;
using namespace shintani::oracle;
using testing::rat;

TEST_SUITE("oracle") {

TEST_CASE("Bernoulli numbers") {
    BernoulliTable b(12);
    CHECK(b.number(0) == 1);
    CHECK(b.number(1) == make_rational(-1, 2));
    CHECK(b.number(2) == make_rational(1, 6));
    CHECK(b.number(3) == 0);
    CHECK(b.number(4) == make_rational(-1, 30));
    CHECK(b.number(12) == make_rational(-691, 2730));
    CHECK(b.polynomial(2, make_rational(1, 3)) == make_rational(1, 9) - make_rational(1, 3) + make_rational(1, 6));
    CHECK_THROWS_AS(b.number(13), Error);
}

TEST_CASE("Hurwitz formula") {
    CHECK(hurwitz_lerch(2, 1, 0) == rat(-1, 2));
    CHECK(hurwitz_lerch(2, 1, 1) == rat(-1, 4));
    CHECK(hurwitz_lerch(4, 1, 0) == (rat(-1) + CycNumber::zeta_power(4, 1)) * make_rational(1, 2));
    CHECK(hurwitz_lerch(6, 2, 3) == hurwitz_lerch(3, 1, 3));
    CHECK_THROWS_AS(hurwitz_lerch(5, 5, 0), Error);
}

TEST_CASE("Dirichlet L-values") {
    CHECK(dirichlet_L(kronecker_character(-4), 0) == rat(1, 2));
    CHECK(dirichlet_L(kronecker_character(-3), 0) == rat(1, 3));
    CHECK(dirichlet_L(power_character(3, 1), 0) == rat(1, 3));
    // B_{2, chi_5} = 4/5, L(chi_5, -1) = -2/5
    CHECK(dirichlet_L(kronecker_character(5), 1) == rat(-2, 5));
    CHECK(dirichlet_L(power_character(5, 2), 1) == rat(-2, 5));
    CHECK(dirichlet_L(kronecker_character(-4), 2) == rat(-1, 2));
    CHECK_THROWS_AS(dirichlet_L(power_character(5, 0), 0), Error);
}

TEST_CASE("characters") {
    DirichletCharacter c = power_character(7, 1);
    CHECK(c.level == 6);
    CHECK(c.parity() == -1);
    CHECK(power_character(7, 2).parity() == 1);
    DirichletCharacter t = power_character(3, 1) * kronecker_character(5);
    CHECK(t.modulus == 15);
    CHECK(t.parity() == -1);
    CHECK(kronecker(5, 3) == -1);
    CHECK(kronecker(8, 3) == -1);
    CHECK(kronecker(13, 3) == 1);
    CHECK(kronecker(12, 6) == 0);
    CHECK_THROWS_AS(power_character(9, 1), Error);
}

TEST_CASE("trivial zeros") {
    for (int64_t q : {3, 5, 7, 11})
        for (int64_t j = 1; j < q - 1; ++j)
            for (int k = 0; k <= 5; ++k) {
                DirichletCharacter chi = power_character(q, j);
                if (chi.parity() == (k % 2 == 0 ? 1 : -1)) CHECK(dirichlet_L(chi, k).is_zero());
                else CHECK_FALSE(dirichlet_L(chi, k).is_zero());
            }
}

}
