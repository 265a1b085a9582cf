#pragma once

// Reference values from Bernoulli polynomials alone. Nothing here touches
// cones or generating functions.

#include "shintani/cyclotomic.hpp"

#include <cstdint>
#include <vector>

namespace shintani::oracle {

/// B_0 .. B_max with B_1 = -1/2.
class BernoulliTable {
  public:
    explicit BernoulliTable(int max);
    const Rational& number(int n) const;
    /// B_n(x) = sum_j C(n, j) B_j x^(n - j)
    Rational polynomial(int n, const Rational& x) const;
    int max() const { return static_cast<int>(b_.size()) - 1; }

  private:
    std::vector<Rational> b_;
};

/// L(zeta_n^a, -k) = -(n^k / (k + 1)) sum_{j=1..n} zeta_n^(a j) B_(k+1)(j / n).
CycNumber hurwitz_lerch(int64_t n, int64_t a, int k);

/// Dirichlet character of the given modulus with values zeta_level^table[a], -1 off (Z/q)^x.
struct DirichletCharacter {
    int64_t modulus = 1;
    int64_t level = 1;
    std::vector<int64_t> table;

    bool is_trivial() const;
    /// chi(-1) = +1 or -1
    int parity() const;
    DirichletCharacter operator*(const DirichletCharacter& o) const;
};

/// chi(g^a) = zeta_(q-1)^(j a) for g the least primitive root of the prime q.
DirichletCharacter power_character(int64_t q, int64_t j);

/// a -> (D / a).
DirichletCharacter kronecker_character(int64_t disc);

/// L(chi, -k) = -B_(k+1, chi) / (k + 1), B_(k, chi) = q^(k-1) sum_{a=1..q} chi(a) B_k(a / q).
CycNumber dirichlet_L(const DirichletCharacter& chi, int k);

/// Independent Kronecker symbol (d / n), n > 0, via factorization and Euler's criterion.
int kronecker(int64_t d, int64_t n);

}  // namespace shintani::oracle
