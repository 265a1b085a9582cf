#pragma once

// Exact arithmetic in Q(zeta_N): dense rational coefficient vectors of length
// phi(N) in the power basis 1, zeta, ..., zeta^(phi(N)-1), reduced modulo the
// N-th cyclotomic polynomial. Binary operations lift both operands to the lcm
// of their levels.

#include "shintani/arith.hpp"

#include <json.hpp>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace shintani {

/// Coefficients of Phi_n, constant term first. Cached; thread-safe.
const std::vector<Integer>& cyclotomic_polynomial(int64_t n);

class CycNumber {
  public:
    CycNumber() : CycNumber(1) {}
    explicit CycNumber(int64_t level);

    static CycNumber rational(const Rational& r, int64_t level = 1);
    /// zeta_level^e
    static CycNumber zeta_power(int64_t level, int64_t e);
    /// sum_e terms[e] zeta_level^e with terms.size() == level
    static CycNumber from_exponent_sums(int64_t level, const std::vector<Rational>& terms);
    /// Takes ownership of an arbitrary-degree polynomial in zeta_level and reduces it.
    static CycNumber from_polynomial(int64_t level, std::vector<Rational> poly);

    int64_t level() const { return level_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    /// Re-express at a multiple of the current level.
    CycNumber lift(int64_t new_level) const;

    bool is_zero() const;
    bool is_rational() const;
    /// Requires is_rational().
    Rational rational_value() const;

    CycNumber operator-() const;
    CycNumber& operator+=(const CycNumber& o);
    CycNumber& operator-=(const CycNumber& o);
    CycNumber& operator*=(const CycNumber& o);
    CycNumber& operator*=(const Rational& r);
    friend CycNumber operator+(CycNumber x, const CycNumber& y) { return x += y; }
    friend CycNumber operator-(CycNumber x, const CycNumber& y) { return x -= y; }
    friend CycNumber operator*(CycNumber x, const CycNumber& y) { return x *= y; }
    friend CycNumber operator*(CycNumber x, const Rational& r) { return x *= r; }
    friend CycNumber operator/(const CycNumber& x, const CycNumber& y) { return x * y.inverse(); }
    CycNumber inverse() const;

    /// Equality of the underlying algebraic numbers (levels may differ).
    bool operator==(const CycNumber& o) const;
    bool operator!=(const CycNumber& o) const { return !(*this == o); }
    /// Same level and same coefficient vector.
    bool identical(const CycNumber& o) const { return level_ == o.level_ && c_ == o.c_; }

    /// Canonical rendering as a Q-linear combination of powers of zeta_N.
    std::string to_string() const;
    /// Value under zeta_N -> exp(2 pi i / N). Diagnostics only.
    std::complex<double> approximate() const;

    nlohmann::ordered_json to_json() const;
    static CycNumber from_json(const nlohmann::json& j);

  private:
    void reduce_from(std::vector<Rational> poly);

    int64_t level_ = 1;
    std::vector<Rational> c_;
};

/// Kronecker symbol (d / n) for n >= 0.
int kronecker_symbol(int64_t d, int64_t n);

/// Quadratic Gauss sum sum_{a mod D} (D/a) zeta_D^a at level N; squares to D.
CycNumber sqrt_disc(int64_t disc, int64_t level);

/// zeta_N -> zeta_N^j; requires gcd(j, N) = 1.
CycNumber galois_apply(int64_t j, const CycNumber& x);

/// Re-expresses x in Q(zeta_n); throws NotInSubfield when x is not there.
CycNumber restrict_to_subfield(const CycNumber& x, int64_t n);

/// The same number at the smallest level containing it.
CycNumber minimal_level_form(const CycNumber& x);

}  // namespace shintani
