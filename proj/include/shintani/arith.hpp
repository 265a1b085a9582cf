#pragma once

// Small integer helpers shared by every module. All int64 arithmetic that can
// grow with user input goes through the checked_* functions.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace shintani {

using Integer = mpz_class;
using Rational = mpq_class;

int64_t checked_add(int64_t a, int64_t b);
int64_t checked_sub(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

/// Representative of a mod n in [0, n). Requires n > 0.
int64_t floor_mod(int64_t a, int64_t n);
int64_t floor_div(int64_t a, int64_t n);

int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);
int64_t euler_phi(int64_t n);
bool is_prime(int64_t n);
bool is_squarefree(int64_t n);
std::vector<int64_t> divisors(int64_t n);
std::vector<int64_t> prime_factors(int64_t n);
int64_t pow_mod(int64_t base, int64_t exp, int64_t mod);
int64_t least_primitive_root(int64_t p);

int64_t to_int64(const Integer& z);
Rational make_rational(int64_t num, int64_t den = 1);

/// "p/q" with q > 1 omitted when the value is integral (GMP canonical form).
std::string rational_string(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace shintani
