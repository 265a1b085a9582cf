#include "shintani/arith.hpp"

#include "shintani/error.hpp"

#include <cstdlib>
#include <numeric>

namespace shintani {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "int64 overflow in addition");
    return r;
}

int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "int64 overflow in subtraction");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "int64 overflow in multiplication");
    return r;
}

int64_t floor_mod(int64_t a, int64_t n) {
    int64_t r = a % n;
    return r < 0 ? r + n : r;
}

int64_t floor_div(int64_t a, int64_t n) {
    int64_t q = a / n;
    if ((a % n != 0) && ((a < 0) != (n < 0))) --q;
    return q;
}

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

int64_t lcm64(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(std::llabs(a) / gcd64(a, b), std::llabs(b));
}

std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> out;
    n = std::llabs(n);
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

int64_t euler_phi(int64_t n) {
    int64_t r = n;
    for (int64_t p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

bool is_squarefree(int64_t n) {
    n = std::llabs(n);
    for (int64_t p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0) return false;
    return true;
}

std::vector<int64_t> divisors(int64_t n) {
    std::vector<int64_t> lo, hi;
    for (int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d) hi.push_back(n / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

int64_t pow_mod(int64_t base, int64_t exp, int64_t mod) {
    __int128 result = 1 % mod;
    __int128 b = floor_mod(base, mod);
    while (exp > 0) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<int64_t>(result);
}

int64_t least_primitive_root(int64_t p) {
    require(is_prime(p), ErrorCode::InvalidArgument, "primitive root requested for non-prime modulus");
    if (p == 2) return 1;
    auto factors = prime_factors(p - 1);
    for (int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (int64_t f : factors) {
            if (pow_mod(g, (p - 1) / f, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    fail(ErrorCode::Internal, "no primitive root found");
}

int64_t to_int64(const Integer& z) {
    require(z.fits_slong_p(), ErrorCode::Overflow, "integer does not fit in int64");
    return z.get_si();
}

Rational make_rational(int64_t num, int64_t den) {
    Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    q.canonicalize();
    return q;
}

std::string rational_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) fail(ErrorCode::Parse, "malformed rational '" + s + "'");
    if (q.get_den() == 0) fail(ErrorCode::Parse, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace shintani
