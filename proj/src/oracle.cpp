#include "shintani/oracle.hpp"

#include "shintani/error.hpp"

#include <algorithm>
#include <numeric>

namespace shintani::oracle {

namespace {

Integer binomial(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

int64_t power_mod(int64_t b, int64_t e, int64_t m) {
    __int128 r = 1, x = ((b % m) + m) % m;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
    }
    return static_cast<int64_t>(r);
}

std::vector<int64_t> factor(int64_t n) {
    std::vector<int64_t> out;
    for (int64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

int64_t primitive_root(int64_t p) {
    if (p == 2) return 1;
    std::vector<int64_t> f = factor(p - 1);
    for (int64_t g = 2;; ++g) {
        bool ok = true;
        for (int64_t r : f)
            if (power_mod(g, (p - 1) / r, p) == 1) ok = false;
        if (ok) return g;
    }
}

Integer ipow(int64_t b, int e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
    return r;
}

}  // namespace

BernoulliTable::BernoulliTable(int max) {
    b_.assign(static_cast<size_t>(max) + 1, 0);
    b_[0] = 1;
    for (int n = 1; n <= max; ++n) {
        // sum_{j=0..n} C(n+1, j) B_j = 0
        Rational s = 0;
        for (int j = 0; j < n; ++j) s += Rational(binomial(n + 1, j)) * b_[static_cast<size_t>(j)];
        b_[static_cast<size_t>(n)] = -s / Rational(n + 1);
    }
}

const Rational& BernoulliTable::number(int n) const {
    require(n >= 0 && n <= max(), ErrorCode::InvalidArgument, "Bernoulli index out of range");
    return b_[static_cast<size_t>(n)];
}

Rational BernoulliTable::polynomial(int n, const Rational& x) const {
    Rational r = 0, xp = 1;
    for (int j = n; j >= 0; --j) {
        r += Rational(binomial(n, j)) * number(j) * xp;
        xp *= x;
    }
    return r;
}

CycNumber hurwitz_lerch(int64_t n, int64_t a, int k) {
    require(n >= 1 && k >= 0, ErrorCode::InvalidArgument, "need n >= 1 and k >= 0");
    require(((a % n) + n) % n != 0, ErrorCode::InvalidArgument, "the character is trivial");
    BernoulliTable bt(k + 1);
    std::vector<Rational> terms(static_cast<size_t>(n), 0);
    for (int64_t j = 1; j <= n; ++j)
        terms[static_cast<size_t>((((a * j) % n) + n) % n)] += bt.polynomial(k + 1, make_rational(j, n));
    CycNumber s = CycNumber::from_exponent_sums(n, terms);
    s *= -Rational(ipow(n, k)) / Rational(k + 1);
    return s;
}

bool DirichletCharacter::is_trivial() const {
    for (int64_t v : table)
        if (v > 0) return false;
    return true;
}

int DirichletCharacter::parity() const {
    int64_t v = table[static_cast<size_t>(modulus - 1)];
    require(v >= 0, ErrorCode::Internal, "-1 is always a unit");
    require(2 * v % level == 0, ErrorCode::Internal, "chi(-1) must be +-1");
    return v == 0 ? 1 : -1;
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& o) const {
    DirichletCharacter r;
    r.modulus = modulus / std::gcd(modulus, o.modulus) * o.modulus;
    r.level = level / std::gcd(level, o.level) * o.level;
    r.table.assign(static_cast<size_t>(r.modulus), -1);
    for (int64_t x = 0; x < r.modulus; ++x) {
        int64_t u = table[static_cast<size_t>(x % modulus)], v = o.table[static_cast<size_t>(x % o.modulus)];
        if (u < 0 || v < 0) continue;
        r.table[static_cast<size_t>(x)] = (u * (r.level / level) + v * (r.level / o.level)) % r.level;
    }
    return r;
}

DirichletCharacter power_character(int64_t q, int64_t j) {
    require(q >= 2 && factor(q).size() == 1, ErrorCode::InvalidArgument, "modulus must be prime");
    DirichletCharacter c;
    c.modulus = q;
    c.level = std::max<int64_t>(q - 1, 1);
    c.table.assign(static_cast<size_t>(q), -1);
    int64_t g = primitive_root(q), x = 1;
    for (int64_t e = 0; e < q - 1; ++e, x = x * g % q)
        c.table[static_cast<size_t>(x)] = (((j % c.level) + c.level) % c.level) * e % c.level;
    if (q == 2) c.table[1] = 0;
    return c;
}

int kronecker(int64_t d, int64_t n) {
    require(n > 0, ErrorCode::InvalidArgument, "kronecker needs n > 0");
    int r = 1;
    for (int64_t p : factor(n)) {
        if (p == 2) {
            if (d % 2 == 0) return 0;
            int64_t m = ((d % 8) + 8) % 8;
            r *= (m == 1 || m == 7) ? 1 : -1;
        } else {
            int64_t x = ((d % p) + p) % p;
            if (x == 0) return 0;
            r *= power_mod(x, (p - 1) / 2, p) == 1 ? 1 : -1;
        }
    }
    return r;
}

DirichletCharacter kronecker_character(int64_t disc) {
    DirichletCharacter c;
    c.modulus = disc < 0 ? -disc : disc;
    c.level = 2;
    c.table.assign(static_cast<size_t>(c.modulus), -1);
    for (int64_t a = 1; a <= c.modulus; ++a) {
        int s = kronecker(disc, a);
        if (s != 0) c.table[static_cast<size_t>(a % c.modulus)] = s > 0 ? 0 : 1;
    }
    return c;
}

CycNumber dirichlet_L(const DirichletCharacter& chi, int k) {
    require(k >= 0, ErrorCode::InvalidArgument, "k must be nonnegative");
    require(!chi.is_trivial(), ErrorCode::InvalidArgument, "the character is trivial");
    const int64_t q = chi.modulus;
    BernoulliTable bt(k + 1);
    std::vector<Rational> terms(static_cast<size_t>(chi.level), 0);
    for (int64_t a = 1; a <= q; ++a) {
        int64_t v = chi.table[static_cast<size_t>(a % q)];
        if (v < 0) continue;
        terms[static_cast<size_t>(v)] += bt.polynomial(k + 1, make_rational(a, q));
    }
    CycNumber b = CycNumber::from_exponent_sums(chi.level, terms);
    b *= Rational(ipow(q, k));  // B_{k+1,chi} = q^k sum
    b *= -Rational(1, k + 1);
    return b;
}

}  // namespace shintani::oracle
