#include "shintani/cyclotomic.hpp"

#include "shintani/error.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace shintani {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division of integer polynomials by a monic divisor
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
    const size_t dn = den.size() - 1;
    std::vector<Integer> q(num.size() - dn, 0);
    for (size_t i = num.size(); i-- > dn;) {
        Integer c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    for (size_t i = 0; i < dn; ++i)
        require(num[i] == 0, ErrorCode::Internal, "cyclotomic division left a remainder");
    return q;
}

// quotient and remainder over Q
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    Poly q;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, 0);
    const Rational& lead = b.back();
    for (size_t i = a.size(); i-- >= b.size();) {
        if (a[i] == 0) {
            if (i == b.size() - 1) break;
            continue;
        }
        Rational c = a[i] / lead;
        q[i - b.size() + 1] = c;
        for (size_t j = 0; j < b.size(); ++j) a[i - b.size() + 1 + j] -= c * b[j];
        if (i == b.size() - 1) break;
    }
    a.resize(b.size() - 1);
    trim(a);
    return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int64_t n) {
    require(n >= 1, ErrorCode::InvalidArgument, "cyclotomic level must be positive");
    static std::mutex mu;
    static std::map<int64_t, std::vector<Integer>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // x^n - 1 divided by Phi_d for every proper divisor d
    std::vector<Integer> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int64_t d : divisors(n)) {
        if (d == n) continue;
        num = divide_monic(num, cyclotomic_polynomial(d));
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(num)).first->second;
}

CycNumber::CycNumber(int64_t level) : level_(level) {
    require(level >= 1, ErrorCode::InvalidArgument, "cyclotomic level must be positive");
    c_.assign(static_cast<size_t>(euler_phi(level)), 0);
}

CycNumber CycNumber::rational(const Rational& r, int64_t level) {
    CycNumber x(level);
    x.c_[0] = r;
    return x;
}

CycNumber CycNumber::zeta_power(int64_t level, int64_t e) {
    Poly p(static_cast<size_t>(floor_mod(e, level)) + 1, 0);
    p.back() = 1;
    return from_polynomial(level, std::move(p));
}

CycNumber CycNumber::from_exponent_sums(int64_t level, const std::vector<Rational>& terms) {
    require(static_cast<int64_t>(terms.size()) == level, ErrorCode::Internal, "exponent table size mismatch");
    return from_polynomial(level, terms);
}

CycNumber CycNumber::from_polynomial(int64_t level, std::vector<Rational> poly) {
    CycNumber x(level);
    x.reduce_from(std::move(poly));
    return x;
}

void CycNumber::reduce_from(std::vector<Rational> poly) {
    const auto& phi = cyclotomic_polynomial(level_);
    const size_t d = phi.size() - 1;
    // x^level = 1 first, so long division only handles degree < level
    if (static_cast<int64_t>(poly.size()) > level_) {
        for (size_t i = static_cast<size_t>(level_); i < poly.size(); ++i)
            if (poly[i] != 0) poly[i % static_cast<size_t>(level_)] += poly[i];
        poly.resize(static_cast<size_t>(level_));
    }
    for (size_t i = poly.size(); i-- > d;) {
        if (poly[i] == 0) continue;
        Rational c = poly[i];
        for (size_t j = 0; j <= d; ++j)
            if (phi[j] != 0) poly[i - d + j] -= c * Rational(phi[j]);
    }
    poly.resize(d, 0);
    c_ = std::move(poly);
}

CycNumber CycNumber::lift(int64_t new_level) const {
    if (new_level == level_) return *this;
    require(new_level % level_ == 0, ErrorCode::InvalidArgument, "lift target is not a multiple of the level");
    const int64_t step = new_level / level_;
    Poly p(static_cast<size_t>(new_level), 0);
    for (size_t i = 0; i < c_.size(); ++i) p[i * static_cast<size_t>(step)] = c_[i];
    return from_polynomial(new_level, std::move(p));
}

bool CycNumber::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycNumber::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CycNumber::rational_value() const {
    require(is_rational(), ErrorCode::InvalidArgument, "cyclotomic number is not rational");
    return c_[0];
}

CycNumber CycNumber::operator-() const {
    CycNumber x = *this;
    for (auto& c : x.c_) c = -c;
    return x;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
    if (o.level_ != level_) {
        int64_t l = lcm64(level_, o.level_);
        *this = lift(l);
        return *this += o.lift(l);
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this += -o; }

CycNumber& CycNumber::operator*=(const CycNumber& o) {
    if (o.level_ != level_) {
        int64_t l = lcm64(level_, o.level_);
        *this = lift(l);
        return *this *= o.lift(l);
    }
    reduce_from(poly_mul(c_, o.c_));
    return *this;
}

CycNumber& CycNumber::operator*=(const Rational& r) {
    for (auto& c : c_) c *= r;
    return *this;
}

CycNumber CycNumber::inverse() const {
    require(!is_zero(), ErrorCode::DivisionByZero, "inverse of zero cyclotomic number");
    // extended Euclid: s * a + t * phi = g with g a nonzero constant
    const auto& phi_z = cyclotomic_polynomial(level_);
    Poly phi(phi_z.begin(), phi_z.end());
    Poly r0 = phi, r1 = c_;
    trim(r1);
    Poly s0, s1{1};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    require(!r1.empty(), ErrorCode::Internal, "cyclotomic element shares a factor with Phi_N");
    Rational inv = 1 / r1[0];
    for (auto& c : s1) c *= inv;
    return from_polynomial(level_, s1);
}

bool CycNumber::operator==(const CycNumber& o) const {
    if (level_ == o.level_) return c_ == o.c_;
    int64_t l = lcm64(level_, o.level_);
    return lift(l).c_ == o.lift(l).c_;
}

std::string CycNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c_[i].get_str();
        } else {
            os << "(" << c_[i].get_str() << ")*z" << level_ << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::complex<double> CycNumber::approximate() const {
    std::complex<double> z = 0;
    for (size_t i = 0; i < c_.size(); ++i) {
        double ang = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(level_);
        z += c_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
}

nlohmann::ordered_json CycNumber::to_json() const {
    nlohmann::ordered_json j;
    j["level"] = level_;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : c_) arr.push_back(c.get_str());
    j["coeffs"] = arr;
    return j;
}

CycNumber CycNumber::from_json(const nlohmann::json& j) {
    require(j.is_object() && j.contains("level") && j.contains("coeffs"), ErrorCode::Parse,
            "cyclotomic JSON needs 'level' and 'coeffs'");
    int64_t level = j.at("level").get<int64_t>();
    CycNumber x(level);
    const auto& arr = j.at("coeffs");
    require(arr.is_array() && arr.size() == x.c_.size(), ErrorCode::Parse,
            "cyclotomic JSON has the wrong number of coefficients");
    for (size_t i = 0; i < arr.size(); ++i) x.c_[i] = parse_rational(arr[i].get<std::string>());
    return x;
}

// ---------------------------------------------------------------------------

int kronecker_symbol(int64_t d, int64_t n) {
    require(n >= 0, ErrorCode::InvalidArgument, "kronecker symbol needs n >= 0");
    if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (d % 2 == 0) return 0;
        int64_t r = floor_mod(d, 8);
        if (r == 3 || r == 5) result = -result;
    }
    // Jacobi symbol (d / n), n odd
    int64_t a = floor_mod(d, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

CycNumber sqrt_disc(int64_t disc, int64_t level) {
    require(disc > 1, ErrorCode::InvalidArgument, "sqrt_disc needs a positive discriminant");
    require(level % disc == 0, ErrorCode::InvalidArgument,
            "discriminant " + std::to_string(disc) + " does not divide level " + std::to_string(level));
    std::vector<Rational> terms(static_cast<size_t>(disc), 0);
    for (int64_t a = 0; a < disc; ++a) terms[static_cast<size_t>(a)] = kronecker_symbol(disc, a);
    CycNumber g = CycNumber::from_exponent_sums(disc, terms).lift(level);
    require(g * g == CycNumber::rational(Rational(disc)), ErrorCode::Internal, "Gauss sum does not square to D");
    return g;
}

CycNumber galois_apply(int64_t j, const CycNumber& x) {
    const int64_t n = x.level();
    require(gcd64(floor_mod(j, n), n) == 1 || n == 1, ErrorCode::InvalidArgument,
            "Galois exponent is not coprime to the level");
    std::vector<Rational> terms(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < x.coeffs().size(); ++i)
        terms[static_cast<size_t>(floor_mod(static_cast<int64_t>(i) * floor_mod(j, n), n))] += x.coeffs()[i];
    return CycNumber::from_exponent_sums(n, terms);
}

CycNumber restrict_to_subfield(const CycNumber& x, int64_t n) {
    const int64_t N = x.level();
    if (N % n != 0) {
        // Q(zeta_n) and Q(zeta_N) meet in Q(zeta_gcd); go through the lcm
        int64_t l = lcm64(N, n);
        return restrict_to_subfield(x.lift(l), n);
    }
    const size_t rows = x.coeffs().size();
    const size_t cols = static_cast<size_t>(euler_phi(n));
    // columns: zeta_n^i lifted to level N
    std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1, 0));
    for (size_t i = 0; i < cols; ++i) {
        CycNumber b = CycNumber::zeta_power(n, static_cast<int64_t>(i)).lift(N);
        for (size_t r = 0; r < rows; ++r) aug[r][i] = b.coeffs()[r];
    }
    for (size_t r = 0; r < rows; ++r) aug[r][cols] = x.coeffs()[r];
    // Gaussian elimination
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t c = 0; c < cols && row < rows; ++c) {
        size_t p = row;
        while (p < rows && aug[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(aug[p], aug[row]);
        Rational inv = 1 / aug[row][c];
        for (auto& v : aug[row]) v *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || aug[r][c] == 0) continue;
            Rational f = aug[r][c];
            for (size_t k = c; k <= cols; ++k) aug[r][k] -= f * aug[row][k];
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (size_t r = row; r < rows; ++r)
        if (aug[r][cols] != 0)
            fail(ErrorCode::NotInSubfield,
                 "value at level " + std::to_string(N) + " does not lie in Q(zeta_" + std::to_string(n) + ")");
    CycNumber out(n);
    std::vector<Rational> coeffs(cols, 0);
    for (size_t r = 0; r < pivot_col.size(); ++r) coeffs[pivot_col[r]] = aug[r][cols];
    return CycNumber::from_polynomial(n, coeffs);
}

CycNumber minimal_level_form(const CycNumber& x) {
    if (x.is_rational()) return CycNumber::rational(x.coeffs()[0]);
    for (int64_t d : divisors(x.level())) {
        if (d == x.level()) break;
        if (d % 4 == 2) continue;  // Q(zeta_2m) = Q(zeta_m) for odd m
        try {
            return restrict_to_subfield(x, d);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotInSubfield) throw;
        }
    }
    if (x.level() % 4 == 2) return restrict_to_subfield(x, x.level() / 2);
    return x;
}

}  // namespace shintani
