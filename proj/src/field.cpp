#include "shintani/field.hpp"

#include "shintani/error.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace shintani {

namespace {

int64_t squarefree_part_of_disc(int64_t disc) {
    if (disc % 4 == 1) return disc;
    require(disc % 4 == 0, ErrorCode::InvalidArgument, "discriminant must be 0 or 1 mod 4");
    int64_t m = disc / 4;
    require(m % 4 == 2 || m % 4 == 3, ErrorCode::InvalidArgument,
            "discriminant " + std::to_string(disc) + " is not fundamental");
    return m;
}

}  // namespace

FieldSpec FieldSpec::rational() { return FieldSpec(1, 1, EmbeddingOrder::Standard); }

FieldSpec FieldSpec::quadratic(int64_t disc, EmbeddingOrder order) {
    require(disc > 1, ErrorCode::InvalidArgument, "real quadratic discriminant must exceed 1");
    int64_t m = squarefree_part_of_disc(disc);
    require(m > 1 && is_squarefree(m), ErrorCode::InvalidArgument,
            "discriminant " + std::to_string(disc) + " is not fundamental");
    return FieldSpec(m, disc, order);
}

FieldSpec FieldSpec::from_disc(int64_t disc, EmbeddingOrder order) {
    if (disc == 1) return rational();
    return quadratic(disc, order);
}

FieldSpec FieldSpec::of_degree(int degree) {
    if (degree == 1) return rational();
    fail(ErrorCode::UnsupportedDegree,
         "degree " + std::to_string(degree) + " fields need an explicit discriminant; only g <= 2 is implemented");
}

int FieldSpec::tau_sign(int i) const {
    int first = order_ == EmbeddingOrder::Standard ? 1 : -1;
    return i == 0 ? first : -first;
}

FieldSpec FieldSpec::with_swapped_embeddings() const {
    FieldSpec f = *this;
    f.order_ = order_ == EmbeddingOrder::Standard ? EmbeddingOrder::Swapped : EmbeddingOrder::Standard;
    return f;
}

std::string FieldSpec::name() const {
    if (is_rational()) return "Q";
    return "Q(sqrt " + std::to_string(m_) + ")";
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(const FieldSpec& field, Rational a, Rational b)
    : a_(std::move(a)), b_(std::move(b)), m_(field.m()) {
    require(!(m_ == 1 && b_ != 0), ErrorCode::InvalidArgument, "element of Q with nonzero w-coordinate");
}

FieldElement FieldElement::from_coords(const FieldSpec& field, const Coords& c) {
    return FieldElement(field, make_rational(c[0]), make_rational(c[1]));
}

FieldElement FieldElement::from_int(int64_t n) {
    FieldElement x;
    x.a_ = make_rational(n);
    return x;
}

Rational FieldElement::p() const {
    if (m_ % 4 == 1 && m_ != 1) return a_ + b_ / 2;
    return a_;
}

Rational FieldElement::q() const {
    if (m_ == 1) return 0;
    if (m_ % 4 == 1) return b_ / 2;
    return b_;
}

FieldElement FieldElement::from_pq(int64_t m, Rational p, Rational q) {
    FieldElement x;
    x.m_ = m;
    if (m == 1) {
        x.a_ = std::move(p);
    } else if (m % 4 == 1) {
        x.b_ = 2 * q;
        x.a_ = p - q;
    } else {
        x.a_ = std::move(p);
        x.b_ = std::move(q);
    }
    return x;
}

int64_t FieldElement::unify(const FieldElement& o) const {
    if (m_ == o.m_) return m_;
    if (m_ == 1 && b_ == 0) return o.m_;
    if (o.m_ == 1 && o.b_ == 0) return m_;
    fail(ErrorCode::InvalidArgument, "arithmetic between elements of different fields");
}

FieldElement FieldElement::conj() const { return from_pq(m_, p(), -q()); }

Rational FieldElement::norm() const {
    if (m_ == 1) return a_;
    Rational pp = p(), qq = q();
    return pp * pp - Rational(m_) * qq * qq;
}

Rational FieldElement::trace() const {
    if (m_ == 1) return a_;
    return 2 * p();
}

bool FieldElement::is_integral() const { return a_.get_den() == 1 && b_.get_den() == 1; }

Coords FieldElement::coords() const {
    require(is_integral(), ErrorCode::InvalidArgument, "element " + to_string() + " is not integral");
    return {to_int64(a_.get_num()), to_int64(b_.get_num())};
}

FieldElement FieldElement::inverse() const {
    require(!is_zero(), ErrorCode::DivisionByZero, "inverse of zero field element");
    Rational n = norm();
    FieldElement c = conj();
    c.a_ /= n;
    c.b_ /= n;
    return c;
}

FieldElement FieldElement::operator-() const {
    FieldElement x = *this;
    x.a_ = -x.a_;
    x.b_ = -x.b_;
    return x;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    m_ = unify(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    m_ = unify(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    int64_t m = unify(o);
    if (m == 1) {
        a_ *= o.a_;
        m_ = 1;
        return *this;
    }
    FieldElement self = *this;
    self.m_ = m;
    FieldElement other = o;
    other.m_ = m;
    Rational p1 = self.p(), q1 = self.q(), p2 = other.p(), q2 = other.q();
    *this = from_pq(m, p1 * p2 + Rational(m) * q1 * q2, p1 * q2 + p2 * q1);
    return *this;
}

FieldElement& FieldElement::operator*=(const Rational& r) {
    a_ *= r;
    b_ *= r;
    return *this;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (a_ != o.a_ || b_ != o.b_) return false;
    return m_ == o.m_ || b_ == 0;
}

std::string FieldElement::to_string() const {
    std::ostringstream os;
    if (b_ == 0) {
        os << a_.get_str();
    } else if (a_ == 0) {
        os << b_.get_str() << "*w";
    } else {
        os << a_.get_str() << (b_ > 0 ? "+" : "-") << Rational(abs(b_)).get_str() << "*w";
    }
    return os.str();
}

// ---------------------------------------------------------------------------

Sign quadratic_sign(const Rational& p, const Rational& q, int64_t m) {
    int sp = sgn(p);
    int sq = m == 1 ? 0 : sgn(q);
    if (sq == 0) return static_cast<Sign>(sp);
    if (sp == 0 || sp == sq) return static_cast<Sign>(sq);
    // opposite signs: compare p^2 with q^2 m; equality is impossible for squarefree m > 1
    Rational lhs = p * p;
    Rational rhs = q * q * Rational(m);
    return static_cast<Sign>(lhs > rhs ? sp : sq);
}

Sign embedded_sign(const FieldSpec& field, int i, const FieldElement& x) {
    if (field.is_rational()) return static_cast<Sign>(sgn(x.a()));
    return quadratic_sign(x.p(), Rational(field.tau_sign(i)) * x.q(), field.m());
}

FieldElement tau(const FieldSpec& field, int i, const FieldElement& x) {
    if (field.is_rational() || i == 0) return x;
    return x.conj();
}

long double approximate(const FieldSpec& field, int i, const FieldElement& x) {
    long double p = x.p().get_d();
    if (field.is_rational()) return p;
    long double q = x.q().get_d();
    const long double r = q * std::sqrt(static_cast<long double>(field.m()));
    if ((p >= 0) == (field.tau_sign(i) * r >= 0)) return p + field.tau_sign(i) * r;
    // cancellation: recover the small conjugate from the exact norm
    const Rational norm = x.p() * x.p() - Rational(field.m()) * x.q() * x.q();
    return static_cast<long double>(norm.get_d()) / (p - field.tau_sign(i) * r);
}

bool is_totally_positive(const FieldSpec& field, const FieldElement& x) {
    for (int i = 0; i < field.degree(); ++i)
        if (embedded_sign(field, i, x) != Sign::Positive) return false;
    return true;
}

Integer content(const FieldElement& x) {
    require(x.is_integral(), ErrorCode::InvalidArgument, "content of non-integral element");
    Integer g;
    mpz_gcd(g.get_mpz_t(), x.a().get_num_mpz_t(), x.b().get_num_mpz_t());
    return g;
}

bool is_primitive(const FieldSpec& field, const FieldElement& x) {
    require(x.is_integral(), ErrorCode::InvalidArgument, "primitivity is defined for integral elements only");
    require(is_totally_positive(field, x), ErrorCode::InvalidArgument,
            "primitivity is defined for totally positive elements only");
    return content(x) == 1;
}

FieldElement primitive_part(const FieldElement& x) {
    Integer g = content(x);
    require(g != 0, ErrorCode::InvalidArgument, "primitive part of zero");
    return x * Rational(1, g);
}

namespace {

// floor((P + sqrt m) / Q) for Q != 0, m not a square
Integer floor_quadratic(const Integer& P, const Integer& Q, int64_t m) {
    Integer r = sqrt(Integer(m));
    Integer num = Q > 0 ? Integer(P + r) : Integer(-P - r - 1);
    Integer den = abs(Q);
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return f;
}

}  // namespace

FieldElement fundamental_unit(const FieldSpec& field) {
    require(field.degree() == 2, ErrorCode::UnsupportedDegree, "the unit group of Q is finite");
    const int64_t m = field.m();
    // Continued fraction of theta = -conj(w) > 0; units x + y w with x, y > 0 have
    // x / y among the convergents of theta.
    Integer P = field.half_omega() ? -1 : 0;
    Integer Q = field.half_omega() ? 2 : 1;
    Integer h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
    for (int iter = 0; iter < 100000; ++iter) {
        Integer a = floor_quadratic(P, Q, m);
        Integer h = a * h_prev + h_prev2;
        Integer k = a * k_prev + k_prev2;
        FieldElement u(field, Rational(h), Rational(k));
        Rational n = u.norm();
        if (k > 0 && (n == 1 || n == -1)) return u;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        Integer P_next = a * Q - P;
        Integer Q_next = (Integer(m) - P_next * P_next) / Q;
        P = P_next;
        Q = Q_next;
    }
    fail(ErrorCode::Internal, "continued fraction did not reach a unit");
}

FieldElement fundamental_totally_positive_unit(const FieldSpec& field) {
    require(field.degree() == 2, ErrorCode::UnsupportedDegree,
            "Q has no nontrivial totally positive units; no generator exists");
    FieldElement eps = fundamental_unit(field);
    if (eps.norm() != 1) eps = eps * eps;
    // with norm 1 and tau_1(eps) != 1, both embeddings have the same sign
    if (embedded_sign(field, 0, eps) == Sign::Negative) eps = -eps;
    if (embedded_sign(field, 0, eps - FieldElement::from_int(1)) == Sign::Negative) eps = eps.inverse();
    return eps;
}

std::vector<FieldElement> inverse_different_basis(const FieldSpec& field) {
    if (field.is_rational()) return {FieldElement::from_int(1)};
    // sqrt D in coordinates: 2w - 1 when w = (1 + sqrt m)/2, else 2w
    FieldElement sqrt_d = field.half_omega() ? FieldElement(field, -1, 2) : FieldElement(field, 0, 2);
    FieldElement inv = sqrt_d * Rational(1, field.disc());
    FieldElement w(field, 0, 1);
    return {inv, inv * w};
}

Mat2 multiplication_matrix(const FieldSpec& field, const FieldElement& x) {
    Coords c0 = x.coords();
    if (field.is_rational()) return Mat2{{{c0[0], 0}, {0, c0[0]}}};
    Coords c1 = (x * FieldElement(field, 0, 1)).coords();
    return Mat2{{{c0[0], c1[0]}, {c0[1], c1[1]}}};
}

Coords apply(const Mat2& m, const Coords& c) {
    return {checked_add(checked_mul(m[0][0], c[0]), checked_mul(m[0][1], c[1])),
            checked_add(checked_mul(m[1][0], c[0]), checked_mul(m[1][1], c[1]))};
}

Coords add(const Coords& x, const Coords& y) { return {checked_add(x[0], y[0]), checked_add(x[1], y[1])}; }

Coords scale(int64_t n, const Coords& x) { return {checked_mul(n, x[0]), checked_mul(n, x[1])}; }

int64_t coords_trace(const FieldSpec& field, const Coords& c) {
    if (field.is_rational()) return c[0];
    return checked_add(checked_mul(2, c[0]), field.half_omega() ? c[1] : 0);
}

FieldElement parse_element(const FieldSpec& field, std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    require(!s.empty(), ErrorCode::Parse, "empty field element");
    if (s.front() == '[') {
        require(s.back() == ']', ErrorCode::Parse, "unterminated coordinate pair '" + s + "'");
        auto comma = s.find(',');
        if (comma == std::string::npos) return FieldElement(field, parse_rational(s.substr(1, s.size() - 2)));
        return FieldElement(field, parse_rational(s.substr(1, comma - 1)),
                            parse_rational(s.substr(comma + 1, s.size() - comma - 2)));
    }
    Rational a = 0, b = 0;
    size_t pos = 0;
    bool any = false;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        } else if (any) {
            fail(ErrorCode::Parse, "expected '+' or '-' in '" + s + "'");
        }
        size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string term = s.substr(pos, end - pos);
        require(!term.empty(), ErrorCode::Parse, "empty term in '" + s + "'");
        if (term.back() == 'w') {
            require(!field.is_rational(), ErrorCode::Parse, "'w' is undefined over Q");
            std::string coef = term.substr(0, term.size() - 1);
            if (!coef.empty() && coef.back() == '*') coef.pop_back();
            b += sign * (coef.empty() ? Rational(1) : parse_rational(coef));
        } else {
            a += sign * parse_rational(term);
        }
        any = true;
        pos = end;
    }
    return FieldElement(field, a, b);
}

}  // namespace shintani
