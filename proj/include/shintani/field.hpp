#pragma once

// Exact arithmetic in F = Q or a real quadratic field Q(sqrt m).
//
// Elements are stored in the integral basis (1, w) with w = (1 + sqrt m)/2 when
// m = 1 mod 4 and w = sqrt m otherwise. An element is regarded as a real number
// through the first embedding tau_1 of its FieldSpec; tau_2(x) is then the
// conjugate conj(x) read through tau_1 as well.

#include "shintani/arith.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace shintani {

/// Integer coordinates of an element of O_F in the basis (1, w). For F = Q the
/// second coordinate is always zero.
using Coords = std::array<int64_t, 2>;

enum class EmbeddingOrder {
    Standard,  ///< tau_1(sqrt m) = +sqrt m
    Swapped,   ///< tau_1(sqrt m) = -sqrt m
};

class FieldSpec {
  public:
    static FieldSpec rational();
    /// Real quadratic field of fundamental discriminant disc > 1.
    static FieldSpec quadratic(int64_t disc, EmbeddingOrder order = EmbeddingOrder::Standard);
    /// disc == 1 selects Q.
    static FieldSpec from_disc(int64_t disc, EmbeddingOrder order = EmbeddingOrder::Standard);
    /// Degree > 2 is representable only as an error.
    static FieldSpec of_degree(int degree);

    int degree() const { return m_ == 1 ? 1 : 2; }
    bool is_rational() const { return m_ == 1; }
    int64_t m() const { return m_; }
    int64_t disc() const { return disc_; }
    bool half_omega() const { return m_ != 1 && m_ % 4 == 1; }
    EmbeddingOrder order() const { return order_; }
    /// Sign of tau_i(sqrt m) relative to the positive real root; i is 0-based.
    int tau_sign(int i) const;
    FieldSpec with_swapped_embeddings() const;
    std::string name() const;

    bool operator==(const FieldSpec&) const = default;

  private:
    FieldSpec(int64_t m, int64_t disc, EmbeddingOrder order) : m_(m), disc_(disc), order_(order) {}
    int64_t m_ = 1;
    int64_t disc_ = 1;
    EmbeddingOrder order_ = EmbeddingOrder::Standard;
};

class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(const FieldSpec& field, Rational a, Rational b = 0);
    static FieldElement from_coords(const FieldSpec& field, const Coords& c);
    static FieldElement from_int(int64_t n);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    int64_t m() const { return m_; }

    /// x = p + q sqrt m
    Rational p() const;
    Rational q() const;

    FieldElement conj() const;
    Rational norm() const;
    Rational trace() const;
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_integral() const;
    /// Throws unless integral and int64-representable.
    Coords coords() const;

    FieldElement inverse() const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator*=(const Rational& r);

    friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
    friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
    friend FieldElement operator*(FieldElement x, const FieldElement& y) { return x *= y; }
    friend FieldElement operator*(FieldElement x, const Rational& r) { return x *= r; }
    friend FieldElement operator/(const FieldElement& x, const FieldElement& y) { return x * y.inverse(); }
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    static FieldElement from_pq(int64_t m, Rational p, Rational q);
    int64_t unify(const FieldElement& o) const;

    Rational a_ = 0;
    Rational b_ = 0;
    int64_t m_ = 1;  // 1 marks "rational"; mixes freely with any field
};

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

/// Exact sign of p + q sqrt m (m squarefree, or m == 1 with q ignored).
Sign quadratic_sign(const Rational& p, const Rational& q, int64_t m);

/// Sign of tau_i(x), i 0-based.
Sign embedded_sign(const FieldSpec& field, int i, const FieldElement& x);

/// tau_i(x) expressed as an element read through tau_1: x for i = 0, conj(x) for i = 1.
FieldElement tau(const FieldSpec& field, int i, const FieldElement& x);

/// Floating approximation of tau_i(x); for diagnostics and randomized cross-checks.
long double approximate(const FieldSpec& field, int i, const FieldElement& x);

bool is_totally_positive(const FieldSpec& field, const FieldElement& x);

/// gcd of the coordinates of an integral element.
Integer content(const FieldElement& x);

/// Requires x integral and totally positive.
bool is_primitive(const FieldSpec& field, const FieldElement& x);
FieldElement primitive_part(const FieldElement& x);

/// Generator epsilon of the totally positive units with tau_1(epsilon) > 1.
FieldElement fundamental_totally_positive_unit(const FieldSpec& field);

/// Fundamental unit epsilon_0 > 1 (under the standard embedding) of any norm.
FieldElement fundamental_unit(const FieldSpec& field);

/// Z-basis of the inverse different (1/sqrt D) O_F.
std::vector<FieldElement> inverse_different_basis(const FieldSpec& field);

/// Integer matrix of multiplication by an integral element on coordinates:
/// column j holds coords(x * basis_j).
using Mat2 = std::array<std::array<int64_t, 2>, 2>;
Mat2 multiplication_matrix(const FieldSpec& field, const FieldElement& x);
Coords apply(const Mat2& m, const Coords& c);
Coords add(const Coords& x, const Coords& y);
Coords scale(int64_t n, const Coords& x);

/// Trace of the integral element with the given coordinates.
int64_t coords_trace(const FieldSpec& field, const Coords& c);

/// Parses "7", "-3", "2+3*w", "w", "1-w", "[a,b]".
FieldElement parse_element(const FieldSpec& field, std::string_view text);

}  // namespace shintani
