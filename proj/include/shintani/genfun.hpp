#pragma once

// Rational functions in the monomials t^a (a in O_F) whose denominators are
// products of (1 - t^a)^m, together with the derivations d_tau t^a = tau(a) t^a.

#include "shintani/cones.hpp"
#include "shintani/field.hpp"

#include <json.hpp>

#include <map>
#include <vector>

namespace shintani {

class LaurentPoly {
  public:
    using Terms = std::map<Coords, FieldElement>;

    LaurentPoly() = default;
    static LaurentPoly monomial(const Coords& e, const FieldElement& c = FieldElement::from_int(1));
    /// 1 - t^e
    static LaurentPoly one_minus(const Coords& e);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    void add_term(const Coords& e, const FieldElement& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const FieldElement& c) const;
    friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
    friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    /// Drops exponents of trace above `bound`.
    LaurentPoly truncated(const FieldSpec& field, int64_t bound) const;

    nlohmann::ordered_json to_json() const;

  private:
    Terms terms_;
};

/// numerator / prod (1 - t^a)^m, with the twist weight k in Z^g.
struct ConeRatFunc {
    LaurentPoly numerator;
    std::map<Coords, int> denominator;
    std::vector<int> weight;

    nlohmann::ordered_json to_json() const;
};

enum class Derivation { Tau1, Tau2, Norm };

ConeRatFunc generating_function(const FieldSpec& field, const Cone& cone);

ConeRatFunc differentiate(const FieldSpec& field, Derivation d, const ConeRatFunc& f);

/// prod_tau d_tau^(k_tau) f
ConeRatFunc differentiate(const FieldSpec& field, const std::vector<int>& k, const ConeRatFunc& f);

/// Equality by cross-multiplication over a common denominator.
bool rational_equal(const ConeRatFunc& f, const ConeRatFunc& g);

/// sum_j (-1)^j sgn(omit_j) G_(omit_j) over the common denominator prod (1 - t^(a_i)).
ConeRatFunc cocycle_defect(const FieldSpec& field, const std::vector<FieldElement>& alphas);

/// Same alternating sum, each term expanded as a power series to trace <= bound.
LaurentPoly cocycle_defect_series(const FieldSpec& field, const std::vector<FieldElement>& alphas, int64_t bound);

/// Geometric expansion of every denominator factor, truncated to trace <= bound.
LaurentPoly series_expand(const FieldSpec& field, const ConeRatFunc& f, int64_t bound);

/// t^a -> t^(u a)
ConeRatFunc substitute_unit(const FieldSpec& field, const ConeRatFunc& f, const FieldElement& u);

/// Termwise c t^a -> c N(a) t^a (resp. tau(a)).
LaurentPoly differentiate_terms(const FieldSpec& field, Derivation d, const LaurentPoly& p);

}  // namespace shintani
