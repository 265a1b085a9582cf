#pragma once

// Special values at nonpositive integers: single cones, Lerch zeta functions
// of unit orbits of torsion points, and Hecke L-functions.

#include "shintani/cones.hpp"
#include "shintani/cyclotomic.hpp"
#include "shintani/genfun.hpp"
#include "shintani/residue.hpp"

#include <vector>

namespace shintani {

/// Image of c in Q(zeta_level) under tau_1; level must be a multiple of |D|
/// when c is irrational.
CycNumber embed_coefficient(const FieldSpec& field, const FieldElement& c, int64_t level);

/// f evaluated at t^a = xi(a). Throws Pole when a denominator vanishes.
CycNumber evaluate_at(const FieldSpec& field, const ConeRatFunc& f, const TorsionPoint& xi);

/// d^k G_sigma at xi, in Q(zeta_lcm(N, D)); k has one entry per embedding.
CycNumber shintani_value(const FieldSpec& field, const Cone& cone, const TorsionPoint& xi, const std::vector<int>& k);

/// Non-diagonal weights; the value generally does not descend to Q(xi).
inline CycNumber vector_weight_value(const FieldSpec& field, const Cone& cone, const TorsionPoint& xi,
                                     const std::vector<int>& k) {
    return shintani_value(field, cone, xi, k);
}

struct LerchDetail {
    Fan adapted;
    int64_t isotropy = 1;
    /// e / (period of the adapted fan in powers of eps)
    Rational period_factor = 1;
    std::vector<CycNumber> cone_values;
    CycNumber raw;  ///< before restriction
};

/// L(xi Delta, -k) in its minimal cyclotomic field.
CycNumber lerch_value(const Fan& fan, const TorsionPoint& xi, int k, LerchDetail* detail = nullptr);

/// Discriminants whose narrow class number is one and that this library accepts.
bool hecke_field_supported(const FieldSpec& field);

/// L(chi, -k) for a primitive character of nontrivial conductor.
CycNumber hecke_L_value(const HeckeCharacter& chi, int k, const Fan& fan);

}  // namespace shintani
