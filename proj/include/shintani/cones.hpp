#pragma once

// Simplicial cones with totally positive generators, their upper closures
// with respect to a perturbation along the last embedding, and unit-periodic
// fans (Shintani decompositions) for degree <= 2.

#include "shintani/field.hpp"
#include "shintani/residue.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace shintani {

struct Cone {
    std::vector<FieldElement> gens;
    size_t dim() const { return gens.size(); }
    bool operator==(const Cone&) const = default;
};

/// Sign of det(tau_i(alpha_j)) for a g-tuple.
int orientation_sign(const FieldSpec& field, const std::vector<FieldElement>& gens);

/// Coordinates x-hat with x = sum x-hat_i alpha_i; throws on a singular tuple.
std::vector<Rational> barycentric(const FieldSpec& field, const std::vector<FieldElement>& gens,
                                  const FieldElement& x);

/// c = M^-1 e_last with M = (tau_i(alpha_j)); entries are elements of F read
/// through tau_1.
std::vector<FieldElement> perturbation_vector(const FieldSpec& field, const std::vector<FieldElement>& gens);

enum class Region { Cone, Parallelepiped };

/// Upper-closure membership. x - d e_last moves x-hat by -d c, so a boundary
/// coordinate survives exactly when c pushes it back inside:
///
///   x-hat_i = 0 : needs c_i < 0
///   x-hat_i = 1 : needs c_i > 0   (parallelepiped only; 1 is excluded otherwise)
///
/// Everything is affine in d, so the first-order test is exact.
bool upper_closure_contains(const FieldSpec& field, const std::vector<FieldElement>& gens, const FieldElement& x,
                            Region region);

/// Lattice points of the upper closure of the half-open parallelepiped.
std::vector<FieldElement> parallelepiped_lattice_points(const FieldSpec& field, const std::vector<FieldElement>& gens);

/// |det| of the integer coordinate matrix of the generators.
int64_t lattice_index(const FieldSpec& field, const std::vector<FieldElement>& gens);

/// Top cones modulo the unit; the unit is 1 over Q.
struct Fan {
    FieldSpec field = FieldSpec::rational();
    FieldElement unit;
    std::vector<Cone> cones;
};

Fan standard_fan(const FieldSpec& field);

/// Replaces cones[index] = (a1, a2) by (a1, ray), (ray, a2).
Fan subdivide(const Fan& fan, size_t index, const FieldElement& ray);

/// Every generator ends up outside ker(xi); the unit becomes the smallest
/// power of the old unit fixing xi.
Fan adapt_fan_to(const Fan& fan, const TorsionPoint& xi);

/// j with x = u^j y, if any.
std::optional<int64_t> unit_power_index(const FieldSpec& field, const FieldElement& u, const FieldElement& x,
                                        const FieldElement& y);

/// u^j for any integer j.
FieldElement unit_power(const FieldElement& u, int64_t j);

/// Number of translates u^j sigma whose upper closure contains x.
int tiling_multiplicity(const Fan& fan, const FieldElement& x);

struct TilingReport {
    size_t samples = 0;
    size_t failures = 0;
    std::optional<FieldElement> witness;
    bool ok() const { return failures == 0; }
};

/// Random totally positive samples plus points on rays and cone bisectors.
TilingReport check_tiling(const Fan& fan, size_t samples, uint64_t seed);

/// Totally positive elements ordered by trace, then coordinates.
std::vector<FieldElement> small_totally_positive(const FieldSpec& field, size_t count);

nlohmann::ordered_json fan_to_json(const Fan& fan);
Fan fan_from_json(const FieldSpec& field, const nlohmann::json& j);
/// FNV-1a of the compact JSON form.
uint64_t fan_hash(const Fan& fan);

}  // namespace shintani
