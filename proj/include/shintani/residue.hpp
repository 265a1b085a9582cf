#pragma once

// Finite quotients O_F / f, their additive characters (torsion points) and
// multiplicative characters, and the action of the totally positive units.

#include "shintani/cyclotomic.hpp"
#include "shintani/field.hpp"
#include "shintani/intmat.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shintani {

/// Integral ideal given by a Hermite basis of its coordinate lattice. Over Q
/// the lattice is padded to diag(q, 1) so both degrees share one code path.
class IdealSpec {
  public:
    static IdealSpec principal(const FieldSpec& field, const FieldElement& generator);
    /// Columns of `basis` span the ideal; closure under w is checked.
    static IdealSpec from_basis(const FieldSpec& field, const Mat2& basis);
    /// "7", "2+w", or "[[a,b],[c,d]]" (rows of the column-basis matrix).
    static IdealSpec parse(const FieldSpec& field, const std::string& text);

    const FieldSpec& field() const { return field_; }
    const Mat2& hnf() const { return hnf_; }
    int64_t norm() const { return hnf_[0][0] * hnf_[1][1]; }
    bool contains(const Coords& c) const { return lattice_contains(hnf_, c); }
    bool is_unit_ideal() const { return norm() == 1; }
    std::string to_string() const;

    bool operator==(const IdealSpec& o) const { return field_ == o.field_ && hnf_ == o.hnf_; }

  private:
    IdealSpec(const FieldSpec& field, const Mat2& hnf) : field_(field), hnf_(hnf) {}
    FieldSpec field_;
    Mat2 hnf_{};
};

/// O_F / f with residues indexed 0 .. N(f)-1 through the Hermite basis.
class ResidueRing {
  public:
    explicit ResidueRing(const IdealSpec& ideal);

    const IdealSpec& ideal() const { return ideal_; }
    const FieldSpec& field() const { return ideal_.field(); }
    int64_t size() const { return ideal_.norm(); }
    const SmithForm& snf() const { return snf_; }
    /// Exponent of the additive group O_F / f.
    int64_t exponent() const { return snf_.D(1, 1); }
    /// Product of coordinate vectors, unreduced.
    Coords multiply(const Coords& x, const Coords& y) const;

    Coords reduce(const Coords& c) const;
    int64_t index_of(const Coords& c) const;
    Coords element(int64_t index) const;
    int64_t mul(int64_t x, int64_t y) const;
    int64_t add(int64_t x, int64_t y) const;
    int64_t neg(int64_t x) const;
    int64_t one() const { return index_of({1, 0}); }
    bool is_unit(int64_t x) const;
    std::vector<int64_t> units() const;

  private:
    IdealSpec ideal_;
    SmithForm snf_;
    Coords omega_sq_{};  // coordinates of w*w
};

/// Additive character xi(a + b w) = zeta_level^(w1 a + w2 b).
struct TorsionPoint {
    int64_t level = 1;
    int64_t w1 = 0;
    int64_t w2 = 0;

    bool is_trivial() const { return w1 == 0 && w2 == 0; }
    /// Exponent of xi(x) at `level`.
    int64_t exponent_at(const Coords& c) const;
    /// Order of xi as an element of the character group.
    int64_t order() const;
    /// xi^j: every value raised to the j-th power.
    TorsionPoint power(int64_t j) const;
    std::string to_string() const;

    bool operator==(const TorsionPoint&) const = default;
    auto operator<=>(const TorsionPoint&) const = default;
};

/// All characters of O_F / f, sorted by exponents; trivial first.
std::vector<TorsionPoint> torsion_points(const ResidueRing& ring);

/// The torsion point with the given exponents on (1, w); checks it is a
/// character of O_F / f.
TorsionPoint make_torsion_point(const ResidueRing& ring, int64_t w1, int64_t w2);

/// xi^u(a) = xi(u a) for an integral u.
TorsionPoint unit_action(const FieldSpec& field, const FieldElement& u, const TorsionPoint& xi);

/// Smallest e >= 1 with xi^(eps^e) = xi; 1 over Q.
int64_t isotropy_index(const FieldSpec& field, const TorsionPoint& xi);

struct Orbit {
    TorsionPoint representative;
    int64_t size = 1;
};

std::vector<Orbit> orbit_representatives(const ResidueRing& ring, bool exclude_trivial);

/// Annihilator ideal of xi; xi is primitive for f iff this equals f.
IdealSpec torsion_conductor(const ResidueRing& ring, const TorsionPoint& xi);
bool is_primitive_torsion(const ResidueRing& ring, const TorsionPoint& xi);

struct UnitGroup {
    std::vector<int64_t> generators;  ///< residue indices
    std::vector<int64_t> orders;      ///< invariant factors, d_1 | d_2 | ...
};

/// Decomposition of (O_F / f)^x into cyclic factors.
UnitGroup unit_group_generators(const ResidueRing& ring);

/// Finite-order character of (O_F / f)^x, extended by zero; values are
/// exponents of zeta_modulus, -1 marking non-units.
class HeckeCharacter {
  public:
    HeckeCharacter(const ResidueRing& ring, int64_t modulus, std::vector<int64_t> table);

    /// chi_1 o Norm with chi_1(g^a) = zeta_(q-1)^(j a), g the least primitive root mod q.
    static HeckeCharacter norm_character(const FieldSpec& field, int64_t q, int64_t j);
    /// Values on generators; `generators` default to unit_group_generators.
    static HeckeCharacter from_generator_values(const ResidueRing& ring, int64_t modulus,
                                                const std::vector<int64_t>& generators,
                                                const std::vector<int64_t>& values);
    static HeckeCharacter from_json(const FieldSpec& field, const nlohmann::json& j);
    nlohmann::ordered_json to_json() const;

    const ResidueRing& ring() const { return ring_; }
    int64_t modulus() const { return modulus_; }
    const std::vector<int64_t>& table() const { return table_; }
    /// Exponent of chi(x), or -1 if x is not a unit.
    int64_t exponent_at(const Coords& c) const { return table_[static_cast<size_t>(ring_.index_of(c))]; }
    CycNumber value_at(const Coords& c) const;

  private:
    ResidueRing ring_;
    int64_t modulus_;
    std::vector<int64_t> table_;
};

struct CharacterReport {
    bool multiplicative = true;
    bool trivial_on_units = true;
    bool primitive = true;
    std::vector<std::string> problems;
    bool valid() const { return multiplicative && trivial_on_units; }
};

CharacterReport validate_character(const HeckeCharacter& chi);

/// c_chi(xi) = (1/N f) sum_b chi(b) xi(-b), in Q(zeta_lcm(M, N)).
CycNumber fourier_coefficient(const HeckeCharacter& chi, const TorsionPoint& xi);

}  // namespace shintani
