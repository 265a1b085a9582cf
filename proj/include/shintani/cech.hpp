#pragma once

// The quotient of an adapted fan by the isotropy group of a torsion point as a
// finite oriented cell complex (a triangulated circle when g = 2), and the
// pairing of cochains against its fundamental class.

#include "shintani/cones.hpp"
#include "shintani/cyclotomic.hpp"
#include "shintani/intmat.hpp"
#include "shintani/residue.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace shintani {

struct QuotientComplex {
    Fan fan;                                ///< adapted; its unit generates the isotropy group
    std::vector<FieldElement> vertices;     ///< ray class representatives
    std::vector<int> orientation;           ///< sgn of each top cell
    std::vector<std::array<size_t, 2>> ends;  ///< vertex classes of (alpha_0, alpha_1); g = 2 only
    IntMatrix d1;                           ///< vertices x cells; empty when g = 1
    Rational period_factor = 1;             ///< isotropy index / fan period, as in the Lerch sum

    size_t cell_count() const { return fan.cones.size(); }
};

/// Requires every generator outside ker(xi) and a unit fixing xi.
QuotientComplex build_quotient_complex(const Fan& adapted, const TorsionPoint& xi);

/// Augmentation composed with the boundary vanishes.
bool boundary_squares_to_zero(const QuotientComplex& c);

struct HomologyGroup {
    int64_t rank = 0;
    std::vector<int64_t> torsion;
    bool operator==(const HomologyGroup&) const = default;
};

/// H_0, ..., H_(g-1) via Smith normal form.
std::vector<HomologyGroup> homology(const QuotientComplex& c);

/// The boundary of the sum of oriented top cells is zero. `flip` negates one
/// cell's orientation first.
bool fundamental_class_is_cycle(const QuotientComplex& c, std::optional<size_t> flip = std::nullopt);

/// sum over top cells of sgn(cell) * eta(cell)
CycNumber pairing(const std::vector<CycNumber>& eta, const QuotientComplex& c);

/// eta(cell) = sgn(cell) * d^k G_cell(xi)
std::vector<CycNumber> shintani_cochain(const QuotientComplex& c, const TorsionPoint& xi, int k);

/// (d f)(alpha_0, alpha_1) = f(alpha_1) - f(alpha_0) on vertex classes.
std::vector<CycNumber> coboundary(const QuotientComplex& c, const std::vector<CycNumber>& f);

struct CoboundaryReport {
    size_t trials = 0;
    size_t failures = 0;
    CycNumber base_pairing;
};

/// Random vertex cochains f: the pairing of d f vanishes and adding d f to the
/// Shintani cochain leaves its pairing unchanged. Needs g = 2.
CoboundaryReport coboundary_invariance(const Fan& fan, const TorsionPoint& xi, int k, size_t trials, uint64_t seed);

}  // namespace shintani
