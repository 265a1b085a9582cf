#include "shintani/zeta.hpp"

#include "shintani/error.hpp"
#include "shintani/parallel.hpp"

namespace shintani {

namespace {

// tau_1(sqrt m) in Q(zeta_level)
CycNumber sqrt_m(const FieldSpec& field, int64_t level) {
    CycNumber g = sqrt_disc(field.disc(), level);
    if (field.disc() != field.m()) g *= Rational(1, 2);
    if (field.tau_sign(0) < 0) g = -g;
    return g;
}

}  // namespace

CycNumber embed_coefficient(const FieldSpec& field, const FieldElement& c, int64_t level) {
    CycNumber r = CycNumber::rational(c.p(), level);
    if (c.q() != 0) r += sqrt_m(field, level) * c.q();
    return r;
}

CycNumber evaluate_at(const FieldSpec& field, const ConeRatFunc& f, const TorsionPoint& xi) {
    const int64_t n = xi.level;
    std::vector<Rational> rational_part(static_cast<size_t>(n), 0), root_part(static_cast<size_t>(n), 0);
    bool irrational = false;
    for (const auto& [e, c] : f.numerator.terms()) {
        size_t x = static_cast<size_t>(xi.exponent_at(e));
        rational_part[x] += c.p();
        if (c.q() != 0) {
            root_part[x] += c.q();
            irrational = true;
        }
    }
    CycNumber den = CycNumber::rational(1, n);
    for (const auto& [a, m] : f.denominator) {
        int64_t x = xi.exponent_at(a);
        if (x == 0)
            fail(ErrorCode::Pole, "xi(" + FieldElement::from_coords(field, a).to_string() +
                                      ") = 1: the cone has a generator in ker(xi)");
        CycNumber d = CycNumber::rational(1, n) - CycNumber::zeta_power(n, x);
        for (int i = 0; i < m; ++i) den *= d;
    }
    CycNumber inv = den.inverse();
    CycNumber value = CycNumber::from_exponent_sums(n, rational_part) * inv;
    if (irrational) {
        const int64_t level = lcm64(n, field.disc());
        value += CycNumber::from_exponent_sums(n, root_part) * inv * sqrt_m(field, level);
    }
    return value;
}

CycNumber shintani_value(const FieldSpec& field, const Cone& cone, const TorsionPoint& xi, const std::vector<int>& k) {
    for (const FieldElement& a : cone.gens)
        if (xi.exponent_at(a.coords()) == 0)
            fail(ErrorCode::Pole, "xi(" + a.to_string() + ") = 1: the cone has a generator in ker(xi)");
    return evaluate_at(field, differentiate(field, k, generating_function(field, cone)), xi);
}

CycNumber lerch_value(const Fan& fan, const TorsionPoint& xi, int k, LerchDetail* detail) {
    require(!xi.is_trivial(), ErrorCode::InvalidArgument, "the Lerch value needs a nontrivial torsion point");
    require(k >= 0, ErrorCode::InvalidArgument, "k must be nonnegative");
    const FieldSpec& field = fan.field;
    LerchDetail d;
    d.adapted = adapt_fan_to(fan, xi);
    d.isotropy = isotropy_index(field, xi);
    if (field.degree() == 2) {
        FieldElement eps = fundamental_totally_positive_unit(field);
        auto period = unit_power_index(field, eps, d.adapted.unit, FieldElement::from_int(1));
        require(period && *period >= 1, ErrorCode::Internal, "adapted fan unit is not a power of eps");
        d.period_factor = make_rational(d.isotropy, *period);
    }
    const std::vector<int> kv(static_cast<size_t>(field.degree()), k);
    d.raw = CycNumber(xi.level);
    for (const Cone& s : d.adapted.cones) {
        d.cone_values.push_back(shintani_value(field, s, xi, kv));
        d.raw += d.cone_values.back();
    }
    d.raw *= d.period_factor;
    CycNumber out = minimal_level_form(restrict_to_subfield(d.raw, xi.order()));
    if (detail) *detail = std::move(d);
    return out;
}

bool hecke_field_supported(const FieldSpec& field) {
    switch (field.disc()) {
        case 1:
        case 5:
        case 8:
        case 13:
            return true;
        default:
            return false;
    }
}

CycNumber hecke_L_value(const HeckeCharacter& chi, int k, const Fan& fan) {
    const ResidueRing& ring = chi.ring();
    const FieldSpec& field = ring.field();
    require(fan.field == field, ErrorCode::InvalidArgument, "fan and character live over different fields");
    require(hecke_field_supported(field), ErrorCode::UnsupportedField,
            "Hecke L-values are supported only for Q and discriminants 5, 8, 13");
    require(!ring.ideal().is_unit_ideal(), ErrorCode::InvalidArgument, "the conductor must be a proper ideal");
    CharacterReport rep = validate_character(chi);
    require(rep.valid(), ErrorCode::InvalidArgument,
            "not a valid character: " + (rep.problems.empty() ? std::string() : rep.problems.front()));
    require(rep.primitive, ErrorCode::InvalidArgument, "the character is not primitive for its conductor");

    const std::vector<Orbit> orbits = orbit_representatives(ring, true);
    std::vector<CycNumber> terms(orbits.size());
    parallel_for(orbits.size(), [&](size_t i) {
        const TorsionPoint& xi = orbits[i].representative;
        CycNumber c = fourier_coefficient(chi, xi);
        if (c.is_zero()) return;
        terms[i] = c * lerch_value(fan, xi, k);
    });
    CycNumber sum;
    for (const CycNumber& t : terms) sum += t;
    return minimal_level_form(sum);
}

}  // namespace shintani
