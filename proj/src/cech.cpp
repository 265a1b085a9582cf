#include "shintani/cech.hpp"

#include "shintani/error.hpp"
#include "shintani/parallel.hpp"
#include "shintani/zeta.hpp"

#include <random>

namespace shintani {

namespace {

CycNumber random_cyc(std::mt19937_64& rng, int64_t level) {
    std::vector<Rational> terms(static_cast<size_t>(level), 0);
    for (auto& t : terms) {
        int64_t num = static_cast<int64_t>(rng() % 19) - 9;
        int64_t den = static_cast<int64_t>(rng() % 9) + 1;
        t = make_rational(num, den);
    }
    return CycNumber::from_exponent_sums(level, terms);
}

}  // namespace

QuotientComplex build_quotient_complex(const Fan& adapted, const TorsionPoint& xi) {
    const FieldSpec& field = adapted.field;
    for (const Cone& s : adapted.cones)
        for (const FieldElement& g : s.gens)
            require(xi.exponent_at(g.coords()) != 0, ErrorCode::InvalidArgument,
                    "fan is not adapted: generator " + g.to_string() + " lies in ker(xi)");
    QuotientComplex c;
    c.fan = adapted;
    for (const Cone& s : adapted.cones) c.orientation.push_back(orientation_sign(field, s.gens));
    if (field.degree() == 1) {
        for (const Cone& s : adapted.cones) c.vertices.push_back(s.gens[0]);
        return c;
    }
    require(unit_action(field, adapted.unit, xi) == xi, ErrorCode::InvalidArgument,
            "fan is not adapted: its unit does not fix xi");
    FieldElement eps = fundamental_totally_positive_unit(field);
    auto period = unit_power_index(field, eps, adapted.unit, FieldElement::from_int(1));
    require(period && *period >= 1, ErrorCode::InvalidArgument, "fan unit is not a positive power of eps");
    c.period_factor = make_rational(isotropy_index(field, xi), *period);

    auto vertex = [&](const FieldElement& g) {
        for (size_t i = 0; i < c.vertices.size(); ++i)
            if (unit_power_index(field, adapted.unit, g, c.vertices[i])) return i;
        c.vertices.push_back(g);
        return c.vertices.size() - 1;
    };
    for (const Cone& s : adapted.cones) c.ends.push_back({vertex(s.gens[0]), vertex(s.gens[1])});
    c.d1 = IntMatrix(c.vertices.size(), adapted.cones.size());
    for (size_t j = 0; j < c.ends.size(); ++j) {
        c.d1(c.ends[j][1], j) += c.orientation[j];
        c.d1(c.ends[j][0], j) -= c.orientation[j];
    }
    return c;
}

bool boundary_squares_to_zero(const QuotientComplex& c) {
    if (c.d1.rows() == 0) return true;
    for (size_t j = 0; j < c.d1.cols(); ++j) {
        int64_t s = 0;
        for (size_t i = 0; i < c.d1.rows(); ++i) s += c.d1(i, j);
        if (s != 0) return false;
    }
    return true;
}

std::vector<HomologyGroup> homology(const QuotientComplex& c) {
    if (c.d1.rows() == 0) return {HomologyGroup{static_cast<int64_t>(c.vertices.size()), {}}};
    SmithForm s = smith_normal_form(c.d1);
    const int64_t r = static_cast<int64_t>(s.rank());
    HomologyGroup h0{static_cast<int64_t>(c.vertices.size()) - r, {}};
    for (int64_t d : s.diagonal())
        if (d > 1) h0.torsion.push_back(d);
    HomologyGroup h1{static_cast<int64_t>(c.cell_count()) - r, {}};
    return {h0, h1};
}

bool fundamental_class_is_cycle(const QuotientComplex& c, std::optional<size_t> flip) {
    if (c.d1.rows() == 0) return true;
    for (size_t i = 0; i < c.d1.rows(); ++i) {
        int64_t s = 0;
        for (size_t j = 0; j < c.d1.cols(); ++j) s += (flip && *flip == j ? -1 : 1) * c.d1(i, j);
        if (s != 0) return false;
    }
    return true;
}

CycNumber pairing(const std::vector<CycNumber>& eta, const QuotientComplex& c) {
    require(eta.size() == c.cell_count(), ErrorCode::InvalidArgument, "cochain must have one value per top cell");
    CycNumber s;
    for (size_t j = 0; j < eta.size(); ++j) s += eta[j] * Rational(c.orientation[j]);
    return s;
}

std::vector<CycNumber> shintani_cochain(const QuotientComplex& c, const TorsionPoint& xi, int k) {
    const FieldSpec& field = c.fan.field;
    const std::vector<int> kv(static_cast<size_t>(field.degree()), k);
    std::vector<CycNumber> eta(c.cell_count());
    for (size_t j = 0; j < eta.size(); ++j)
        eta[j] = shintani_value(field, c.fan.cones[j], xi, kv) * Rational(c.orientation[j]);
    return eta;
}

std::vector<CycNumber> coboundary(const QuotientComplex& c, const std::vector<CycNumber>& f) {
    require(f.size() == c.vertices.size(), ErrorCode::InvalidArgument, "cochain must have one value per vertex");
    std::vector<CycNumber> out;
    for (const auto& e : c.ends) out.push_back(f[e[1]] - f[e[0]]);
    return out;
}

CoboundaryReport coboundary_invariance(const Fan& fan, const TorsionPoint& xi, int k, size_t trials, uint64_t seed) {
    require(fan.field.degree() == 2, ErrorCode::UnsupportedDegree, "coboundary trials need a real quadratic field");
    QuotientComplex c = build_quotient_complex(adapt_fan_to(fan, xi), xi);
    const std::vector<CycNumber> eta = shintani_cochain(c, xi, k);
    CoboundaryReport rep;
    rep.trials = trials;
    rep.base_pairing = pairing(eta, c);
    std::vector<char> failed(trials, 0);
    parallel_for(trials, [&](size_t t) {
        std::mt19937_64 rng(derive_seed(seed, t));
        std::vector<CycNumber> f;
        for (size_t v = 0; v < c.vertices.size(); ++v) f.push_back(random_cyc(rng, xi.level));
        std::vector<CycNumber> df = coboundary(c, f);
        std::vector<CycNumber> shifted = eta;
        for (size_t j = 0; j < df.size(); ++j) shifted[j] += df[j];
        failed[t] = !pairing(df, c).is_zero() || pairing(shifted, c) != rep.base_pairing;
    });
    for (char f : failed) rep.failures += f ? 1 : 0;
    return rep;
}

}  // namespace shintani
