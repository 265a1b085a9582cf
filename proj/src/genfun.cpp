#include "shintani/genfun.hpp"

#include "shintani/error.hpp"

namespace shintani {

namespace {

FieldElement multiplier(const FieldSpec& field, Derivation d, const Coords& e) {
    FieldElement a = FieldElement::from_coords(field, e);
    switch (d) {
        case Derivation::Tau1:
            return a;
        case Derivation::Tau2:
            return a.conj();
        case Derivation::Norm:
            return field.degree() == 1 ? a : FieldElement(field, a.norm());
    }
    return a;
}

LaurentPoly power(const LaurentPoly& p, int n) {
    LaurentPoly r = LaurentPoly::monomial({0, 0});
    for (int i = 0; i < n; ++i) r = r * p;
    return r;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(const Coords& e, const FieldElement& c) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::one_minus(const Coords& e) {
    LaurentPoly p = monomial({0, 0});
    p.add_term(e, FieldElement::from_int(-1));
    return p;
}

void LaurentPoly::add_term(const Coords& e, const FieldElement& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(shintani::add(e1, e2), c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator*(const FieldElement& c) const {
    LaurentPoly r;
    for (const auto& [e, x] : terms_) r.add_term(e, x * c);
    return r;
}

LaurentPoly LaurentPoly::truncated(const FieldSpec& field, int64_t bound) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        if (coords_trace(field, e) <= bound) r.terms_.emplace(e, c);
    return r;
}

nlohmann::ordered_json LaurentPoly::to_json() const {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::ordered_json t;
        t["exp"] = nlohmann::ordered_json::array({e[0], e[1]});
        t["coeff"] = nlohmann::ordered_json::array({c.a().get_str(), c.b().get_str()});
        arr.push_back(t);
    }
    return arr;
}

nlohmann::ordered_json ConeRatFunc::to_json() const {
    nlohmann::ordered_json j;
    j["numerator"] = numerator.to_json();
    auto den = nlohmann::ordered_json::array();
    for (const auto& [e, m] : denominator) {
        nlohmann::ordered_json f;
        f["exp"] = nlohmann::ordered_json::array({e[0], e[1]});
        f["mult"] = m;
        den.push_back(f);
    }
    j["denominator"] = den;
    j["weight"] = weight;
    return j;
}

ConeRatFunc generating_function(const FieldSpec& field, const Cone& cone) {
    ConeRatFunc f;
    for (const FieldElement& p : parallelepiped_lattice_points(field, cone.gens))
        f.numerator.add_term(p.coords(), FieldElement::from_int(1));
    for (const FieldElement& a : cone.gens) f.denominator[a.coords()] += 1;
    f.weight.assign(static_cast<size_t>(field.degree()), 0);
    return f;
}

LaurentPoly differentiate_terms(const FieldSpec& field, Derivation d, const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, c * multiplier(field, d, e));
    return r;
}

ConeRatFunc differentiate(const FieldSpec& field, Derivation d, const ConeRatFunc& f) {
    if (d == Derivation::Norm) {
        if (field.degree() == 1) return differentiate(field, Derivation::Tau1, f);
        return differentiate(field, Derivation::Tau2, differentiate(field, Derivation::Tau1, f));
    }
    require(d == Derivation::Tau1 || field.degree() == 2, ErrorCode::UnsupportedDegree,
            "Q has a single embedding");
    // d(P / prod D_i^m_i) = (dP prod D_i + P sum_i m_i tau(a_i) t^a_i prod_{j != i} D_j) / prod D_i^(m_i + 1)
    ConeRatFunc out;
    LaurentPoly all = LaurentPoly::monomial({0, 0});
    for (const auto& [a, m] : f.denominator) all = all * LaurentPoly::one_minus(a);
    out.numerator = differentiate_terms(field, d, f.numerator) * all;
    for (const auto& [a, m] : f.denominator) {
        LaurentPoly rest = LaurentPoly::monomial(a, multiplier(field, d, a) * Rational(m));
        for (const auto& [b, n] : f.denominator)
            if (b != a) rest = rest * LaurentPoly::one_minus(b);
        out.numerator += f.numerator * rest;
    }
    for (const auto& [a, m] : f.denominator) out.denominator[a] = m + 1;
    out.weight = f.weight;
    if (out.weight.empty()) out.weight.assign(static_cast<size_t>(field.degree()), 0);
    out.weight[d == Derivation::Tau1 ? 0 : 1] -= 1;
    return out;
}

ConeRatFunc differentiate(const FieldSpec& field, const std::vector<int>& k, const ConeRatFunc& f) {
    require(static_cast<int>(k.size()) == field.degree(), ErrorCode::InvalidArgument,
            "weight vector must have one entry per embedding");
    ConeRatFunc r = f;
    for (size_t i = 0; i < k.size(); ++i) {
        require(k[i] >= 0, ErrorCode::InvalidArgument, "derivative orders must be nonnegative");
        for (int n = 0; n < k[i]; ++n) r = differentiate(field, i == 0 ? Derivation::Tau1 : Derivation::Tau2, r);
    }
    return r;
}

bool rational_equal(const ConeRatFunc& f, const ConeRatFunc& g) {
    std::map<Coords, int> common = f.denominator;
    for (const auto& [a, m] : g.denominator) common[a] = std::max(common[a], m);
    auto lift = [&](const ConeRatFunc& h) {
        LaurentPoly r = h.numerator;
        for (const auto& [a, m] : common) {
            auto it = h.denominator.find(a);
            int have = it == h.denominator.end() ? 0 : it->second;
            r = r * power(LaurentPoly::one_minus(a), m - have);
        }
        return r;
    };
    return lift(f) == lift(g);
}

ConeRatFunc cocycle_defect(const FieldSpec& field, const std::vector<FieldElement>& alphas) {
    require(static_cast<int>(alphas.size()) == field.degree() + 1, ErrorCode::InvalidArgument,
            "cocycle defect needs g + 1 elements");
    ConeRatFunc out;
    for (const FieldElement& a : alphas) out.denominator[a.coords()] += 1;
    out.weight.assign(static_cast<size_t>(field.degree()), 0);
    for (size_t j = 0; j < alphas.size(); ++j) {
        std::vector<FieldElement> omit;
        for (size_t i = 0; i < alphas.size(); ++i)
            if (i != j) omit.push_back(alphas[i]);
        int s = orientation_sign(field, omit);
        if (s == 0) continue;
        ConeRatFunc g = generating_function(field, Cone{omit});
        int sign = (j % 2 == 0 ? 1 : -1) * s;
        out.numerator += g.numerator * LaurentPoly::one_minus(alphas[j].coords()) * FieldElement::from_int(sign);
    }
    return out;
}

LaurentPoly cocycle_defect_series(const FieldSpec& field, const std::vector<FieldElement>& alphas, int64_t bound) {
    LaurentPoly out;
    for (size_t j = 0; j < alphas.size(); ++j) {
        std::vector<FieldElement> omit;
        for (size_t i = 0; i < alphas.size(); ++i)
            if (i != j) omit.push_back(alphas[i]);
        int s = orientation_sign(field, omit);
        if (s == 0) continue;
        int sign = (j % 2 == 0 ? 1 : -1) * s;
        out += series_expand(field, generating_function(field, Cone{omit}), bound) * FieldElement::from_int(sign);
    }
    return out;
}

LaurentPoly series_expand(const FieldSpec& field, const ConeRatFunc& f, int64_t bound) {
    LaurentPoly r = f.numerator.truncated(field, bound);
    for (const auto& [a, m] : f.denominator) {
        const int64_t tr = coords_trace(field, a);
        require(tr > 0, ErrorCode::InvalidArgument, "series expansion needs totally positive denominators");
        // (1 - t^a)^-m = sum_n C(n + m - 1, m - 1) t^(n a)
        LaurentPoly geo;
        Integer binom = 1;
        for (int64_t n = 0; n * tr <= bound; ++n) {
            if (n > 0) {
                binom *= n + m - 1;
                binom /= n;
            }
            geo.add_term(scale(n, a), FieldElement(field, Rational(binom)));
        }
        r = (r * geo).truncated(field, bound);
    }
    return r;
}

ConeRatFunc substitute_unit(const FieldSpec& field, const ConeRatFunc& f, const FieldElement& u) {
    auto move = [&](const Coords& e) { return (u * FieldElement::from_coords(field, e)).coords(); };
    ConeRatFunc out;
    for (const auto& [e, c] : f.numerator.terms()) out.numerator.add_term(move(e), c);
    for (const auto& [a, m] : f.denominator) out.denominator[move(a)] += m;
    out.weight = f.weight;
    return out;
}

}  // namespace shintani
