#include "shintani/residue.hpp"

#include "shintani/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace shintani {

namespace {

int64_t mod_mul(int64_t a, int64_t b, int64_t n) {
    __int128 r = static_cast<__int128>(a) * b % n;
    if (r < 0) r += n;
    return static_cast<int64_t>(r);
}

bool is_identity_lattice(const std::vector<Coords>& gens) {
    Mat2 h = lattice_hnf(gens);
    return h[0][0] == 1 && h[1][1] == 1;
}

// inverse of a unimodular integer matrix, via rational elimination
IntMatrix unimodular_inverse_n(const IntMatrix& a) {
    const size_t n = a.rows();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(a(i, j));
        m[i][n + i] = 1;
    }
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        require(p < n, ErrorCode::Internal, "singular transform");
        std::swap(m[p], m[c]);
        Rational inv = 1 / m[c][c];
        for (auto& v : m[c]) v *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    IntMatrix out(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            require(m[i][n + j].get_den() == 1, ErrorCode::Internal, "transform is not unimodular");
            out(i, j) = to_int64(m[i][n + j].get_num());
        }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ideals

IdealSpec IdealSpec::principal(const FieldSpec& field, const FieldElement& generator) {
    require(!generator.is_zero(), ErrorCode::InvalidArgument, "the zero ideal has no residue ring");
    require(generator.is_integral(), ErrorCode::InvalidArgument, "ideal generator must be integral");
    if (field.is_rational()) {
        int64_t q = std::abs(generator.coords()[0]);
        return IdealSpec(field, Mat2{{{q, 0}, {0, 1}}});
    }
    Coords c0 = generator.coords();
    Coords c1 = (generator * FieldElement(field, 0, 1)).coords();
    return IdealSpec(field, lattice_hnf({c0, c1}));
}

IdealSpec IdealSpec::from_basis(const FieldSpec& field, const Mat2& basis) {
    Coords c0{basis[0][0], basis[1][0]};
    Coords c1{basis[0][1], basis[1][1]};
    require(det(basis) != 0, ErrorCode::InvalidArgument, "ideal basis is singular");
    Mat2 h = lattice_hnf({c0, c1});
    if (field.is_rational()) {
        require(h[1][1] == 1, ErrorCode::InvalidArgument, "an ideal of Z needs basis [[q,0],[0,1]]");
        return IdealSpec(field, h);
    }
    Mat2 w = multiplication_matrix(field, FieldElement(field, 0, 1));
    for (const Coords& c : {Coords{h[0][0], h[1][0]}, Coords{h[0][1], h[1][1]}})
        require(lattice_contains(h, shintani::apply(w, c)), ErrorCode::InvalidArgument,
                "lattice is not closed under multiplication by w, so it is not an ideal");
    return IdealSpec(field, h);
}

IdealSpec IdealSpec::parse(const FieldSpec& field, const std::string& text) {
    auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text.compare(first, 2, "[[") == 0) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            fail(ErrorCode::Parse, std::string("bad ideal matrix: ") + e.what());
        }
        require(j.is_array() && j.size() == 2 && j[0].size() == 2 && j[1].size() == 2, ErrorCode::Parse,
                "ideal matrix must be [[a,b],[c,d]]");
        Mat2 b{{{j[0][0].get<int64_t>(), j[0][1].get<int64_t>()}, {j[1][0].get<int64_t>(), j[1][1].get<int64_t>()}}};
        return from_basis(field, b);
    }
    return principal(field, parse_element(field, text));
}

std::string IdealSpec::to_string() const {
    std::ostringstream os;
    os << "[[" << hnf_[0][0] << "," << hnf_[0][1] << "],[" << hnf_[1][0] << "," << hnf_[1][1] << "]]";
    return os.str();
}

// ---------------------------------------------------------------------------
// residue ring

ResidueRing::ResidueRing(const IdealSpec& ideal)
    : ideal_(ideal), snf_(smith_normal_form(IntMatrix::from_mat2(ideal.hnf()))) {
    const FieldSpec& f = ideal.field();
    if (f.is_rational()) {
        omega_sq_ = {0, 0};
    } else if (f.half_omega()) {
        omega_sq_ = {(f.m() - 1) / 4, 1};
    } else {
        omega_sq_ = {f.m(), 0};
    }
}

Coords ResidueRing::multiply(const Coords& x, const Coords& y) const {
    int64_t bd = checked_mul(x[1], y[1]);
    int64_t a = checked_add(checked_mul(x[0], y[0]), checked_mul(bd, omega_sq_[0]));
    int64_t b = checked_add(checked_add(checked_mul(x[0], y[1]), checked_mul(x[1], y[0])), checked_mul(bd, omega_sq_[1]));
    return {a, b};
}

Coords ResidueRing::reduce(const Coords& c) const {
    const Mat2& h = ideal_.hnf();
    int64_t t = floor_div(c[1], h[1][1]);
    int64_t b = c[1] - t * h[1][1];
    int64_t a = floor_mod(checked_sub(c[0], checked_mul(t, h[0][1])), h[0][0]);
    return {a, b};
}

int64_t ResidueRing::index_of(const Coords& c) const {
    Coords r = reduce(c);
    return r[0] + ideal_.hnf()[0][0] * r[1];
}

Coords ResidueRing::element(int64_t index) const {
    const int64_t h11 = ideal_.hnf()[0][0];
    return {index % h11, index / h11};
}

int64_t ResidueRing::mul(int64_t x, int64_t y) const { return index_of(multiply(element(x), element(y))); }

int64_t ResidueRing::add(int64_t x, int64_t y) const { return index_of(shintani::add(element(x), element(y))); }

int64_t ResidueRing::neg(int64_t x) const { return index_of(scale(-1, element(x))); }

bool ResidueRing::is_unit(int64_t x) const {
    // x O + f = O
    Coords c = element(x);
    const Mat2& h = ideal_.hnf();
    return is_identity_lattice({c, multiply(c, {0, 1}), {h[0][0], h[1][0]}, {h[0][1], h[1][1]}});
}

std::vector<int64_t> ResidueRing::units() const {
    std::vector<int64_t> out;
    for (int64_t i = 0; i < size(); ++i)
        if (is_unit(i)) out.push_back(i);
    return out;
}

// ---------------------------------------------------------------------------
// torsion points

int64_t TorsionPoint::exponent_at(const Coords& c) const {
    __int128 e = static_cast<__int128>(w1) * c[0] + static_cast<__int128>(w2) * c[1];
    e %= level;
    if (e < 0) e += level;
    return static_cast<int64_t>(e);
}

int64_t TorsionPoint::order() const { return level / gcd64(level, gcd64(w1, w2)); }

TorsionPoint TorsionPoint::power(int64_t j) const {
    return {level, mod_mul(w1, floor_mod(j, level), level), mod_mul(w2, floor_mod(j, level), level)};
}

std::string TorsionPoint::to_string() const {
    return "xi[" + std::to_string(level) + "](" + std::to_string(w1) + "," + std::to_string(w2) + ")";
}

std::vector<TorsionPoint> torsion_points(const ResidueRing& ring) {
    const SmithForm& s = ring.snf();
    const int64_t d1 = s.D(0, 0), d2 = s.D(1, 1), n = d2;
    std::vector<TorsionPoint> out;
    out.reserve(static_cast<size_t>(ring.size()));
    for (int64_t t1 = 0; t1 < d1; ++t1)
        for (int64_t t2 = 0; t2 < d2; ++t2) {
            int64_t f1 = t1 * (n / d1), f2 = t2;
            int64_t w1 = floor_mod(checked_add(checked_mul(f1, s.U(0, 0)), checked_mul(f2, s.U(1, 0))), n);
            int64_t w2 = floor_mod(checked_add(checked_mul(f1, s.U(0, 1)), checked_mul(f2, s.U(1, 1))), n);
            out.push_back(make_torsion_point(ring, w1, w2));
        }
    std::sort(out.begin(), out.end());
    require(std::adjacent_find(out.begin(), out.end()) == out.end(), ErrorCode::Internal,
            "duplicate torsion points");
    return out;
}

TorsionPoint make_torsion_point(const ResidueRing& ring, int64_t w1, int64_t w2) {
    const int64_t n = ring.exponent();
    TorsionPoint xi{n, floor_mod(w1, n), floor_mod(w2, n)};
    const Mat2& h = ring.ideal().hnf();
    for (const Coords& c : {Coords{h[0][0], h[1][0]}, Coords{h[0][1], h[1][1]}})
        require(xi.exponent_at(c) == 0, ErrorCode::InvalidArgument,
                "exponents (" + std::to_string(w1) + "," + std::to_string(w2) + ") at level " + std::to_string(n) +
                    " do not define a character of O/" + ring.ideal().to_string());
    return xi;
}

TorsionPoint unit_action(const FieldSpec& field, const FieldElement& u, const TorsionPoint& xi) {
    Mat2 m = multiplication_matrix(field, u);
    TorsionPoint out = xi;
    out.w1 = xi.exponent_at({m[0][0], m[1][0]});
    out.w2 = xi.exponent_at({m[0][1], m[1][1]});
    return out;
}

int64_t isotropy_index(const FieldSpec& field, const TorsionPoint& xi) {
    if (field.is_rational()) return 1;
    FieldElement eps = fundamental_totally_positive_unit(field);
    TorsionPoint cur = unit_action(field, eps, xi);
    int64_t e = 1;
    while (cur != xi) {
        cur = unit_action(field, eps, cur);
        ++e;
    }
    return e;
}

std::vector<Orbit> orbit_representatives(const ResidueRing& ring, bool exclude_trivial) {
    const FieldSpec& field = ring.field();
    std::vector<Orbit> out;
    std::set<TorsionPoint> seen;
    std::optional<FieldElement> eps;
    if (!field.is_rational()) eps = fundamental_totally_positive_unit(field);
    for (const TorsionPoint& xi : torsion_points(ring)) {
        if (seen.count(xi)) continue;
        Orbit o{xi, 0};
        TorsionPoint cur = xi;
        do {
            seen.insert(cur);
            ++o.size;
            if (!eps) break;
            cur = unit_action(field, *eps, cur);
        } while (cur != xi);
        if (exclude_trivial && xi.is_trivial()) continue;
        out.push_back(o);
    }
    return out;
}

IdealSpec torsion_conductor(const ResidueRing& ring, const TorsionPoint& xi) {
    const Mat2& h = ring.ideal().hnf();
    std::vector<Coords> gens{{h[0][0], h[1][0]}, {h[0][1], h[1][1]}};
    for (int64_t i = 1; i < ring.size(); ++i) {
        Coords c = ring.element(i);
        if (xi.exponent_at(c) == 0 && xi.exponent_at(ring.multiply(c, {0, 1})) == 0) gens.push_back(c);
    }
    return IdealSpec::from_basis(ring.field(), lattice_hnf(gens));
}

bool is_primitive_torsion(const ResidueRing& ring, const TorsionPoint& xi) {
    for (int64_t i = 1; i < ring.size(); ++i) {
        Coords c = ring.element(i);
        if (xi.exponent_at(c) == 0 && xi.exponent_at(ring.multiply(c, {0, 1})) == 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// unit group

UnitGroup unit_group_generators(const ResidueRing& ring) {
    const std::vector<int64_t> units = ring.units();
    const int64_t one = ring.one();
    auto order_of = [&](int64_t x) {
        int64_t k = 1;
        for (int64_t y = x; y != one; y = ring.mul(y, x)) ++k;
        return k;
    };
    std::vector<int64_t> orders(units.size());
    for (size_t i = 0; i < units.size(); ++i) orders[i] = order_of(units[i]);

    // grow a subgroup greedily, recording exponent vectors and index relations
    std::map<int64_t, std::vector<int64_t>> expo{{one, {}}};
    std::vector<int64_t> gens;
    std::vector<std::vector<int64_t>> relations;
    while (expo.size() < units.size()) {
        size_t best = units.size();
        for (size_t i = 0; i < units.size(); ++i)
            if (!expo.count(units[i]) && (best == units.size() || orders[i] > orders[best])) best = i;
        const int64_t g = units[best];
        const size_t r = gens.size();
        gens.push_back(g);
        for (auto& [x, v] : expo) v.push_back(0);
        for (auto& rel : relations) rel.push_back(0);
        int64_t n = 1, p = g;
        while (!expo.count(p)) {
            p = ring.mul(p, g);
            ++n;
        }
        std::vector<int64_t> rel = expo.at(p);
        for (auto& v : rel) v = -v;
        rel[r] = n;
        relations.push_back(rel);
        std::map<int64_t, std::vector<int64_t>> grown;
        for (const auto& [x, v] : expo) {
            int64_t y = x;
            for (int64_t i = 0; i < n; ++i) {
                std::vector<int64_t> w = v;
                w[r] = i;
                grown.emplace(y, std::move(w));
                y = ring.mul(y, g);
            }
        }
        expo = std::move(grown);
    }

    UnitGroup out;
    if (gens.empty()) return out;
    const size_t r = gens.size();
    IntMatrix rel(r, r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) rel(i, j) = relations[i][j];
    SmithForm s = smith_normal_form(rel);
    IntMatrix vinv = unimodular_inverse_n(s.V);
    for (size_t j = 0; j < r; ++j) {
        if (s.D(j, j) == 1) continue;
        int64_t h = one;
        for (size_t i = 0; i < r; ++i) {
            int64_t e = floor_mod(vinv(j, i), orders[static_cast<size_t>(
                                                     std::find(units.begin(), units.end(), gens[i]) - units.begin())]);
            for (int64_t k = 0; k < e; ++k) h = ring.mul(h, gens[i]);
        }
        require(order_of(h) == s.D(j, j), ErrorCode::Internal, "unit group generator has the wrong order");
        out.generators.push_back(h);
        out.orders.push_back(s.D(j, j));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hecke characters

HeckeCharacter::HeckeCharacter(const ResidueRing& ring, int64_t modulus, std::vector<int64_t> table)
    : ring_(ring), modulus_(modulus), table_(std::move(table)) {
    require(modulus_ >= 1, ErrorCode::InvalidArgument, "character modulus must be positive");
    require(static_cast<int64_t>(table_.size()) == ring_.size(), ErrorCode::InvalidArgument,
            "character table size does not match the residue ring");
    for (int64_t i = 0; i < ring_.size(); ++i) {
        int64_t& v = table_[static_cast<size_t>(i)];
        if (ring_.is_unit(i)) {
            require(v >= 0, ErrorCode::InvalidArgument, "character must be nonzero on units");
            v = floor_mod(v, modulus_);
        } else {
            require(v == -1, ErrorCode::InvalidArgument, "character must vanish off the unit group");
        }
    }
}

HeckeCharacter HeckeCharacter::norm_character(const FieldSpec& field, int64_t q, int64_t j) {
    require(is_prime(q), ErrorCode::InvalidArgument, "norm characters need a prime modulus q");
    ResidueRing ring(IdealSpec::principal(field, FieldElement::from_int(q)));
    const int64_t M = q - 1;
    std::vector<int64_t> dlog(static_cast<size_t>(q), -1);
    int64_t g = least_primitive_root(q);
    for (int64_t a = 0, x = 1; a < M; ++a, x = x * g % q) dlog[static_cast<size_t>(x)] = a;
    if (q == 2) dlog[1] = 0;
    std::vector<int64_t> table(static_cast<size_t>(ring.size()));
    for (int64_t i = 0; i < ring.size(); ++i) {
        FieldElement x = FieldElement::from_coords(field, ring.element(i));
        Integer n = x.norm().get_num() % Integer(q);
        if (n < 0) n += q;
        int64_t l = dlog[static_cast<size_t>(to_int64(n))];
        table[static_cast<size_t>(i)] = l < 0 ? -1 : mod_mul(floor_mod(j, std::max<int64_t>(M, 1)), l, std::max<int64_t>(M, 1));
    }
    return HeckeCharacter(ring, std::max<int64_t>(M, 1), std::move(table));
}

HeckeCharacter HeckeCharacter::from_generator_values(const ResidueRing& ring, int64_t modulus,
                                                     const std::vector<int64_t>& generators,
                                                     const std::vector<int64_t>& values) {
    require(generators.size() == values.size(), ErrorCode::InvalidArgument,
            "need exactly one value per unit-group generator");
    std::vector<int64_t> table(static_cast<size_t>(ring.size()), -1);
    for (int64_t g : generators)
        require(ring.is_unit(g), ErrorCode::InvalidArgument, "character generator is not a unit");
    const int64_t one = ring.one();
    table[static_cast<size_t>(one)] = 0;
    std::deque<int64_t> queue{one};
    while (!queue.empty()) {
        int64_t x = queue.front();
        queue.pop_front();
        for (size_t i = 0; i < generators.size(); ++i) {
            int64_t y = ring.mul(x, generators[i]);
            int64_t e = floor_mod(table[static_cast<size_t>(x)] + values[i], modulus);
            int64_t& slot = table[static_cast<size_t>(y)];
            if (slot < 0) {
                slot = e;
                queue.push_back(y);
            } else {
                require(slot == e, ErrorCode::InvalidArgument,
                        "generator values violate a relation of the unit group; not a character");
            }
        }
    }
    for (int64_t u : ring.units())
        require(table[static_cast<size_t>(u)] >= 0, ErrorCode::InvalidArgument,
                "generators do not generate the unit group");
    return HeckeCharacter(ring, modulus, std::move(table));
}

HeckeCharacter HeckeCharacter::from_json(const FieldSpec& field, const nlohmann::json& j) {
    try {
        if (j.contains("norm_character")) {
            const auto& n = j.at("norm_character");
            return norm_character(field, n.at("q").get<int64_t>(), n.at("j").get<int64_t>());
        }
        ResidueRing ring(IdealSpec::parse(field, j.at("conductor").get<std::string>()));
        int64_t modulus = j.at("modulus").get<int64_t>();
        std::vector<int64_t> gens;
        if (j.contains("generators")) {
            for (const auto& c : j.at("generators"))
                gens.push_back(ring.index_of(parse_element(field, c.is_string() ? c.get<std::string>() : c.dump()).coords()));
        } else {
            gens = unit_group_generators(ring).generators;
        }
        return from_generator_values(ring, modulus, gens, j.at("values").get<std::vector<int64_t>>());
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::Parse, std::string("bad character description: ") + e.what());
    }
}

nlohmann::ordered_json HeckeCharacter::to_json() const {
    nlohmann::ordered_json j;
    j["conductor"] = ring_.ideal().to_string();
    j["modulus"] = modulus_;
    UnitGroup ug = unit_group_generators(ring_);
    auto gens = nlohmann::ordered_json::array();
    auto vals = nlohmann::ordered_json::array();
    for (int64_t g : ug.generators) {
        Coords c = ring_.element(g);
        gens.push_back(nlohmann::ordered_json::array({c[0], c[1]}));
        vals.push_back(table_[static_cast<size_t>(g)]);
    }
    j["generators"] = gens;
    j["values"] = vals;
    return j;
}

CycNumber HeckeCharacter::value_at(const Coords& c) const {
    int64_t e = exponent_at(c);
    if (e < 0) return CycNumber(modulus_);
    return CycNumber::zeta_power(modulus_, e);
}

CharacterReport validate_character(const HeckeCharacter& chi) {
    CharacterReport rep;
    const ResidueRing& ring = chi.ring();
    const auto& t = chi.table();
    const int64_t M = chi.modulus();
    const std::vector<int64_t> units = ring.units();
    const UnitGroup ug = unit_group_generators(ring);

    for (int64_t x : units) {
        for (int64_t g : ug.generators) {
            int64_t y = ring.mul(x, g);
            if (t[static_cast<size_t>(y)] != floor_mod(t[static_cast<size_t>(x)] + t[static_cast<size_t>(g)], M)) {
                rep.multiplicative = false;
                break;
            }
        }
        if (!rep.multiplicative) break;
    }
    if (t[static_cast<size_t>(ring.one())] != 0) rep.multiplicative = false;
    if (!rep.multiplicative) rep.problems.push_back("not multiplicative on (O/f)^x");

    if (!ring.field().is_rational()) {
        FieldElement eps = fundamental_totally_positive_unit(ring.field());
        if (chi.exponent_at(eps.coords()) != 0) {
            rep.trivial_on_units = false;
            rep.problems.push_back("chi(eps) != 1 for the totally positive unit eps = " + eps.to_string());
        }
    }

    // chi factors through a strictly larger ideal f' iff it is trivial on 1 + f';
    // every such f' contains some f + xO with x outside f
    const Mat2& h = ring.ideal().hnf();
    std::set<Mat2> supers;
    for (int64_t i = 1; i < ring.size(); ++i) {
        Coords c = ring.element(i);
        supers.insert(lattice_hnf({{h[0][0], h[1][0]}, {h[0][1], h[1][1]}, c, ring.multiply(c, {0, 1})}));
    }
    for (const Mat2& s : supers) {
        bool trivial = true;
        for (int64_t u : units) {
            Coords c = ring.element(u);
            if (lattice_contains(s, {c[0] - 1, c[1]}) && t[static_cast<size_t>(u)] != 0) {
                trivial = false;
                break;
            }
        }
        if (trivial) {
            rep.primitive = false;
            rep.problems.push_back("factors through the larger ideal with Hermite basis " +
                                   IdealSpec::from_basis(ring.field(), s).to_string());
            break;
        }
    }
    return rep;
}

CycNumber fourier_coefficient(const HeckeCharacter& chi, const TorsionPoint& xi) {
    const ResidueRing& ring = chi.ring();
    require(xi.level == ring.exponent(), ErrorCode::InvalidArgument,
            "torsion point level does not match the conductor of the character");
    make_torsion_point(ring, xi.w1, xi.w2);
    const int64_t M = chi.modulus(), N = xi.level, L = lcm64(M, N);
    std::vector<Rational> terms(static_cast<size_t>(L), 0);
    for (int64_t b = 0; b < ring.size(); ++b) {
        int64_t e = chi.table()[static_cast<size_t>(b)];
        if (e < 0) continue;
        int64_t x = xi.exponent_at(ring.element(ring.neg(b)));
        terms[static_cast<size_t>(floor_mod(e * (L / M) + x * (L / N), L))] += 1;
    }
    CycNumber c = CycNumber::from_exponent_sums(L, terms);
    c *= Rational(1, static_cast<unsigned long>(ring.size()));
    return c;
}

}  // namespace shintani
