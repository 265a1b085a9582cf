#include "shintani/cones.hpp"

#include "shintani/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace shintani {

namespace {

void require_tuple(const FieldSpec& field, const std::vector<FieldElement>& gens) {
    require(static_cast<int>(gens.size()) == field.degree(), ErrorCode::InvalidArgument,
            "expected " + std::to_string(field.degree()) + " generators, got " + std::to_string(gens.size()));
}

Rational floor_q(const Rational& x) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rational(f);
}

// log(tau_2(x) / tau_1(x)); strictly decreasing along u-translates
long double slope_log(const FieldSpec& field, const FieldElement& x) {
    return std::log(approximate(field, 1, x)) - std::log(approximate(field, 0, x));
}

}  // namespace

int orientation_sign(const FieldSpec& field, const std::vector<FieldElement>& gens) {
    require_tuple(field, gens);
    if (field.degree() == 1) return to_int(embedded_sign(field, 0, gens[0]));
    const FieldElement& a = gens[0];
    const FieldElement& b = gens[1];
    return to_int(embedded_sign(field, 0, a * b.conj() - b * a.conj()));
}

std::vector<Rational> barycentric(const FieldSpec& field, const std::vector<FieldElement>& gens,
                                  const FieldElement& x) {
    require_tuple(field, gens);
    if (field.degree() == 1) {
        require(!gens[0].is_zero(), ErrorCode::InvalidArgument, "degenerate cone");
        return {x.a() / gens[0].a()};
    }
    const Rational &a11 = gens[0].a(), &a21 = gens[0].b(), &a12 = gens[1].a(), &a22 = gens[1].b();
    Rational d = a11 * a22 - a12 * a21;
    require(d != 0, ErrorCode::InvalidArgument, "degenerate cone: generators are linearly dependent");
    return {(a22 * x.a() - a12 * x.b()) / d, (a11 * x.b() - a21 * x.a()) / d};
}

std::vector<FieldElement> perturbation_vector(const FieldSpec& field, const std::vector<FieldElement>& gens) {
    require_tuple(field, gens);
    if (field.degree() == 1) return {gens[0].inverse()};
    const FieldElement& a = gens[0];
    const FieldElement& b = gens[1];
    FieldElement delta = a * b.conj() - b * a.conj();
    require(!delta.is_zero(), ErrorCode::InvalidArgument, "degenerate cone: generators are linearly dependent");
    return {-b / delta, a / delta};
}

bool upper_closure_contains(const FieldSpec& field, const std::vector<FieldElement>& gens, const FieldElement& x,
                            Region region) {
    if (!is_totally_positive(field, x)) return false;
    std::vector<Rational> xh = barycentric(field, gens, x);
    std::vector<FieldElement> c = perturbation_vector(field, gens);
    for (size_t i = 0; i < xh.size(); ++i) {
        int s = to_int(embedded_sign(field, 0, c[i]));
        if (xh[i] < 0 || (xh[i] == 0 && s >= 0)) return false;
        if (region == Region::Parallelepiped && (xh[i] > 1 || (xh[i] == 1 && s <= 0))) return false;
    }
    return true;
}

int64_t lattice_index(const FieldSpec& field, const std::vector<FieldElement>& gens) {
    require_tuple(field, gens);
    if (field.degree() == 1) return std::abs(gens[0].coords()[0]);
    Coords c0 = gens[0].coords(), c1 = gens[1].coords();
    return std::abs(det(Mat2{{{c0[0], c1[0]}, {c0[1], c1[1]}}}));
}

std::vector<FieldElement> parallelepiped_lattice_points(const FieldSpec& field,
                                                        const std::vector<FieldElement>& gens) {
    require(orientation_sign(field, gens) != 0, ErrorCode::InvalidArgument, "degenerate parallelepiped");
    std::vector<FieldElement> c = perturbation_vector(field, gens);
    std::vector<int> cs;
    for (const auto& ci : c) cs.push_back(to_int(embedded_sign(field, 0, ci)));

    std::vector<Coords> reps;
    if (field.degree() == 1) {
        int64_t n = gens[0].coords()[0];
        for (int64_t a = 0; a < n; ++a) reps.push_back({a, 0});
    } else {
        Mat2 h = lattice_hnf({gens[0].coords(), gens[1].coords()});
        for (int64_t b = 0; b < h[1][1]; ++b)
            for (int64_t a = 0; a < h[0][0]; ++a) reps.push_back({a, b});
    }

    std::vector<FieldElement> out;
    out.reserve(reps.size());
    for (const Coords& r : reps) {
        std::vector<Rational> xh = barycentric(field, gens, FieldElement::from_coords(field, r));
        FieldElement p;
        for (size_t i = 0; i < xh.size(); ++i) {
            Rational f = xh[i] - floor_q(xh[i]);
            if (f == 0 && cs[i] > 0) f = 1;
            p += gens[i] * f;
        }
        out.push_back(p);
    }
    std::sort(out.begin(), out.end(), [](const FieldElement& x, const FieldElement& y) {
        return x.coords() < y.coords();
    });
    return out;
}

// ---------------------------------------------------------------------------
// units

FieldElement unit_power(const FieldElement& u, int64_t j) {
    FieldElement base = j < 0 ? u.inverse() : u;
    FieldElement r = FieldElement::from_int(1);
    for (int64_t n = j < 0 ? -j : j; n > 0; n >>= 1) {
        if (n & 1) r *= base;
        base *= base;
    }
    return r;
}

std::optional<int64_t> unit_power_index(const FieldSpec& field, const FieldElement& u, const FieldElement& x,
                                        const FieldElement& y) {
    if (x.is_zero() || y.is_zero()) return std::nullopt;
    FieldElement r = x / y;
    if (r.norm() != 1 || !r.is_integral()) return std::nullopt;
    if (field.is_rational()) {
        if (r == FieldElement::from_int(1)) return 0;
        return std::nullopt;
    }
    long double lr = std::log(approximate(field, 0, r));
    long double lu = std::log(approximate(field, 0, u));
    int64_t j = std::llround(lr / lu);
    for (int64_t d : {0, -1, 1})
        if (unit_power(u, j + d) == r) return j + d;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// fans

Fan standard_fan(const FieldSpec& field) {
    require(field.degree() <= 2, ErrorCode::UnsupportedDegree, "fans are constructed only for degree <= 2");
    FieldElement one = FieldElement::from_int(1);
    if (field.degree() == 1) return Fan{field, one, {Cone{{one}}}};
    FieldElement eps = fundamental_totally_positive_unit(field);
    return Fan{field, eps, {Cone{{one, eps}}}};
}

Fan subdivide(const Fan& fan, size_t index, const FieldElement& ray) {
    require(fan.field.degree() == 2, ErrorCode::UnsupportedDegree, "subdivision needs a two-dimensional fan");
    require(index < fan.cones.size(), ErrorCode::InvalidArgument, "cone index out of range");
    require(ray.is_integral() && is_totally_positive(fan.field, ray) && is_primitive(fan.field, ray),
            ErrorCode::InvalidArgument, "subdivision ray must be primitive and totally positive");
    const Cone& s = fan.cones[index];
    std::vector<Rational> xh = barycentric(fan.field, s.gens, ray);
    require(xh[0] > 0 && xh[1] > 0, ErrorCode::InvalidArgument,
            "ray " + ray.to_string() + " is not in the interior of the cone");
    Fan out = fan;
    out.cones.erase(out.cones.begin() + static_cast<std::ptrdiff_t>(index));
    out.cones.insert(out.cones.begin() + static_cast<std::ptrdiff_t>(index),
                     {Cone{{s.gens[0], ray}}, Cone{{ray, s.gens[1]}}});
    return out;
}

std::vector<FieldElement> small_totally_positive(const FieldSpec& field, size_t count) {
    std::vector<FieldElement> out;
    for (int64_t t = 1; out.size() < count; ++t) {
        if (field.is_rational()) {
            out.push_back(FieldElement::from_int(t));
            continue;
        }
        std::vector<Coords> level;
        for (int64_t b = -t; b <= t; ++b) {
            int64_t twice_a = field.half_omega() ? t - b : t;
            if (twice_a % 2 != 0) continue;
            Coords c{twice_a / 2, b};
            if (is_totally_positive(field, FieldElement::from_coords(field, c))) level.push_back(c);
        }
        std::sort(level.begin(), level.end());
        for (const Coords& c : level) {
            if (out.size() == count) break;
            out.push_back(FieldElement::from_coords(field, c));
        }
    }
    return out;
}

Fan adapt_fan_to(const Fan& fan, const TorsionPoint& xi) {
    require(!xi.is_trivial(), ErrorCode::InvalidArgument, "cannot adapt a fan to the trivial character");
    const FieldSpec& field = fan.field;
    auto kernel = [&](const FieldElement& a) { return xi.exponent_at(a.coords()) == 0; };
    if (field.degree() == 1) {
        for (const Cone& s : fan.cones)
            require(!kernel(s.gens[0]), ErrorCode::Internal, "rational fan generator lies in ker(xi)");
        return fan;
    }

    // smallest power of the unit fixing xi
    int64_t r = 1;
    for (TorsionPoint cur = unit_action(field, fan.unit, xi); cur != xi; cur = unit_action(field, fan.unit, cur)) ++r;
    Fan out{field, unit_power(fan.unit, r), {}};
    for (int64_t j = 0; j < r; ++j) {
        FieldElement uj = unit_power(fan.unit, j);
        for (const Cone& s : fan.cones) out.cones.push_back(Cone{{uj * s.gens[0], uj * s.gens[1]}});
    }

    std::vector<FieldElement> classes;
    for (const Cone& s : out.cones)
        for (const FieldElement& g : s.gens) {
            bool known = false;
            for (const FieldElement& c : classes)
                if (unit_power_index(field, out.unit, g, c)) {
                    known = true;
                    break;
                }
            if (!known) classes.push_back(g);
        }

    const std::vector<FieldElement> pool = small_totally_positive(field, 64);
    const long double lu = slope_log(field, fan.unit);
    for (const FieldElement& alpha : classes) {
        if (!kernel(alpha)) continue;
        std::vector<int> old_signs;
        for (const Cone& s : out.cones) old_signs.push_back(orientation_sign(field, s.gens));
        // perturb inside the unit sector of alpha so small offsets keep the orientation
        const FieldElement u = unit_power(fan.unit, std::llround(slope_log(field, alpha) / lu));
        const FieldElement base = alpha / u;
        bool done = false;
        for (int64_t n = 1; n <= 4096 && !done; ++n)
            for (size_t bi = 0; bi < pool.size() && !done; ++bi) {
                FieldElement cand = u * primitive_part(base * Rational(n) + pool[bi]);
                if (kernel(cand)) continue;
                Fan trial = out;
                for (Cone& s : trial.cones)
                    for (FieldElement& g : s.gens)
                        if (auto j = unit_power_index(field, out.unit, g, alpha)) g = unit_power(out.unit, *j) * cand;
                bool ok = true;
                for (size_t i = 0; i < trial.cones.size() && ok; ++i) {
                    int s = orientation_sign(field, trial.cones[i].gens);
                    ok = s != 0 && s == old_signs[i];
                }
                if (!ok) continue;
                out = std::move(trial);
                done = true;
            }
        require(done, ErrorCode::Internal, "ray deformation search did not terminate");
    }
    return out;
}

int tiling_multiplicity(const Fan& fan, const FieldElement& x) {
    const FieldSpec& field = fan.field;
    int count = 0;
    if (field.degree() == 1) {
        for (const Cone& s : fan.cones)
            if (upper_closure_contains(field, s.gens, x, Region::Cone)) ++count;
        return count;
    }
    const long double lu = slope_log(field, fan.unit);
    const long double ref = slope_log(field, fan.cones.front().gens.front());
    long double span = 0;
    for (const Cone& s : fan.cones)
        for (const FieldElement& g : s.gens) span = std::max(span, std::fabs((slope_log(field, g) - ref) / lu));
    const int64_t j0 = std::llround((slope_log(field, x) - ref) / lu);
    const int64_t w = static_cast<int64_t>(std::ceil(span)) + 2;
    for (int64_t j = j0 - w; j <= j0 + w; ++j) {
        FieldElement uj = unit_power(fan.unit, j);
        for (const Cone& s : fan.cones)
            if (upper_closure_contains(field, {uj * s.gens[0], uj * s.gens[1]}, x, Region::Cone)) ++count;
    }
    return count;
}

TilingReport check_tiling(const Fan& fan, size_t samples, uint64_t seed) {
    const FieldSpec& field = fan.field;
    std::mt19937_64 rng(seed);
    auto draw = [&](int64_t lo, int64_t hi) { return lo + static_cast<int64_t>(rng() % static_cast<uint64_t>(hi - lo + 1)); };
    TilingReport rep;
    for (size_t i = 0; i < samples; ++i) {
        FieldElement x;
        if (field.degree() == 1) {
            x = FieldElement(field, make_rational(draw(1, 1000), draw(1, 50)));
        } else {
            const Cone& s = fan.cones[static_cast<size_t>(draw(0, static_cast<int64_t>(fan.cones.size()) - 1))];
            FieldElement uj = unit_power(fan.unit, draw(-2, 2));
            switch (i % 4) {
                case 0:
                    do {
                        x = FieldElement(field, make_rational(draw(-300, 300), draw(1, 7)), make_rational(draw(-300, 300), draw(1, 7)));
                    } while (!is_totally_positive(field, x));
                    break;
                case 1:
                    x = uj * s.gens[static_cast<size_t>(draw(0, 1))] * make_rational(draw(1, 9), draw(1, 4));
                    break;
                case 2:
                    x = uj * (s.gens[0] * Rational(draw(1, 20)) + s.gens[1] * Rational(draw(1, 20)));
                    break;
                default:
                    x = uj * (s.gens[0] + s.gens[1]) * make_rational(1, draw(1, 5));
                    break;
            }
        }
        ++rep.samples;
        if (tiling_multiplicity(fan, x) != 1) {
            ++rep.failures;
            if (!rep.witness) rep.witness = x;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// serialization

nlohmann::ordered_json fan_to_json(const Fan& fan) {
    auto coords = [](const FieldElement& x) {
        Coords c = x.coords();
        return nlohmann::ordered_json::array({c[0], c[1]});
    };
    nlohmann::ordered_json j;
    j["disc"] = fan.field.disc();
    j["unit"] = coords(fan.unit);
    auto cones = nlohmann::ordered_json::array();
    for (const Cone& s : fan.cones) {
        auto gens = nlohmann::ordered_json::array();
        for (const FieldElement& g : s.gens) gens.push_back(coords(g));
        cones.push_back(gens);
    }
    j["cones"] = cones;
    return j;
}

Fan fan_from_json(const FieldSpec& field, const nlohmann::json& j) {
    try {
        if (j.contains("disc"))
            require(j.at("disc").get<int64_t>() == field.disc(), ErrorCode::InvalidArgument,
                    "fan was written for a different field");
        auto elem = [&](const nlohmann::json& c) {
            if (c.is_string()) return parse_element(field, c.get<std::string>());
            require(c.is_array() && c.size() == 2, ErrorCode::Parse, "generator must be [a,b] or a string");
            return FieldElement::from_coords(field, {c[0].get<int64_t>(), c[1].get<int64_t>()});
        };
        Fan fan{field, FieldElement::from_int(1), {}};
        if (field.degree() == 2) {
            FieldElement eps = fundamental_totally_positive_unit(field);
            fan.unit = j.contains("unit") ? elem(j.at("unit")) : eps;
            auto k = unit_power_index(field, eps, fan.unit, FieldElement::from_int(1));
            require(k && *k >= 1, ErrorCode::InvalidArgument, "fan unit must be a positive power of " + eps.to_string());
        }
        for (const auto& c : j.at("cones")) {
            Cone s;
            for (const auto& g : c) s.gens.push_back(elem(g));
            for (const auto& g : s.gens)
                require(g.is_integral() && is_totally_positive(field, g) && is_primitive(field, g),
                        ErrorCode::InvalidArgument, "fan generator " + g.to_string() + " is not primitive totally positive");
            require(orientation_sign(field, s.gens) != 0, ErrorCode::InvalidArgument, "fan contains a degenerate cone");
            fan.cones.push_back(std::move(s));
        }
        require(!fan.cones.empty(), ErrorCode::InvalidArgument, "fan has no cones");
        TilingReport t = check_tiling(fan, 256, 0x5eed);
        require(t.ok(), ErrorCode::InvalidArgument,
                "fan does not tile the totally positive cone" + (t.witness ? " (at " + t.witness->to_string() + ")" : std::string()));
        return fan;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::Parse, std::string("bad fan JSON: ") + e.what());
    }
}

uint64_t fan_hash(const Fan& fan) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : fan_to_json(fan).dump()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace shintani
