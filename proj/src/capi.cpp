#include "shintani/shintani.h"

#include "shintani/error.hpp"
#include "shintani/verify.hpp"
#include "shintani/zeta.hpp"

#include <json.hpp>

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

using namespace shintani;
using ojson = nlohmann::ordered_json;

struct shz_session {
    FieldSpec field = FieldSpec::rational();
    std::string conductor;
    std::optional<std::string> fan_json;
    std::optional<std::string> char_json;
    std::optional<std::pair<int64_t, int64_t>> char_norm;
    uint64_t seed = 0;
    std::string error;
};

struct shz_result {
    std::string json;
    std::string text;
    bool passed = true;
};

namespace {

shz_status to_status(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidArgument: return SHZ_E_INVALID_ARGUMENT;
        case ErrorCode::UnsupportedDegree: return SHZ_E_UNSUPPORTED_DEGREE;
        case ErrorCode::UnsupportedField: return SHZ_E_UNSUPPORTED_FIELD;
        case ErrorCode::Pole: return SHZ_E_POLE;
        case ErrorCode::NotInSubfield: return SHZ_E_NOT_IN_SUBFIELD;
        case ErrorCode::DivisionByZero: return SHZ_E_DIVISION_BY_ZERO;
        case ErrorCode::Parse: return SHZ_E_PARSE;
        case ErrorCode::Overflow: return SHZ_E_OVERFLOW;
        case ErrorCode::VerificationFailed: return SHZ_E_VERIFICATION_FAILED;
        case ErrorCode::Internal: return SHZ_E_INTERNAL;
    }
    return SHZ_E_INTERNAL;
}

template <class F>
shz_status guarded(shz_session* s, F&& body) {
    if (!s) return SHZ_E_INVALID_ARGUMENT;
    s->error.clear();
    try {
        body();
        return SHZ_OK;
    } catch (const Error& e) {
        s->error = e.what();
        return to_status(e.code());
    } catch (const nlohmann::json::exception& e) {
        s->error = std::string("malformed JSON: ") + e.what();
        return SHZ_E_PARSE;
    } catch (const std::bad_alloc&) {
        s->error = "out of memory";
        return SHZ_E_INTERNAL;
    } catch (const std::exception& e) {
        s->error = e.what();
        return SHZ_E_INTERNAL;
    }
}

std::string hex64(uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

ojson field_json(const FieldSpec& f) {
    return ojson{{"name", f.name()},
                 {"disc", f.disc()},
                 {"embeddings", f.order() == EmbeddingOrder::Standard ? "standard" : "swapped"}};
}

Fan session_fan(const shz_session& s) {
    if (!s.fan_json) return standard_fan(s.field);
    return fan_from_json(s.field, nlohmann::json::parse(*s.fan_json));
}

IdealSpec session_conductor(const shz_session& s) {
    require(!s.conductor.empty(), ErrorCode::InvalidArgument, "no conductor given");
    return IdealSpec::parse(s.field, s.conductor);
}

HeckeCharacter session_character(const shz_session& s) {
    if (s.char_norm) return HeckeCharacter::norm_character(s.field, s.char_norm->first, s.char_norm->second);
    require(s.char_json.has_value(), ErrorCode::InvalidArgument, "no character given");
    return HeckeCharacter::from_json(s.field, nlohmann::json::parse(*s.char_json));
}

void provenance(ojson& j, const shz_session& s, const Fan* fan, bool seeded) {
    j["field"] = field_json(s.field);
    if (fan) j["fan_hash"] = hex64(fan_hash(*fan));
    if (seeded) j["seed"] = s.seed;
}

shz_result* value_result(const CycNumber& v, ojson extra, const std::string& label) {
    ojson j = v.to_json();
    j["text"] = v.to_string();
    for (const auto& [k, x] : extra.items()) j[k] = x;
    auto* r = new shz_result;
    r->json = j.dump();
    std::ostringstream os;
    os << label << " = " << v.to_string() << "\n";
    for (const auto& [k, x] : extra.items()) os << "  " << k << ": " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
    r->text = os.str();
    return r;
}

}  // namespace

extern "C" {

const char* shz_version(void) { return "1.0.0"; }

const char* shz_status_name(shz_status st) {
    switch (st) {
        case SHZ_OK: return "ok";
        case SHZ_E_INVALID_ARGUMENT: return "invalid argument";
        case SHZ_E_UNSUPPORTED_DEGREE: return "unsupported degree";
        case SHZ_E_UNSUPPORTED_FIELD: return "unsupported field";
        case SHZ_E_POLE: return "pole";
        case SHZ_E_NOT_IN_SUBFIELD: return "not in subfield";
        case SHZ_E_DIVISION_BY_ZERO: return "division by zero";
        case SHZ_E_PARSE: return "parse error";
        case SHZ_E_OVERFLOW: return "overflow";
        case SHZ_E_VERIFICATION_FAILED: return "verification failed";
        case SHZ_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

shz_status shz_session_new(shz_session** out) {
    if (!out) return SHZ_E_INVALID_ARGUMENT;
    try {
        *out = new shz_session;
        return SHZ_OK;
    } catch (...) {
        *out = nullptr;
        return SHZ_E_INTERNAL;
    }
}

void shz_session_free(shz_session* s) { delete s; }

const char* shz_last_error(const shz_session* s) { return s ? s->error.c_str() : "null session"; }

static void reset_field_data(shz_session* s) {
    s->fan_json.reset();
    s->char_json.reset();
    s->char_norm.reset();
}

shz_status shz_set_rational(shz_session* s) {
    return guarded(s, [&] {
        s->field = FieldSpec::rational();
        reset_field_data(s);
    });
}

shz_status shz_set_disc(shz_session* s, int64_t disc) {
    return guarded(s, [&] {
        const bool swapped = s->field.order() == EmbeddingOrder::Swapped;
        FieldSpec f = FieldSpec::from_disc(disc);
        s->field = swapped && f.degree() == 2 ? f.with_swapped_embeddings() : f;
        reset_field_data(s);
    });
}

int shz_degree(const shz_session* s) { return s ? s->field.degree() : 0; }

shz_status shz_set_swap_embeddings(shz_session* s, int swap) {
    return guarded(s, [&] {
        bool swapped = s->field.order() == EmbeddingOrder::Swapped;
        if (s->field.degree() == 2 && static_cast<bool>(swap) != swapped) s->field = s->field.with_swapped_embeddings();
    });
}

shz_status shz_set_conductor(shz_session* s, const char* text) {
    return guarded(s, [&] {
        require(text != nullptr, ErrorCode::InvalidArgument, "null conductor");
        IdealSpec::parse(s->field, text);
        s->conductor = text;
    });
}

shz_status shz_set_fan_json(shz_session* s, const char* json) {
    return guarded(s, [&] {
        if (!json) {
            s->fan_json.reset();
            return;
        }
        fan_from_json(s->field, nlohmann::json::parse(json));
        s->fan_json = json;
    });
}

shz_status shz_set_character_json(shz_session* s, const char* json) {
    return guarded(s, [&] {
        require(json != nullptr, ErrorCode::InvalidArgument, "null character");
        HeckeCharacter::from_json(s->field, nlohmann::json::parse(json));
        s->char_json = json;
        s->char_norm.reset();
    });
}

shz_status shz_set_character_norm(shz_session* s, int64_t q, int64_t j) {
    return guarded(s, [&] {
        HeckeCharacter::norm_character(s->field, q, j);
        s->char_norm = std::make_pair(q, j);
        s->char_json.reset();
    });
}

shz_status shz_set_seed(shz_session* s, uint64_t seed) {
    return guarded(s, [&] { s->seed = seed; });
}

shz_status shz_lerch(shz_session* s, int64_t e1, int64_t e2, int k, shz_result** out) {
    return guarded(s, [&] {
        require(out != nullptr, ErrorCode::InvalidArgument, "null output");
        const IdealSpec f = session_conductor(*s);
        const ResidueRing ring(f);
        const TorsionPoint xi = make_torsion_point(ring, e1, e2);
        const Fan fan = session_fan(*s);
        CycNumber v = lerch_value(fan, xi, k);
        ojson extra;
        provenance(extra, *s, &fan, false);
        extra["conductor"] = f.to_string();
        extra["xi"] = xi.to_string();
        extra["k"] = k;
        *out = value_result(v, std::move(extra), "lerch");
    });
}

shz_status shz_hecke(shz_session* s, int k, shz_result** out) {
    return guarded(s, [&] {
        require(out != nullptr, ErrorCode::InvalidArgument, "null output");
        const HeckeCharacter chi = session_character(*s);
        const Fan fan = session_fan(*s);
        CycNumber v = hecke_L_value(chi, k, fan);
        ojson extra;
        provenance(extra, *s, &fan, false);
        extra["conductor"] = chi.ring().ideal().to_string();
        extra["character"] = chi.to_json();
        extra["k"] = k;
        *out = value_result(v, std::move(extra), "L(chi, -k)");
    });
}

shz_status shz_shintani(shz_session* s, int64_t e1, int64_t e2, const int* kvec, size_t klen, int adapt,
                        shz_result** out) {
    return guarded(s, [&] {
        require(out != nullptr, ErrorCode::InvalidArgument, "null output");
        require(klen == static_cast<size_t>(s->field.degree()) && (klen == 0 || kvec), ErrorCode::InvalidArgument,
                "k needs one entry per embedding");
        std::vector<int> kv(kvec, kvec + klen);
        for (int x : kv) require(x >= 0, ErrorCode::InvalidArgument, "k entries must be nonnegative");
        const IdealSpec f = session_conductor(*s);
        const ResidueRing ring(f);
        const TorsionPoint xi = make_torsion_point(ring, e1, e2);
        require(!xi.is_trivial(), ErrorCode::InvalidArgument, "xi must be nontrivial");
        const Fan base = session_fan(*s);
        const Fan fan = adapt ? adapt_fan_to(base, xi) : base;

        ojson cones = ojson::array();
        std::ostringstream os;
        CycNumber sum;
        for (const Cone& c : fan.cones) {
            CycNumber v = shintani_value(s->field, c, xi, kv);
            sum += v;
            ojson gens = ojson::array();
            for (const FieldElement& g : c.gens) gens.push_back(g.to_string());
            ojson e{{"generators", gens}, {"value", v.to_json()}, {"text", v.to_string()}};
            os << "cone (";
            for (size_t i = 0; i < c.gens.size(); ++i) os << (i ? ", " : "") << c.gens[i].to_string();
            os << ") : " << v.to_string() << "\n";
            cones.push_back(std::move(e));
        }
        ojson j;
        provenance(j, *s, &fan, false);
        j["conductor"] = f.to_string();
        j["xi"] = xi.to_string();
        j["k"] = kv;
        j["adapted"] = adapt != 0;
        j["cones"] = std::move(cones);
        j["sum"] = sum.to_json();
        os << "sum : " << sum.to_string() << "\n";
        auto* r = new shz_result;
        r->json = j.dump();
        r->text = os.str();
        *out = r;
    });
}

static shz_result* report_result(const Report& rep, const shz_session& s, const Fan* fan, bool seeded) {
    ojson j = rep.to_json();
    provenance(j, s, fan, seeded);
    auto* r = new shz_result;
    r->json = j.dump();
    r->text = rep.to_text();
    r->passed = rep.passed();
    return r;
}

shz_status shz_verify(shz_session* s, const char* check, int k, size_t trials, shz_result** out) {
    return guarded(s, [&] {
        require(out != nullptr && check != nullptr, ErrorCode::InvalidArgument, "null argument");
        require(k >= 0, ErrorCode::InvalidArgument, "k must be nonnegative");
        const std::string c = check;
        std::vector<int> ks;
        for (int i = 0; i <= k; ++i) ks.push_back(i);
        if (c == "cocycle") {
            *out = report_result(verify_cocycle(s->field, trials, s->seed), *s, nullptr, true);
        } else if (c == "character") {
            *out = report_result(verify_character(session_character(*s)), *s, nullptr, false);
        } else if (c == "fourier-inversion") {
            *out = report_result(verify_fourier_inversion(session_character(*s)), *s, nullptr, false);
        } else {
            const Fan fan = session_fan(*s);
            const IdealSpec f = session_conductor(*s);
            if (c == "homology")
                *out = report_result(verify_homology(fan, f), *s, &fan, false);
            else if (c == "coboundary")
                *out = report_result(verify_coboundary(fan, f, k, trials, s->seed), *s, &fan, true);
            else if (c == "fan-independence")
                *out = report_result(verify_fan_independence(fan, f, ks), *s, &fan, false);
            else if (c == "equivariance")
                *out = report_result(verify_equivariance(fan, f, ks), *s, &fan, false);
            else
                fail(ErrorCode::InvalidArgument, "unknown check '" + c + "'");
        }
    });
}

shz_status shz_selfcheck(shz_session* s, shz_result** out) {
    return guarded(s, [&] {
        require(out != nullptr, ErrorCode::InvalidArgument, "null output");
        *out = report_result(selfcheck(), *s, nullptr, false);
    });
}

const char* shz_result_json(const shz_result* r) { return r ? r->json.c_str() : ""; }
const char* shz_result_text(const shz_result* r) { return r ? r->text.c_str() : ""; }
int shz_result_passed(const shz_result* r) { return r && r->passed ? 1 : 0; }
void shz_result_free(shz_result* r) { delete r; }

}  // extern "C"
