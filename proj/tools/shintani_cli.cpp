// Command-line front end; talks to the library only through the C interface.

#include "shintani/shintani.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<int64_t> disc;
    bool rational = false;
    bool swap = false;
    std::string fan_path;
    std::string char_path;
    std::string char_norm;
    std::string conductor;
    std::string xi;
    std::string kvec;
    int k = 0;
    size_t trials = 0;
    uint64_t seed = 1;
    bool json = false;
    bool adapt = false;
};

using SessionPtr = std::unique_ptr<shz_session, decltype(&shz_session_free)>;
using ResultPtr = std::unique_ptr<shz_result, decltype(&shz_result_free)>;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<int64_t> parse_ints(const std::string& text, const char* what) {
    std::vector<int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string("bad ") + what + " '" + text + "'");
        }
    }
    if (out.empty()) throw UsageError(std::string("empty ") + what);
    return out;
}

class Runner {
  public:
    Runner() : s_(nullptr, &shz_session_free) {
        shz_session* raw = nullptr;
        if (shz_session_new(&raw) != SHZ_OK) throw std::runtime_error("cannot create session");
        s_.reset(raw);
    }

    shz_session* get() { return s_.get(); }

    void check(shz_status st) {
        if (st == SHZ_OK) return;
        std::string msg = std::string(shz_status_name(st)) + ": " + shz_last_error(s_.get());
        switch (st) {
            case SHZ_E_INVALID_ARGUMENT:
            case SHZ_E_PARSE:
            case SHZ_E_UNSUPPORTED_DEGREE:
            case SHZ_E_UNSUPPORTED_FIELD:
            case SHZ_E_POLE:
                throw UsageError(msg);
            default:
                throw std::runtime_error(msg);
        }
    }

    void configure(const Options& o, std::optional<int64_t> default_disc = std::nullopt,
                   const std::string& default_conductor = "") {
        if (o.rational && o.disc) throw UsageError("--rational and --disc are exclusive");
        if (o.rational)
            check(shz_set_rational(get()));
        else if (o.disc)
            check(shz_set_disc(get(), *o.disc));
        else if (default_disc)
            check(shz_set_disc(get(), *default_disc));
        check(shz_set_swap_embeddings(get(), o.swap ? 1 : 0));
        if (!o.fan_path.empty()) check(shz_set_fan_json(get(), read_file(o.fan_path).c_str()));
        std::string conductor = o.conductor.empty() ? default_conductor : o.conductor;
        if (!conductor.empty()) check(shz_set_conductor(get(), conductor.c_str()));
        if (!o.char_path.empty() && !o.char_norm.empty()) throw UsageError("--char and --char-norm are exclusive");
        if (!o.char_path.empty()) check(shz_set_character_json(get(), read_file(o.char_path).c_str()));
        if (!o.char_norm.empty()) {
            auto colon = o.char_norm.find(':');
            if (colon == std::string::npos) throw UsageError("--char-norm expects q:j");
            int64_t q = parse_ints(o.char_norm.substr(0, colon), "modulus").at(0);
            int64_t j = parse_ints(o.char_norm.substr(colon + 1), "character index").at(0);
            check(shz_set_character_norm(get(), q, j));
        }
        check(shz_set_seed(get(), o.seed));
    }

    std::pair<int64_t, int64_t> xi(const Options& o) {
        if (o.xi.empty()) throw UsageError("--xi is required");
        std::vector<int64_t> e = parse_ints(o.xi, "--xi");
        if (e.size() > 2) throw UsageError("--xi takes at most two exponents");
        return {e[0], e.size() > 1 ? e[1] : 0};
    }

    int emit(shz_result* raw, const Options& o) {
        ResultPtr r(raw, &shz_result_free);
        if (o.json)
            std::cout << shz_result_json(r.get()) << "\n";
        else
            std::cout << shz_result_text(r.get());
        return shz_result_passed(r.get()) ? 0 : kExitFailed;
    }

  private:
    SessionPtr s_;
};

void field_options(CLI::App* sub, Options& o) {
    sub->add_option("--disc", o.disc, "fundamental discriminant of a real quadratic field");
    sub->add_flag("--rational", o.rational, "work over Q");
    sub->add_flag("--swap-embeddings", o.swap, "exchange the two real embeddings");
    sub->add_option("--fan", o.fan_path, "JSON fan file replacing the standard fan");
    sub->add_flag("--json", o.json, "machine-readable output");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact special values of Lerch zeta and Hecke L-functions at nonpositive integers"};
    app.require_subcommand(1);
    Options o;

    auto* lerch = app.add_subcommand("lerch", "Lerch value at a torsion point");
    field_options(lerch, o);
    lerch->add_option("--conductor", o.conductor, "ideal f: generator or [[a,b],[c,d]]")->required();
    lerch->add_option("--xi", o.xi, "exponents e1[,e2] of xi on (1, w) at level exponent(O/f)")->required();
    lerch->add_option("-k", o.k, "evaluate at s = -k")->check(CLI::NonNegativeNumber);

    auto* hecke = app.add_subcommand("hecke", "Hecke L-value of a finite-order character");
    field_options(hecke, o);
    hecke->add_option("--char", o.char_path, "character JSON file");
    hecke->add_option("--char-norm", o.char_norm, "q:j for chi_1 o Norm with chi_1 the j-th character mod q");
    hecke->add_option("-k", o.k, "evaluate at s = -k")->check(CLI::NonNegativeNumber);

    auto* shintani = app.add_subcommand("shintani", "single-cone values d^k G_sigma(xi)");
    field_options(shintani, o);
    shintani->add_option("--conductor", o.conductor, "ideal f")->required();
    shintani->add_option("--xi", o.xi, "exponents e1[,e2] of xi")->required();
    shintani->add_option("-k", o.k, "diagonal weight")->check(CLI::NonNegativeNumber);
    shintani->add_option("--kvec", o.kvec, "per-embedding weights k1[,k2]");
    shintani->add_flag("--adapt", o.adapt, "adapt the fan to xi first");

    auto* verify = app.add_subcommand("verify", "identity checks");
    verify->require_subcommand(1);
    struct VerifySpec {
        const char* name;
        const char* help;
        bool conductor, trials, k, character;
        int default_k;
        size_t default_trials;
    };
    const std::vector<VerifySpec> specs{
        {"cocycle", "signed cone generating functions sum to zero", false, true, false, false, 0, 200},
        {"homology", "quotient complexes of adapted fans", true, false, false, false, 0, 0},
        {"coboundary", "pairing is blind to coboundaries", true, true, true, false, 0, 100},
        {"fan-independence", "Lerch values under subdivision", true, false, true, false, 2, 0},
        {"equivariance", "unit-orbit and Galois equivariance", true, false, true, false, 2, 0},
        {"character", "multiplicative, trivial on units, primitive", false, false, false, true, 0, 0},
        {"fourier-inversion", "c_chi(xi) recovers chi", false, false, false, true, 0, 0},
    };
    std::vector<std::pair<CLI::App*, const VerifySpec*>> verify_subs;
    for (const VerifySpec& v : specs) {
        auto* sub = verify->add_subcommand(v.name, v.help);
        field_options(sub, o);
        if (v.conductor) sub->add_option("--conductor", o.conductor, "ideal f (default 2)");
        if (v.trials) sub->add_option("--trials", o.trials, "number of random trials");
        if (v.trials) sub->add_option("--seed", o.seed, "root seed");
        if (v.k) sub->add_option("-k", o.k, v.default_k ? "largest k" : "weight")->check(CLI::NonNegativeNumber);
        if (v.character) {
            sub->add_option("--char", o.char_path, "character JSON file");
            sub->add_option("--char-norm", o.char_norm, "q:j");
        }
        verify_subs.push_back({sub, &v});
    }

    auto* self = app.add_subcommand("selfcheck", "oracle suite");
    self->add_flag("--json", o.json, "machine-readable output");

    auto* version = app.add_subcommand("version", "library version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    for (const auto& [sub, v] : verify_subs)
        if (sub->parsed()) {
            auto* kopt = sub->get_option_no_throw("-k");
            auto* topt = sub->get_option_no_throw("--trials");
            if (!kopt || kopt->count() == 0) o.k = v->default_k;
            if (!topt || topt->count() == 0) o.trials = v->default_trials;
        }

    try {
        Runner run;
        shz_result* r = nullptr;
        if (version->parsed()) {
            std::cout << shz_version() << "\n";
            return 0;
        }
        if (lerch->parsed()) {
            run.configure(o);
            auto [e1, e2] = run.xi(o);
            run.check(shz_lerch(run.get(), e1, e2, o.k, &r));
        } else if (hecke->parsed()) {
            run.configure(o);
            run.check(shz_hecke(run.get(), o.k, &r));
        } else if (shintani->parsed()) {
            run.configure(o);
            auto [e1, e2] = run.xi(o);
            std::vector<int> kv;
            if (!o.kvec.empty()) {
                for (int64_t x : parse_ints(o.kvec, "--kvec")) kv.push_back(static_cast<int>(x));
            } else {
                kv.assign(static_cast<size_t>(shz_degree(run.get())), o.k);
            }
            run.check(shz_shintani(run.get(), e1, e2, kv.data(), kv.size(), o.adapt ? 1 : 0, &r));
        } else if (self->parsed()) {
            run.check(shz_selfcheck(run.get(), &r));
        } else {
            for (const auto& [sub, v] : verify_subs) {
                if (!sub->parsed()) continue;
                bool default_field = !v->character;
                run.configure(o, default_field ? std::optional<int64_t>(5) : std::nullopt, v->conductor ? "2" : "");
                run.check(shz_verify(run.get(), v->name, o.k, o.trials, &r));
            }
        }
        return run.emit(r, o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
}
