#pragma once

// Verification suites behind the `verify` and `selfcheck` commands. Each
// returns a report of named checks with witnessing data on failure.

#include "shintani/cones.hpp"
#include "shintani/residue.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace shintani {

struct Check {
    std::string name;
    bool passed = false;
    nlohmann::ordered_json data;  ///< printed only on failure in text mode
};

struct Report {
    std::string title;
    std::vector<Check> checks;
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();

    bool passed() const;
    size_t failures() const;
    void add(std::string name, bool ok, nlohmann::ordered_json data = {});
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

/// Random triples of primitive totally positive elements: the signed sum of
/// the three generating functions vanishes as a rational function and as a
/// series truncated at trace `bound`.
Report verify_cocycle(const FieldSpec& field, size_t trials, uint64_t seed, int64_t bound = 12);

/// Quotient complex of every nontrivial torsion point of O/f.
Report verify_homology(const Fan& fan, const IdealSpec& conductor);

Report verify_coboundary(const Fan& fan, const IdealSpec& conductor, int k, size_t trials, uint64_t seed);

/// Lerch values from the given fan, its subdivision and a second subdivision agree.
Report verify_fan_independence(const Fan& fan, const IdealSpec& conductor, const std::vector<int>& ks);

/// Orbit and Galois equivariance of Lerch values.
Report verify_equivariance(const Fan& fan, const IdealSpec& conductor, const std::vector<int>& ks);

/// Multiplicativity, triviality on totally positive units and primitivity.
Report verify_character(const HeckeCharacter& chi);

/// Sum over xi of c_chi(xi) xi(a) recovers chi, and c_chi vanishes off primitive xi.
Report verify_fourier_inversion(const HeckeCharacter& chi);

/// L(chi_1 o N, -k) against L(chi_1, -k) L(chi_1 chi_D, -k) computed independently.
Report verify_base_change(int64_t disc, int64_t q, int64_t j, const std::vector<int>& ks);

/// Lerch values over Q against the Bernoulli-polynomial formula, n <= max_level, k <= max_k.
Report verify_rational_lerch(int64_t max_level, int max_k);

/// The oracle suite: Bernoulli recurrence, parity zeros, the rational Lerch
/// matrix and the base-change matrix.
Report selfcheck();

}  // namespace shintani
