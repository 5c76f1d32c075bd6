#pragma once

// Machine verification of the identities at desk scale.  Each claim checks
// an exact statement over an exhaustively enumerated domain and reports any
// violation together with serialized witnesses, so a failure pinpoints the
// exact filling or coefficient where the two sides differ.

#include <string>
#include <vector>

#include <json.hpp>

#include "macd/words.hpp"

namespace macd {

struct VerificationReport {
    std::string claim;
    nlohmann::json params;
    long long pairs_checked = 0;
    std::vector<nlohmann::json> violations;

    bool ok() const { return violations.empty(); }
    nlohmann::json to_json() const;
    // Folds a sub-report into this one (counters summed, violations appended
    // in order).
    void absorb(VerificationReport other);
};

// E_alpha^sigma = E_alpha^{sigma s_i}, coefficient-wise and refined per
// content.  Requires alpha_i = alpha_{i+1}.
VerificationReport verify_symmetry(const Composition& alpha, const Permutation& sigma, int i);

// The consecutive-basement special case: additionally requires
// sigma_{i+1} = sigma_i +- 1.
VerificationReport verify_ale19(const Composition& alpha, const Permutation& sigma, int i);

// Detailed balance wtqt(U) P_i(U,T) = wtqt(T) P_i(T,U) over
// NAF(alpha, sigma) x NAF(alpha, sigma s_i), plus normalization in both
// directions, support restriction, content preservation, and the two
// row-local balance identities.
VerificationReport verify_balance(const Composition& alpha, const Permutation& sigma, int i);

// Normalization sum_U P_i(T, U) = 1 only, both directions.
VerificationReport verify_normalization(const Composition& alpha, const Permutation& sigma,
                                        int i);

// Support restriction only: P_i(T, U) != 0 implies U non-attacking.
VerificationReport verify_support(const Composition& alpha, const Permutation& sigma, int i);

// operator_E(alpha, sigma) = tableau_E(alpha, sigma).
VerificationReport verify_route_equivalence(const Composition& alpha, const Permutation& sigma);

// Y_i E_alpha = q^{-alpha_i} t^{k_i} E_alpha for all i, plus monicity of the
// coefficient at x^alpha.
VerificationReport verify_eigen(const Composition& alpha);

// Basement independence of t-atoms and t-keys over every valid sorting
// permutation.
VerificationReport verify_atoms(const Composition& alpha);

// tau-independence of F_alpha plus F_alpha(x; 0, t) = A_alpha(x; t).
VerificationReport verify_asep(const Composition& alpha);

// symmetric_P(lambda) invariant under every s_i and monic at x^lambda.
VerificationReport verify_symmetric_p(const Composition& lambda);

// ------------------------------------------------------------------- sweeps

struct SweepConfig {
    int n_max = 3;
    int part_max = 2;
    int parallelism = 1;
};

// All compositions of length n with parts <= part_max, lexicographic.
std::vector<Composition> compositions_of(int n, int part_max);
// All of S_n in lexicographic one-line order.
std::vector<Permutation> permutations_of(int n);

const std::vector<std::string>& claim_names();

// Runs one claim over its full parameter grid (n = 1..n_max), fanning out
// over work items; the merged report is deterministic regardless of the
// parallelism level.
VerificationReport run_sweep(const std::string& claim, const SweepConfig& config);

} // namespace macd
