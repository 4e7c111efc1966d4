#ifndef MULTINORM_SELFTEST_HPP
#define MULTINORM_SELFTEST_HPP

// Random configurations and the oracle-vs-formula check run on each of them.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "multinorm/fields.hpp"
#include "multinorm/local.hpp"
#include "multinorm/oracle.hpp"
#include "multinorm/structure.hpp"

namespace multinorm {

struct SampleOptions {
    std::vector<Int> primes{2, 3};
    Int max_order = 729;
    int min_fields = 3;
    int max_fields = 5;
    int max_exceptional = 3;
    Int max_vectors = Int{1} << 18;  // cap on ∏ p^{e_i} so the sweep stays fast
};

enum class Shape { Any, LinearlyDisjoint, BicyclicSubfields };

// Draws until the configuration normalizes with the requested field count and shape.
Problem random_problem(std::mt19937_64& rng, const SampleOptions& opt = {}, Shape shape = Shape::Any);

struct InvariantCounts {
    int diagonal_chain = 0;   // D ⊆ G ⊆ G_ω
    int delta_bounds = 0;     // Δ-monotonicity between consecutive levels
    int f_chain = 0;          // r ≤ f_c ≤ f^ω_c ≤ parent ≤ Δ^ω_r
    int g0_structure = 0;     // |G_ω| = |D| ∏ |G̃_ω|, same for G
    int aprime = 0;           // a' ∉ D and fail-set shrinks
    int generators = 0;       // certificates lie in G / G_ω and span them with D
    int monotonicity = 0;     // scan predicates monotone
    int expression = 0;       // M_c(f+L(c)-r) = K_0(f) K_i(f+L(c)-r)
    int shortcuts = 0;        // closed forms agree when their shape applies

    int total() const;
};

struct CheckOutcome {
    std::vector<int> oracle_sha, oracle_sha_omega, oracle_quotient;
    std::vector<int> formula_sha, formula_sha_omega;
    bool agree = false;
    InvariantCounts violations;
    std::vector<std::string> messages;
    Int vectors = 0;
};

struct CheckOptions {
    int aprime_samples = 24;
    std::uint64_t seed = 1;
    OracleOptions oracle;
};

CheckOutcome check_problem(const NormalizedConfig& cfg, const LocalData& local, const CheckOptions& opt = {});

struct SelftestSummary {
    int count = 0;
    int agreements = 0;
    int shortcut_instances = 0;  // configs where a closed-form shortcut applied and was compared
    InvariantCounts violations;
    std::vector<std::string> failures;  // one entry per disagreement or violation, with the config
    double seconds = 0;
};

SelftestSummary run_selftest(std::uint64_t seed, int count, const SampleOptions& opt = {}, Shape shape = Shape::Any);

}  // namespace multinorm

#endif
