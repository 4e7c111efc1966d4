#ifndef MULTINORM_EXAMPLES_HPP
#define MULTINORM_EXAMPLES_HPP

// Built-in example configurations and the local facts they rely on.

#include <string>
#include <vector>

#include "multinorm/config.hpp"
#include "multinorm/kummer.hpp"

namespace multinorm {

struct ExampleInfo {
    std::string name;
    std::string description;
    std::string expected_sha;        // direct-sum notation
    std::string expected_sha_omega;
};

const std::vector<ExampleInfo>& examples();
ConfigDocument example_config(const std::string& name);

// Per-prime abstract configurations for K_i = Q(ζ_{q_i^{n_i}}), q_i distinct odd primes,
// one component for every prime ℓ dividing some φ(q_i^{n_i}). Components where fewer than
// three fields have a non-trivial ℓ-part are still emitted; the driver reports them as trivial.
std::vector<AbstractSpec> cyclotomic_components(const std::vector<std::pair<Int, int>>& prime_powers);

struct LocalFact {
    std::string statement;
    Gaussian alpha;
    Gaussian pi;
    bool expected = true;
};

// The local facts the Kummer examples quote. Each is recomputed; a mismatch is an Internal error
// naming the statement.
const std::vector<LocalFact>& quoted_local_facts();
void verify_quoted_local_facts();

}  // namespace multinorm

#endif
