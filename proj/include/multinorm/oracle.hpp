#ifndef MULTINORM_ORACLE_HPP
#define MULTINORM_ORACLE_HPP

// Brute-force construction of G and G_ω inside ⊕_{i∈I} Z/p^{e_i}.
//
// For a candidate decomposition group D let σ_i(D) be the least d with v ∈ Σ_i^d.
// Because Σ_i^d grows with d and δ(n, a_i) ≥ σ_i is a congruence n ≡ a_i mod p^{σ_i},
// "some n puts v in Ω(I_n(a))" is the solvability of those congruences:
// a_i ≡ a_j mod p^{min(σ_i, σ_j)} for all i, j. The sweep uses that form; the tests
// compare it with the literal n-sweep in classify().

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "multinorm/abelian.hpp"
#include "multinorm/fields.hpp"
#include "multinorm/local.hpp"

namespace multinorm {

inline constexpr Int kDefaultOracleBudget = Int{1} << 24;

struct Candidate {
    std::string label;
    Subgroup D;
    bool exceptional = false;
    std::vector<int> threshold;  // σ_i(D) for i = 1..m
};

class CandidateTable {
public:
    CandidateTable(const NormalizedConfig& cfg, const LocalData& local, Int cyclic_budget = kMaxGaloisOrder);

    const NormalizedConfig& config() const { return *cfg_; }
    const std::vector<Candidate>& candidates() const { return all_; }

    // Candidates whose place lies outside every Ω(I_n(a)).
    std::vector<std::size_t> fail_set(const ResidueVector& a) const;
    Membership classify(const ResidueVector& a) const;
    // Same answer by sweeping every n through omega_contains; no congruence shortcut.
    Membership classify_literal(const ResidueVector& a) const;

private:
    const NormalizedConfig* cfg_;
    std::vector<Candidate> all_;
};

// Exists n with n ≡ x_t mod p^{sigma_t} for every t.
bool congruences_solvable(Int p, const std::vector<int>& sigma, const ResidueVector& x);

struct OracleOptions {
    Int budget = kDefaultOracleBudget;
    // Classify every vector with classify_literal (full-coordinate sweeps only). Much slower.
    bool literal = false;
};

struct OracleResult {
    std::vector<int> coords;  // field indices spanned by the ambient
    PGroup ambient;
    Subgroup D, G, G_omega;
    Int visited = 0, in_g = 0, in_g_omega = 0;
};

OracleResult compute_G_and_Gomega(const NormalizedConfig& cfg, const LocalData& local, const OracleOptions& opt = {});
OracleResult compute_G_and_Gomega(const CandidateTable& table, const OracleOptions& opt = {});

// G_ω(K_0, K_C) and G(K_0, K_C) over the coordinates C (ascending field indices), keeping
// only vectors accepted by `keep` when given. With a filter the results are checked to be
// closed under addition but need not contain D.
OracleResult sweep_coordinates(const CandidateTable& table, const std::vector<int>& coords,
                               const std::function<bool(const ResidueVector&)>& keep, const OracleOptions& opt = {});

// Invariants of group/D for the diagonal D ⊆ group.
std::vector<int> quotient_by_D(const Subgroup& group, const Subgroup& D);
Subgroup diagonal(const PGroup& ambient);
PGroup residue_group(const NormalizedConfig& cfg, const std::vector<int>& coords);

ResidueVector aprime(const CandidateTable& table, const ResidueVector& a);
ResidueVector varpi_r(const NormalizedConfig& cfg, const ResidueVector& a, int r);

}  // namespace multinorm

#endif
