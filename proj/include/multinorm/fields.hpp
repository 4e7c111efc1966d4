#ifndef MULTINORM_FIELDS_HPP
#define MULTINORM_FIELDS_HPP

// Cyclic extensions K_0..K_m of k inside one abelian p-extension M/k with group A.
// K_i is the fixed field of H_i = ker χ_i for a surjective χ_i : A → Z/p^{ε_i}.

#include <map>
#include <string>
#include <vector>

#include "multinorm/abelian.hpp"

namespace multinorm {

// An intermediate field k ⊆ F ⊆ M, stored as its fixing group Gal(M/F).
class Field {
public:
    explicit Field(Subgroup fixer) : fixer_(std::move(fixer)) {}

    const Subgroup& fixer() const { return fixer_; }
    int log_degree() const;
    std::vector<int> galois_invariants() const;
    bool cyclic() const { return galois_invariants().size() <= 1; }
    bool within(const Field& bigger) const { return fixer_.contains(bigger.fixer_); }

    // compositum
    Field operator*(const Field& o) const { return Field(intersect(fixer_, o.fixer_)); }
    Field meet(const Field& o) const { return Field(join(fixer_, o.fixer_)); }
    bool operator==(const Field& o) const { return fixer_ == o.fixer_; }

private:
    Subgroup fixer_;
};

struct FieldConfig {
    PGroup group;
    std::vector<Character> chars;
    std::vector<std::string> labels;

    Int p() const { return group.prime(); }
    // Type-level checks: common ambient, surjective non-trivial characters, size cap.
    void validate() const;
};

class NormalizedConfig {
public:
    const FieldConfig& fields() const { return cfg_; }
    const PGroup& group() const { return cfg_.group; }
    Int p() const { return cfg_.group.prime(); }
    const std::string& label(int i) const { return cfg_.labels[static_cast<std::size_t>(i)]; }

    // Input index of normalized field i (0 = K_0).
    const std::vector<int>& original_index() const { return original_; }
    // Input indices dropped because they contain another field.
    const std::vector<int>& pruned() const { return pruned_; }

    int m() const { return static_cast<int>(cfg_.chars.size()) - 1; }
    int eps(int i) const { return eps_[static_cast<std::size_t>(i)]; }
    int eps0() const { return eps_[0]; }
    int e(int i, int j) const { return eij_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    int e0(int i) const { return e(0, i); }
    // e_i = ε_0 − e_{0,i}: the residue coordinate lives in Z/p^{e_i}.
    int residue_exponent(int i) const { return eps0() - e0(i); }
    std::vector<int> residue_exponents() const;

    const std::vector<int>& R() const { return R_; }
    bool has_level(int r) const { return U_.count(r) > 0; }
    const std::vector<int>& U(int r) const;
    std::vector<int> U_above(int r) const;
    std::vector<int> U_below(int r) const;
    std::vector<int> indices() const;  // I = 1..m

    const Subgroup& kernel(int i) const { return fixers_[static_cast<std::size_t>(i)].back(); }
    const Subgroup& subfield_fixer(int i, int f) const;

private:
    friend NormalizedConfig validate_and_normalize(const FieldConfig& cfg);
    FieldConfig cfg_;
    std::vector<int> original_, pruned_, eps_, R_;
    std::vector<std::vector<int>> eij_;
    std::map<int, std::vector<int>> U_;
    std::vector<std::vector<Subgroup>> fixers_;  // fixers_[i][f] = Gal(M/K_i(f))
};

NormalizedConfig validate_and_normalize(const FieldConfig& cfg);

// K_i(f), the degree-p^f subfield of K_i.
Field subfield(const NormalizedConfig& cfg, int i, int f);
// M_C(d) = ∏_{i∈C} K_i(d).
Field composite(const NormalizedConfig& cfg, const std::vector<int>& C, int d);
int intersection_exponent(const NormalizedConfig& cfg, int i, int j);
bool is_sub_bicyclic(const NormalizedConfig& cfg, const Subgroup& H);
// F_{d,s,t} = K_s(d + e_{s,t} − β) K_t(d + e_{s,t} − β) with β = min(e_{0,s}, e_{0,t}).
Field pair_composite(const NormalizedConfig& cfg, int d, int s, int t, int beta);

}  // namespace multinorm

#endif
