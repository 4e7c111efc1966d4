#ifndef MULTINORM_STRUCTURE_HPP
#define MULTINORM_STRUCTURE_HPP

// Closed-form route: patching degrees Δ_r, Δ^ω_r, level classes, degrees of freedom,
// and the assembled invariant factors of Ш² and Ш²_ω.

#include <optional>
#include <string>
#include <vector>

#include "multinorm/fields.hpp"
#include "multinorm/local.hpp"

namespace multinorm {

struct LevelInfo {
    int level = 0;                                       // L(C)
    std::vector<std::vector<std::vector<int>>> classes;  // classes[l] = C/~_l for l = 0..ε_0
};

LevelInfo level_and_classes(const NormalizedConfig& cfg, const std::vector<int>& C);

struct ClassNode {
    std::vector<int> members;
    int level = 0;      // L(c)
    int splits = 1;     // n_{L(c)+1}(c)
    int f_omega = 0;
    int f = 0;
    int parent = -1;
    std::vector<int> children;  // node indices, ordered by smallest member
    std::vector<int> chosen;    // children given a generator
};

struct ClassTree {
    int r = 0;
    std::vector<ClassNode> nodes;  // nodes[0] is U_r
};

struct Patching {
    int r = 0;
    int delta_omega = 0;
    int delta = 0;
};

struct GeneratorCertificate {
    int r = 0;
    int node = -1;  // -1 for the U_r diagonal generator
    std::vector<int> support;
    ResidueVector omega_vector;  // embedded in ⊕_{i∈I} Z/p^{e_i}
    ResidueVector vector;
};

struct StructureOptions {
    bool debug_monotonicity = false;
};

struct StructureResult {
    std::vector<Patching> patching;
    std::vector<ClassTree> trees;
    std::vector<GeneratorCertificate> generators;
    std::vector<int> sha;
    std::vector<int> sha_omega;
    // Termwise Ш_ω/Ш guess (Δ^ω_r − Δ_r, f^ω_c − f_c); an annotation only.
    std::vector<int> quotient_annotation;
    std::vector<std::string> monotonicity_violations;
};

int delta_omega(const NormalizedConfig& cfg, int r, StructureResult* trace = nullptr);
int delta(const NormalizedConfig& cfg, const LocalData& local, int r, StructureResult* trace = nullptr);
ClassTree class_tree(const NormalizedConfig& cfg, const LocalData& local, int r, int delta_omega_r,
                     StructureResult* trace = nullptr);
// Single-node evaluations; `bound` is the parent's f^ω (Δ^ω_r at the root).
int f_omega(const NormalizedConfig& cfg, int r, const std::vector<int>& c, int level, int bound);
int f_ordinary(const NormalizedConfig& cfg, const LocalData& local, int r, const std::vector<int>& c, int level,
               int f_omega_c);

StructureResult assemble(const NormalizedConfig& cfg, const LocalData& local, const StructureOptions& opt = {});

// ∩_{i∈U_0} K_0K_i = K_0, which forces Ш² = Ш²_ω = 0.
bool trivial_criterion(const NormalizedConfig& cfg);

struct ShaPair {
    std::vector<int> sha;
    std::vector<int> sha_omega;
};

// Pairwise e_{i,j} = 0 on I′: (Z/p^f)^{m} pieces in closed form. nullopt if the shape does not apply.
std::optional<ShaPair> shortcut_linearly_disjoint(const NormalizedConfig& cfg, const LocalData& local);
bool is_linearly_disjoint(const NormalizedConfig& cfg);
// All K_i of degree p^n inside one (Z/p^n)^2 extension: Ш²_ω in closed form. Throws if the shape does not apply.
std::vector<int> shortcut_bicyclic_subfields(const NormalizedConfig& cfg);
bool is_bicyclic_subfield_shape(const NormalizedConfig& cfg);

}  // namespace multinorm

#endif
