#ifndef MULTINORM_REPORT_HPP
#define MULTINORM_REPORT_HPP

// Report documents. Plain data so that JSON serialization is field-for-field and round-trips.

#include <string>
#include <vector>

#include <json.hpp>

#include "multinorm/abelian.hpp"

namespace multinorm {

struct FieldRow {
    int index = 0;           // normalized index, 0 = K_0
    int original_index = 0;  // position in the input
    std::string label;
    int eps = 0;
    int e0 = 0;
    int residue_exponent = 0;  // e_i = ε_0 − e_{0,i}
};

struct LevelRow {
    int r = 0;
    std::vector<int> members;
};

struct PlaceRow {
    std::string label;
    std::vector<Vec> generators;  // in the normalized coordinates of A
    std::vector<int> invariants;  // of D_v
    bool cyclic = true;
};

struct PatchingRow {
    int r = 0;
    int delta = 0;
    int delta_omega = 0;
};

struct TreeRow {
    int r = 0;
    int node = 0;
    int parent = -1;
    std::vector<int> members;
    int level = 0;
    int splits = 1;
    int f = 0;
    int f_omega = 0;
    std::vector<int> chosen;
};

struct GeneratorRow {
    int r = 0;
    int node = -1;
    std::vector<int> support;
    Vec omega_vector;
    Vec vector;
    std::string omega_class;  // oracle membership, empty when the oracle did not run
    std::string vector_class;
};

struct ShortcutRow {
    std::string name;
    std::vector<int> sha;
    std::vector<int> sha_omega;
    bool sha_applies = true;  // the bicyclic-subfield closed form only covers Ш_ω
};

struct MethodResult {
    std::vector<int> sha;        // p-exponents of the invariant factors, non-increasing
    std::vector<int> sha_omega;
    std::vector<int> quotient;   // Ш_ω/Ш; only the oracle fills this
};

struct PieceReport {
    Int p = 2;
    std::vector<int> exponents;  // of A, canonical order
    bool degenerate = false;     // fewer than three fields after pruning: Ш = Ш_ω = 0
    std::string note;
    std::vector<FieldRow> fields;
    std::vector<std::string> pruned;
    std::vector<std::vector<int>> eij;
    std::vector<LevelRow> levels;
    std::vector<PlaceRow> places;
    bool trivial_criterion = false;
    bool has_formula = false;
    bool has_oracle = false;
    MethodResult formula;
    MethodResult oracle;
    std::vector<int> quotient_annotation;  // termwise guess from the formula; not asserted
    std::vector<PatchingRow> patching;
    std::vector<TreeRow> tree;
    std::vector<GeneratorRow> generators;
    std::vector<ShortcutRow> shortcuts;
    std::vector<std::string> monotonicity_violations;
    Int oracle_vectors = 0;
    bool agreement = true;
};

struct Report {
    std::string source;
    std::string method;
    std::vector<PieceReport> pieces;
    // Direct sum over the pieces, e.g. "Z/4 + Z/3" or "0".
    std::string sha;
    std::string sha_omega;
    std::string quotient;
    bool agreement = true;  // false only when both methods ran and differ somewhere
    double seconds = 0;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(FieldRow, index, original_index, label, eps, e0, residue_exponent)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(LevelRow, r, members)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(PlaceRow, label, generators, invariants, cyclic)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(PatchingRow, r, delta, delta_omega)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(TreeRow, r, node, parent, members, level, splits, f, f_omega, chosen)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(GeneratorRow, r, node, support, omega_vector, vector, omega_class,
                                                vector_class)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(ShortcutRow, name, sha, sha_omega, sha_applies)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(MethodResult, sha, sha_omega, quotient)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(PieceReport, p, exponents, degenerate, note, fields, pruned, eij,
                                                levels, places, trivial_criterion, has_formula, has_oracle, formula,
                                                oracle, quotient_annotation, patching, tree, generators, shortcuts,
                                                monotonicity_violations, oracle_vectors, agreement)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(Report, source, method, pieces, sha, sha_omega, quotient, agreement,
                                                seconds)

// The report's answer for one piece: oracle when it ran, else formula.
const MethodResult& primary(const PieceReport& piece);

// "Z/4 + Z/2 + Z/3"-style direct sum over (p, exponents) pairs; "0" when empty.
std::string direct_sum(const std::vector<std::pair<Int, std::vector<int>>>& parts);

std::string render_text(const Report& report);

}  // namespace multinorm

#endif
