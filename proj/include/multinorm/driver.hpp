#ifndef MULTINORM_DRIVER_HPP
#define MULTINORM_DRIVER_HPP

#include <string>

#include "multinorm/config.hpp"
#include "multinorm/local.hpp"
#include "multinorm/oracle.hpp"
#include "multinorm/report.hpp"

namespace multinorm {

enum class Method { Formula, Oracle, Both };
Method parse_method(const std::string& s);
const char* to_string(Method m);

struct ComputeOptions {
    Method method = Method::Both;
    Int budget = kDefaultOracleBudget;
    bool debug_monotonicity = false;
    bool literal = false;  // oracle classifies by the literal n-sweep
};

// One prime. With allow_degenerate, a configuration that prunes to fewer than three fields comes
// back marked degenerate with Ш = Ш_ω = 0 instead of failing validation.
PieceReport compute_piece(const Problem& problem, const ComputeOptions& opt, bool allow_degenerate = false);

// Every piece of the document; Kummer documents are built first. The document's own
// budget and debug_monotonicity override opt when present.
Report compute(const ConfigDocument& doc, const ComputeOptions& opt, const std::string& source);

// The abstract components a document stands for (Kummer documents are built).
std::vector<Problem> problems_of(const ConfigDocument& doc);

}  // namespace multinorm

#endif
