#include "multinorm/report.hpp"

#include <sstream>

namespace multinorm {

const MethodResult& primary(const PieceReport& piece) { return piece.has_oracle ? piece.oracle : piece.formula; }

std::string direct_sum(const std::vector<std::pair<Int, std::vector<int>>>& parts) {
    std::string out;
    for (const auto& [p, exps] : parts)
        for (int e : exps) {
            if (e <= 0) continue;
            if (!out.empty()) out += " + ";
            out += "Z/" + std::to_string(ipow(p, e));
        }
    return out.empty() ? "0" : out;
}

namespace {

std::string list(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
    return s + "}";
}

std::string vec(const Vec& v) {
    std::string s = "(";
    for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
    return s + ")";
}

void render_piece(std::ostringstream& os, const PieceReport& pc) {
    os << "p = " << pc.p << ", A = " << format_invariants(pc.p, pc.exponents) << "\n";
    if (pc.degenerate) {
        os << "  degenerate: " << pc.note << "\n";
        return;
    }
    os << "  fields (normalized order):\n";
    for (const auto& f : pc.fields) {
        os << "    K_" << f.index << "  " << f.label << "  [input " << f.original_index << "]  eps=" << f.eps;
        if (f.index > 0) os << "  e_0=" << f.e0 << "  e=" << f.residue_exponent;
        os << "\n";
    }
    for (const auto& l : pc.pruned) os << "    pruned (contains another field): " << l << "\n";
    os << "  e_ij:";
    for (const auto& row : pc.eij) os << " " << list(row);
    os << "\n  levels:";
    for (const auto& l : pc.levels) os << " U_" << l.r << "=" << list(l.members);
    os << "\n";
    if (!pc.places.empty()) {
        os << "  exceptional places:\n";
        for (const auto& v : pc.places)
            os << "    " << v.label << "  D = " << format_invariants(pc.p, v.invariants)
               << (v.cyclic ? "" : "  (not cyclic)") << "\n";
    }
    if (!pc.patching.empty()) {
        os << "  patching degrees:\n";
        for (const auto& row : pc.patching)
            os << "    r=" << row.r << "  Delta=" << row.delta << "  Delta_omega=" << row.delta_omega << "\n";
        os << "  classes:\n";
        for (const auto& n : pc.tree)
            os << "    r=" << n.r << "  " << list(n.members) << "  L=" << n.level << "  splits=" << n.splits
               << "  f=" << n.f << "  f_omega=" << n.f_omega << "\n";
        os << "  generators:\n";
        for (const auto& g : pc.generators) {
            os << "    r=" << g.r << (g.node < 0 ? "  diagonal on " : "  class on ") << list(g.support)
               << "  x_omega=" << vec(g.omega_vector) << "  x=" << vec(g.vector);
            if (!g.omega_class.empty()) os << "  [" << g.omega_class << ", " << g.vector_class << "]";
            os << "\n";
        }
    }
    for (const auto& s : pc.shortcuts) {
        os << "  shortcut " << s.name << ": Sha^2_omega = " << direct_sum({{pc.p, s.sha_omega}});
        if (s.sha_applies) os << ", Sha^2 = " << direct_sum({{pc.p, s.sha}});
        os << "\n";
    }
    for (const auto& m : pc.monotonicity_violations) os << "  MONOTONICITY VIOLATION: " << m << "\n";
    if (pc.has_formula)
        os << "  formula: Sha^2 = " << direct_sum({{pc.p, pc.formula.sha}})
           << ", Sha^2_omega = " << direct_sum({{pc.p, pc.formula.sha_omega}}) << "\n";
    if (pc.has_oracle)
        os << "  oracle:  Sha^2 = " << direct_sum({{pc.p, pc.oracle.sha}})
           << ", Sha^2_omega = " << direct_sum({{pc.p, pc.oracle.sha_omega}})
           << ", quotient = " << direct_sum({{pc.p, pc.oracle.quotient}}) << "  (" << pc.oracle_vectors
           << " vectors)\n";
    if (pc.has_formula && pc.has_oracle) os << "  agreement: " << (pc.agreement ? "yes" : "NO") << "\n";
}

}  // namespace

std::string render_text(const Report& rep) {
    std::ostringstream os;
    os << "source: " << rep.source << "   method: " << rep.method << "\n";
    for (const auto& pc : rep.pieces) render_piece(os, pc);
    os << "Sha^2       = " << rep.sha << "\n";
    os << "Sha^2_omega = " << rep.sha_omega << "\n";
    if (!rep.quotient.empty()) os << "Sha^2_omega / Sha^2 = " << rep.quotient << "\n";
    if (rep.method == "both") os << "agreement: " << (rep.agreement ? "yes" : "NO") << "\n";
    return os.str();
}

}  // namespace multinorm
