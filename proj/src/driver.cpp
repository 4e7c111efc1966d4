#include "multinorm/driver.hpp"

#include <chrono>
#include <optional>

#include "multinorm/errors.hpp"
#include "multinorm/kummer.hpp"
#include "multinorm/structure.hpp"

namespace multinorm {

Method parse_method(const std::string& s) {
    if (s == "formula") return Method::Formula;
    if (s == "oracle") return Method::Oracle;
    if (s == "both") return Method::Both;
    fail_validation("method must be formula, oracle or both, got \"" + s + "\"");
}

const char* to_string(Method m) {
    switch (m) {
        case Method::Formula: return "formula";
        case Method::Oracle: return "oracle";
        case Method::Both: return "both";
    }
    return "?";
}

namespace {

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

void describe_config(const NormalizedConfig& cfg, const LocalData& local, PieceReport& out) {
    for (int i = 0; i <= cfg.m(); ++i)
        out.fields.push_back({i, cfg.original_index()[static_cast<std::size_t>(i)], cfg.label(i), cfg.eps(i),
                              cfg.e0(i), i == 0 ? cfg.eps0() : cfg.residue_exponent(i)});
    for (int i = 0; i <= cfg.m(); ++i) {
        out.eij.emplace_back();
        for (int j = 0; j <= cfg.m(); ++j) out.eij.back().push_back(cfg.e(i, j));
    }
    for (int r : cfg.R()) out.levels.push_back({r, cfg.U(r)});
    for (const auto& v : local.exceptional) {
        auto inv = v.D.order() == 1 ? std::vector<int>{} : quotient_invariants(v.D, Subgroup::trivial(v.D.ambient()));
        out.places.push_back({v.label, v.D.generators(), inv, inv.size() <= 1});
    }
    out.trivial_criterion = trivial_criterion(cfg);
}

}  // namespace

PieceReport compute_piece(const Problem& problem, const ComputeOptions& opt, bool allow_degenerate) {
    PieceReport out;
    out.p = problem.fields.p();
    out.exponents = problem.fields.group.exponents();
    std::optional<NormalizedConfig> normalized;
    try {
        normalized = validate_and_normalize(problem.fields);
    } catch (const Error& e) {
        if (!allow_degenerate || e.kind() != ErrorKind::Validation || !starts_with(e.what(), "TooFewFields")) throw;
        // With at most two fields the residue group is a single coordinate, all of it diagonal.
        out.degenerate = true;
        out.note = std::string(e.what()) + "; with one coordinate G = G_omega = D, so both groups vanish";
        out.has_formula = opt.method != Method::Oracle;
        out.has_oracle = opt.method != Method::Formula;
        for (const auto& l : problem.fields.labels) out.fields.push_back({0, static_cast<int>(out.fields.size()), l});
        return out;
    }
    const NormalizedConfig& cfg = *normalized;
    const LocalData& local = problem.local;
    describe_config(cfg, local, out);
    for (int i : cfg.pruned()) out.pruned.push_back(problem.fields.labels[static_cast<std::size_t>(i)]);

    std::optional<CandidateTable> table;
    std::optional<OracleResult> orc;
    if (opt.method != Method::Formula) {
        OracleOptions oo;
        oo.budget = opt.budget;
        oo.literal = opt.literal;
        table.emplace(cfg, local);
        orc = compute_G_and_Gomega(*table, oo);
        out.has_oracle = true;
        out.oracle = {quotient_by_D(orc->G, orc->D), quotient_by_D(orc->G_omega, orc->D),
                      quotient_invariants(orc->G_omega, orc->G)};
        out.oracle_vectors = orc->visited;
    }
    if (opt.method != Method::Oracle) {
        StructureOptions so;
        so.debug_monotonicity = opt.debug_monotonicity;
        const StructureResult st = assemble(cfg, local, so);
        out.has_formula = true;
        out.formula = {st.sha, st.sha_omega, {}};
        out.quotient_annotation = st.quotient_annotation;
        out.monotonicity_violations = st.monotonicity_violations;
        for (const auto& pd : st.patching) out.patching.push_back({pd.r, pd.delta, pd.delta_omega});
        for (const auto& tree : st.trees)
            for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
                const auto& n = tree.nodes[id];
                out.tree.push_back({tree.r, static_cast<int>(id), n.parent, n.members, n.level, n.splits, n.f,
                                    n.f_omega, n.chosen});
            }
        for (const auto& g : st.generators) {
            GeneratorRow row{g.r, g.node, g.support, g.omega_vector, g.vector, "", ""};
            if (table) {
                row.omega_class = to_string(table->classify(g.omega_vector));
                row.vector_class = to_string(table->classify(g.vector));
            }
            out.generators.push_back(std::move(row));
        }
        if (auto ld = shortcut_linearly_disjoint(cfg, local))
            out.shortcuts.push_back({"linearly disjoint", ld->sha, ld->sha_omega, true});
        if (is_bicyclic_subfield_shape(cfg))
            out.shortcuts.push_back({"subfields of a bicyclic extension", {}, shortcut_bicyclic_subfields(cfg), false});
        if (out.trivial_criterion) out.shortcuts.push_back({"trivial criterion", {}, {}, true});
    }
    if (out.has_formula && out.has_oracle)
        out.agreement = out.formula.sha == out.oracle.sha && out.formula.sha_omega == out.oracle.sha_omega;
    return out;
}

std::vector<Problem> problems_of(const ConfigDocument& doc) {
    std::vector<Problem> out;
    if (doc.mode == ConfigDocument::Mode::Kummer) {
        out.push_back(build_kummer(doc.kummer).problem);
        return out;
    }
    for (const auto& c : doc.components) out.push_back(to_problem(c));
    return out;
}

Report compute(const ConfigDocument& doc, const ComputeOptions& opt0, const std::string& source) {
    const auto start = std::chrono::steady_clock::now();
    ComputeOptions opt = opt0;
    if (doc.budget) opt.budget = *doc.budget;
    if (doc.debug_monotonicity) opt.debug_monotonicity = true;

    Report rep;
    rep.source = source;
    rep.method = to_string(opt.method);
    const bool multi = doc.mode == ConfigDocument::Mode::MultiPrime;
    std::vector<std::pair<Int, std::vector<int>>> sha, sha_omega, quotient;
    for (const auto& problem : problems_of(doc)) {
        PieceReport piece = compute_piece(problem, opt, multi);
        const MethodResult& res = primary(piece);
        sha.push_back({piece.p, res.sha});
        sha_omega.push_back({piece.p, res.sha_omega});
        if (piece.has_oracle) quotient.push_back({piece.p, piece.oracle.quotient});
        rep.agreement = rep.agreement && piece.agreement;
        rep.pieces.push_back(std::move(piece));
    }
    rep.sha = direct_sum(sha);
    rep.sha_omega = direct_sum(sha_omega);
    rep.quotient = opt.method == Method::Formula ? "" : direct_sum(quotient);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace multinorm
