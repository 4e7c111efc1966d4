// multinorm: command-line front end.
//
// Exit codes: 0 success, 1 internal error, 2 validation, 3 budget, 4 disagreement.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "multinorm/driver.hpp"
#include "multinorm/errors.hpp"
#include "multinorm/examples.hpp"
#include "multinorm/kummer.hpp"
#include "multinorm/selftest.hpp"

using namespace multinorm;
using nlohmann::json;

namespace {

constexpr int kExitInternal = 1, kExitValidation = 2, kExitBudget = 3, kExitDisagreement = 4;

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) fail_validation("cannot write " + path);
    out << j.dump(2) << "\n";
}

// Prints the report; on disagreement also dumps the offending configuration to stderr.
int finish(const Report& rep, const ConfigDocument& doc, bool quiet = false) {
    if (!quiet) std::cout << render_text(rep);
    if (rep.agreement) return 0;
    std::cerr << "DISAGREEMENT between oracle and formula; configuration:\n" << to_json(doc).dump(2) << "\n";
    return kExitDisagreement;
}

int cmd_validate(const std::string& path) {
    const ConfigDocument doc = load_config(path);
    const bool multi = doc.mode == ConfigDocument::Mode::MultiPrime;
    for (const auto& pr : problems_of(doc)) {
        std::cout << "p = " << pr.fields.p() << ": ";
        try {
            const NormalizedConfig cfg = validate_and_normalize(pr.fields);
            std::cout << cfg.m() + 1 << " fields after pruning, A = "
                      << format_invariants(pr.fields.p(), pr.fields.group.exponents()) << ", "
                      << pr.local.exceptional.size() << " exceptional places\n";
        } catch (const Error& e) {
            if (!multi || e.kind() != ErrorKind::Validation) throw;
            std::cout << "degenerate (" << e.what() << "), reported as trivial\n";
        }
    }
    std::cout << "ok\n";
    return 0;
}

int cmd_compute(const std::string& path, const ComputeOptions& opt, const std::string& json_out) {
    const ConfigDocument doc = load_config(path);
    const Report rep = compute(doc, opt, path);
    if (!json_out.empty()) write_json(json_out, rep);
    return finish(rep, doc);
}

int cmd_examples(const std::string& name, const ComputeOptions& opt, const std::string& json_out) {
    std::vector<ExampleInfo> chosen;
    for (const auto& e : examples())
        if (name == "all" || name == e.name) chosen.push_back(e);
    if (chosen.empty()) example_config(name);  // raises the "unknown example" validation error
    json all = json::array();
    int code = 0;
    for (const auto& e : chosen) {
        const ConfigDocument doc = example_config(e.name);
        const Report rep = compute(doc, opt, "example " + e.name);
        std::cout << "== " << e.name << ": " << e.description << "\n";
        code = std::max(code, finish(rep, doc));
        const bool matches = rep.sha == e.expected_sha && rep.sha_omega == e.expected_sha_omega;
        std::cout << "expected: Sha^2 = " << e.expected_sha << ", Sha^2_omega = " << e.expected_sha_omega << "  "
                  << (matches ? "[match]" : "[MISMATCH]") << "\n\n";
        if (!matches) code = kExitDisagreement;
        all.push_back(rep);
    }
    if (!json_out.empty()) write_json(json_out, name == "all" ? all : all.front());
    return code;
}

std::vector<Int> parse_radicands(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            fail_validation("radicands: \"" + tok + "\" is not an integer");
        }
    }
    return out;
}

int cmd_kummer(const std::string& radicands, const std::vector<std::string>& labels, bool run,
               const ComputeOptions& opt, const std::string& json_out) {
    ConfigDocument doc;
    doc.mode = ConfigDocument::Mode::Kummer;
    doc.kummer.radicands = parse_radicands(radicands);
    doc.kummer.labels = labels;
    const KummerBuild kb = build_kummer(doc.kummer);
    std::cout << "k = Q(i), A = " << format_invariants(2, kb.problem.fields.group.exponents()) << " on generators";
    for (Int q : kb.generators) std::cout << " " << q;
    std::cout << "\n";
    for (std::size_t i = 0; i < kb.exponent_vectors.size(); ++i) {
        const Character& c = kb.problem.fields.chars[i];
        std::cout << "  " << kb.problem.fields.labels[i] << "  exponents mod 4 = (";
        for (std::size_t j = 0; j < kb.exponent_vectors[i].size(); ++j)
            std::cout << (j ? "," : "") << kb.exponent_vectors[i][j];
        std::cout << ")  character degree " << ipow(2, c.target()) << "\n";
    }
    for (std::size_t v = 0; v < kb.places.size(); ++v) {
        const Subgroup& D = kb.problem.local.exceptional[v].D;
        std::cout << "  " << kb.places[v].label << "  |K_v| = " << kb.places[v].K_v.order()
                  << "  D_v = " << format_invariants(2, D.order() == 1 ? std::vector<int>{}
                                                           : quotient_invariants(D, Subgroup::trivial(D.ambient())))
                  << "\n";
    }
    if (!run) {
        if (!json_out.empty()) write_json(json_out, to_json(to_spec(kb.problem)));
        return 0;
    }
    const Report rep = compute(doc, opt, "kummer " + radicands);
    if (!json_out.empty()) write_json(json_out, rep);
    return finish(rep, doc);
}

int cmd_selftest(std::uint64_t seed, int count, const std::string& shape_name) {
    Shape shape = Shape::Any;
    if (shape_name == "linearly-disjoint") shape = Shape::LinearlyDisjoint;
    else if (shape_name == "bicyclic") shape = Shape::BicyclicSubfields;
    else if (shape_name != "any") fail_validation("shape must be any, linearly-disjoint or bicyclic");
    const SelftestSummary s = run_selftest(seed, count, {}, shape);
    const InvariantCounts& v = s.violations;
    std::cout << "selftest seed=" << seed << " count=" << s.count << " shape=" << shape_name << "\n"
              << "agreement: " << s.agreements << "/" << s.count << "\n"
              << "shortcut instances compared: " << s.shortcut_instances << "\n"
              << "violations: diagonal_chain=" << v.diagonal_chain << " delta_bounds=" << v.delta_bounds
              << " f_chain=" << v.f_chain << " g0_structure=" << v.g0_structure << " aprime=" << v.aprime
              << " generators=" << v.generators << " monotonicity=" << v.monotonicity
              << " expression=" << v.expression << " shortcuts=" << v.shortcuts << "\n";
    std::cerr << "time: " << s.seconds << " s\n";
    for (const auto& f : s.failures) std::cerr << f << "\n";
    return s.failures.empty() ? 0 : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tate-Shafarevich groups of multinorm-one tori for cyclic p-power extensions"};
    app.require_subcommand(1);

    ComputeOptions opt;
    std::string method = "both", json_out, path, example_name, radicands, shape = "any";
    std::vector<std::string> labels;
    bool run = false;
    std::uint64_t seed = 1;
    int count = 500;

    auto add_compute_flags = [&](CLI::App* sub) {
        sub->add_option("--method", method, "formula, oracle or both")->check(CLI::IsMember({"formula", "oracle", "both"}));
        sub->add_option("--budget", opt.budget, "cap on vectors enumerated by the oracle")->check(CLI::PositiveNumber);
        sub->add_option("--json", json_out, "write the report as JSON to this file");
        sub->add_flag("--literal", opt.literal, "oracle sweeps every n in the classification (slow)");
        sub->add_flag("--debug-monotonicity", opt.debug_monotonicity, "re-check monotonicity of the level scans");
    };

    auto* validate = app.add_subcommand("validate", "check a configuration file");
    validate->add_option("file", path)->required();

    auto* comp = app.add_subcommand("compute", "compute Sha^2 and Sha^2_omega for a configuration file");
    comp->add_option("file", path)->required();
    add_compute_flags(comp);

    auto* ex = app.add_subcommand("examples", "run a built-in example (or all)");
    ex->add_option("name", example_name)->required();
    add_compute_flags(ex);

    auto* kum = app.add_subcommand("kummer", "quartic Kummer configuration over Q(i)");
    kum->add_option("--radicands", radicands, "comma-separated odd positive integers")->required();
    kum->add_option("--labels", labels, "one label per radicand")->delimiter(',');
    kum->add_flag("--compute", run, "compute the groups, not only the Galois data");
    add_compute_flags(kum);

    auto* st = app.add_subcommand("selftest", "random configurations, oracle against formula");
    st->add_option("--seed", seed);
    st->add_option("--count", count)->check(CLI::PositiveNumber);
    st->add_option("--shape", shape, "any, linearly-disjoint or bicyclic");

    CLI11_PARSE(app, argc, argv);

    try {
        opt.method = parse_method(method);
        if (*validate) return cmd_validate(path);
        if (*comp) return cmd_compute(path, opt, json_out);
        if (*ex) return cmd_examples(example_name, opt, json_out);
        if (*kum) return cmd_kummer(radicands, labels, run, opt, json_out);
        if (*st) return cmd_selftest(seed, count, shape);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::Validation: return kExitValidation;
            case ErrorKind::Budget: return kExitBudget;
            case ErrorKind::Disagreement: return kExitDisagreement;
            case ErrorKind::Internal: return kExitInternal;
        }
    }
    return kExitInternal;
}
