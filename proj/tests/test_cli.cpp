#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "multinorm/config.hpp"
#include "multinorm/driver.hpp"
#include "multinorm/errors.hpp"
#include "multinorm/examples.hpp"

using namespace multinorm;
using nlohmann::json;

namespace {

ErrorKind kind_of_parse(const json& j) {
    try {
        parse_config(j);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

json abstract_17_13() {
    return json::parse(R"({
        "mode": "abstract", "p": 2, "exponents": [2, 2],
        "characters": [
            {"label": "a", "target_exponent": 2, "coeffs": [1, 0]},
            {"label": "b", "target_exponent": 2, "coeffs": [1, 1]},
            {"label": "c", "target_exponent": 2, "coeffs": [0, 1]}
        ],
        "exceptional_places": [
            {"label": "v13", "generators": [[1, 0], [0, 2]]}
        ]
    })");
}

json without_seconds(json j) {
    if (j.is_object()) {
        j.erase("seconds");
        for (auto& [k, v] : j.items()) v = without_seconds(v);
    } else if (j.is_array()) {
        for (auto& v : j) v = without_seconds(v);
    }
    return j;
}

std::filesystem::path scratch() {
    auto dir = std::filesystem::temp_directory_path() / "multinorm_test_cli";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write(const std::string& name, const std::string& text) {
    const auto path = scratch() / name;
    std::ofstream(path) << text;
    return path.string();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(MULTINORM_CLI) + " " + args + " > " + (scratch() / "stdout.txt").string() +
                            " 2> " + (scratch() / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& name) {
    std::ifstream in(scratch() / name);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("parsing an abstract configuration") {
    const auto doc = parse_config(abstract_17_13());
    CHECK(doc.mode == ConfigDocument::Mode::Abstract);
    REQUIRE(doc.components.size() == 1);
    CHECK(doc.components[0].characters[1].label == "b");
    CHECK(doc.components[0].exceptional_places[0].generators.size() == 2);
    CHECK(to_json(doc) == abstract_17_13());
}

TEST_CASE("schema violations") {
    auto j = abstract_17_13();
    j["extra"] = 1;
    CHECK(kind_of_parse(j) == ErrorKind::Validation);
    j = abstract_17_13();
    j["characters"][0]["colour"] = "red";
    CHECK(kind_of_parse(j) == ErrorKind::Validation);
    j = abstract_17_13();
    j.erase("p");
    CHECK(kind_of_parse(j) == ErrorKind::Validation);
    j = abstract_17_13();
    j["p"] = 2.5;
    CHECK(kind_of_parse(j) == ErrorKind::Validation);
    j = abstract_17_13();
    j["mode"] = "cyclotomic";
    CHECK(kind_of_parse(j) == ErrorKind::Validation);
    CHECK(kind_of_parse(json::array()) == ErrorKind::Validation);
    // multi-prime: components may not repeat p or carry common keys
    auto c = abstract_17_13();
    c.erase("mode");
    CHECK(kind_of_parse(json::array({c, c})) == ErrorKind::Validation);
    auto with_budget = c;
    with_budget["budget"] = 10;
    CHECK(kind_of_parse(json::array({with_budget})) == ErrorKind::Validation);
    CHECK(kind_of_parse(json::parse(R"({"mode":"kummer","radicands":[17,221,13],"labels":["x"]})")) ==
          ErrorKind::Validation);
}

TEST_CASE("configuration round trip") {
    for (const auto& e : examples()) {
        const auto doc = example_config(e.name);
        const json j = to_json(doc);
        CHECK(to_json(parse_config(j)) == j);
    }
    auto j = json::parse(R"({"mode":"kummer","radicands":[17,221,13],"labels":["a","b","c"],"budget":1000,"seed":7})");
    CHECK(to_json(parse_config(j)) == j);
}

TEST_CASE("examples reproduce their expected groups by both methods") {
    ComputeOptions opt;
    for (const auto& e : examples()) {
        const Report rep = compute(example_config(e.name), opt, e.name);
        CHECK_MESSAGE(rep.sha == e.expected_sha, e.name);
        CHECK_MESSAGE(rep.sha_omega == e.expected_sha_omega, e.name);
        CHECK(rep.agreement);
        for (const auto& pc : rep.pieces) {
            CHECK(pc.has_formula);
            CHECK(pc.has_oracle);
        }
    }
}

TEST_CASE("report JSON round trip and determinism") {
    ComputeOptions opt;
    for (const auto& e : examples()) {
        const Report rep = compute(example_config(e.name), opt, e.name);
        const json j = rep;
        const Report back = j.get<Report>();
        CHECK(json(back) == j);
        const json again = compute(example_config(e.name), opt, e.name);
        CHECK(without_seconds(again) == without_seconds(j));
        CHECK(render_text(back) == render_text(rep));
    }
}

TEST_CASE("a configuration whose G is the diagonal reports trivial groups") {
    const auto j = json::parse(R"({"mode":"abstract","p":2,"exponents":[1,1,1],"characters":[
        {"target_exponent":1,"coeffs":[1,0,0]},{"target_exponent":1,"coeffs":[0,1,0]},
        {"target_exponent":1,"coeffs":[0,0,1]}]})");
    const Report rep = compute(parse_config(j), ComputeOptions{}, "inline");
    REQUIRE(rep.pieces.size() == 1);
    CHECK(rep.pieces[0].oracle.sha.empty());
    CHECK(rep.pieces[0].oracle.sha_omega.empty());
    CHECK(rep.pieces[0].formula.sha.empty());
    CHECK(rep.pieces[0].formula.sha_omega.empty());
    CHECK(rep.sha == "0");
}

TEST_CASE("multi-prime documents are split per prime and summed") {
    const auto doc = example_config("cyclotomic");
    REQUIRE(doc.components.size() == 2);
    CHECK(doc.components[0].p == 2);
    CHECK(doc.components[1].p == 3);
    // φ = 6, 10, 12: the 3-part sees only Q(ζ_7), Q(ζ_13) and the 5-part only Q(ζ_11).
    const auto small = cyclotomic_components({{7, 1}, {11, 1}, {13, 1}});
    ConfigDocument d;
    d.mode = ConfigDocument::Mode::MultiPrime;
    d.components = small;
    const Report rep = compute(d, ComputeOptions{}, "inline");
    int degenerate = 0;
    for (const auto& pc : rep.pieces) degenerate += pc.degenerate ? 1 : 0;
    CHECK(degenerate == 2);
    CHECK(rep.sha == "0");
    CHECK(rep.agreement);
    CHECK(direct_sum({{2, {2, 1}}, {3, {1}}}) == "Z/4 + Z/2 + Z/3");
    CHECK(direct_sum({{2, {}}, {3, {}}}) == "0");
}

TEST_CASE("cyclotomic components") {
    const auto comps = cyclotomic_components({{7, 1}, {13, 1}, {19, 1}, {37, 1}});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].exponents == std::vector<int>{1, 2, 1, 2});
    CHECK(comps[1].exponents == std::vector<int>{1, 1, 2, 2});
    // 13 ≡ 6 = 3^1 mod 7 (3 generates), so the 2-part of log_3(13) is 1 mod 2
    CHECK(comps[0].exceptional_places[1].label == "v13");
    CHECK(comps[0].exceptional_places[1].generators[1][0] == 1);
    CHECK_THROWS_AS(cyclotomic_components({{7, 1}, {7, 2}}), Error);
    CHECK_THROWS_AS(cyclotomic_components({{2, 3}}), Error);
    CHECK_THROWS_AS(cyclotomic_components({{9, 1}}), Error);
}

TEST_CASE("command-line exit codes") {
    CHECK(run_cli("examples all") == 0);
    CHECK(slurp("stdout.txt").find("[MISMATCH]") == std::string::npos);

    const std::string good = write("good.json", abstract_17_13().dump());
    CHECK(run_cli("validate " + good) == 0);
    CHECK(run_cli("compute " + good + " --method both") == 0);
    const std::string out_json = (scratch() / "report.json").string();
    CHECK(run_cli("compute " + good + " --method oracle --json " + out_json) == 0);
    std::ifstream rin(out_json);
    const json rep = json::parse(rin);
    CHECK(rep.at("method") == "oracle");

    auto bad = abstract_17_13();
    bad["surplus"] = true;
    CHECK(run_cli("validate " + write("bad.json", bad.dump())) == 2);
    CHECK(run_cli("compute " + write("broken.json", "{ not json")) == 2);
    CHECK(run_cli("examples no-such-example") == 2);

    CHECK(run_cli("compute " + good + " --method oracle --budget 3") == 3);
    CHECK(run_cli("kummer --radicands 3,5,7,11,13") == 3);

    CHECK(run_cli("kummer --radicands 17,221,13 --compute") == 0);
    CHECK(slurp("stdout.txt").find("Sha^2_omega = Z/4") != std::string::npos);
    CHECK(run_cli("selftest --seed 5 --count 20") == 0);
}

TEST_CASE("command-line output is deterministic") {
    CHECK(run_cli("examples all") == 0);
    const std::string first = slurp("stdout.txt");
    CHECK(run_cli("examples all") == 0);
    CHECK(slurp("stdout.txt") == first);
    CHECK(run_cli("selftest --seed 9 --count 30") == 0);
    const std::string st = slurp("stdout.txt");
    CHECK(run_cli("selftest --seed 9 --count 30") == 0);
    CHECK(slurp("stdout.txt") == st);
}
