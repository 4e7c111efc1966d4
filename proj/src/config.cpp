#include "multinorm/config.hpp"

#include <fstream>
#include <set>

#include "multinorm/errors.hpp"

namespace multinorm {

using nlohmann::json;

namespace {

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) fail_validation(where + ": expected an object");
    for (const auto& [k, v] : j.items()) {
        (void)v;
        if (!allowed.count(k)) fail_validation(where + ": unknown key \"" + k + "\"");
    }
}

const json& need(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) fail_validation(where + ": missing key \"" + key + "\"");
    return j.at(key);
}

Int as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail_validation(where + ": expected an integer");
    return j.get<Int>();
}

Vec as_vec(const json& j, const std::string& where) {
    if (!j.is_array()) fail_validation(where + ": expected an array of integers");
    Vec out;
    for (const auto& x : j) out.push_back(as_int(x, where));
    return out;
}

std::string as_string(const json& j, const std::string& where) {
    if (!j.is_string()) fail_validation(where + ": expected a string");
    return j.get<std::string>();
}

const std::set<std::string> kCommon{"budget", "debug_monotonicity", "seed"};

void read_common(const json& j, ConfigDocument& doc) {
    if (j.contains("budget")) {
        Int b = as_int(j.at("budget"), "budget");
        if (b < 1) fail_validation("budget must be positive");
        doc.budget = b;
    }
    if (j.contains("debug_monotonicity")) {
        if (!j.at("debug_monotonicity").is_boolean()) fail_validation("debug_monotonicity: expected a boolean");
        doc.debug_monotonicity = j.at("debug_monotonicity").get<bool>();
    }
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer())
            fail_validation("seed: expected an integer");
        doc.seed = j.at("seed").get<std::uint64_t>();
    }
}

AbstractSpec parse_abstract(const json& j, const std::string& where, bool allow_common) {
    std::set<std::string> keys{"mode", "p", "exponents", "characters", "exceptional_places"};
    if (allow_common) keys.insert(kCommon.begin(), kCommon.end());
    only_keys(j, keys, where);
    if (j.contains("mode") && as_string(j.at("mode"), where + ".mode") != "abstract")
        fail_validation(where + ": per-prime components must be abstract");
    AbstractSpec s;
    s.p = as_int(need(j, "p", where), where + ".p");
    for (Int e : as_vec(need(j, "exponents", where), where + ".exponents")) s.exponents.push_back(static_cast<int>(e));
    const json& chars = need(j, "characters", where);
    if (!chars.is_array()) fail_validation(where + ".characters: expected an array");
    for (std::size_t i = 0; i < chars.size(); ++i) {
        const std::string w = where + ".characters[" + std::to_string(i) + "]";
        only_keys(chars[i], {"label", "target_exponent", "coeffs"}, w);
        CharacterSpec c;
        c.label = chars[i].contains("label") ? as_string(chars[i].at("label"), w + ".label") : "K" + std::to_string(i);
        c.target_exponent = static_cast<int>(as_int(need(chars[i], "target_exponent", w), w + ".target_exponent"));
        c.coeffs = as_vec(need(chars[i], "coeffs", w), w + ".coeffs");
        s.characters.push_back(std::move(c));
    }
    if (j.contains("exceptional_places")) {
        const json& places = j.at("exceptional_places");
        if (!places.is_array()) fail_validation(where + ".exceptional_places: expected an array");
        for (std::size_t i = 0; i < places.size(); ++i) {
            const std::string w = where + ".exceptional_places[" + std::to_string(i) + "]";
            only_keys(places[i], {"label", "generators"}, w);
            PlaceSpec v;
            v.label = as_string(need(places[i], "label", w), w + ".label");
            const json& gens = need(places[i], "generators", w);
            if (!gens.is_array()) fail_validation(w + ".generators: expected an array");
            for (const auto& g : gens) v.generators.push_back(as_vec(g, w + ".generators"));
            s.exceptional_places.push_back(std::move(v));
        }
    }
    return s;
}

}  // namespace

ConfigDocument parse_config(const json& j) {
    ConfigDocument doc;
    if (j.is_array()) {
        doc.mode = ConfigDocument::Mode::MultiPrime;
        if (j.empty()) fail_validation("empty list of per-prime configurations");
        std::set<Int> primes;
        for (std::size_t i = 0; i < j.size(); ++i) {
            doc.components.push_back(parse_abstract(j[i], "component[" + std::to_string(i) + "]", false));
            if (!primes.insert(doc.components.back().p).second)
                fail_validation("two per-prime components share p = " + std::to_string(doc.components.back().p));
        }
        return doc;
    }
    if (!j.is_object()) fail_validation("configuration must be an object or an array");
    const std::string mode = as_string(need(j, "mode", "config"), "mode");
    if (mode == "abstract") {
        doc.mode = ConfigDocument::Mode::Abstract;
        doc.components.push_back(parse_abstract(j, "config", true));
    } else if (mode == "kummer") {
        std::set<std::string> keys{"mode", "radicands", "labels"};
        keys.insert(kCommon.begin(), kCommon.end());
        only_keys(j, keys, "config");
        doc.mode = ConfigDocument::Mode::Kummer;
        doc.kummer.radicands = as_vec(need(j, "radicands", "config"), "radicands");
        if (j.contains("labels")) {
            if (!j.at("labels").is_array()) fail_validation("labels: expected an array");
            for (const auto& l : j.at("labels")) doc.kummer.labels.push_back(as_string(l, "labels"));
            if (doc.kummer.labels.size() != doc.kummer.radicands.size())
                fail_validation("labels: one label per radicand required");
        }
    } else {
        fail_validation("mode must be \"abstract\" or \"kummer\", got \"" + mode + "\"");
    }
    read_common(j, doc);
    return doc;
}

ConfigDocument load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_validation("cannot read " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        fail_validation(path + ": " + e.what());
    }
    return parse_config(j);
}

json to_json(const AbstractSpec& s) {
    json chars = json::array();
    for (const auto& c : s.characters)
        chars.push_back({{"label", c.label}, {"target_exponent", c.target_exponent}, {"coeffs", c.coeffs}});
    json places = json::array();
    for (const auto& v : s.exceptional_places) places.push_back({{"label", v.label}, {"generators", v.generators}});
    return {{"mode", "abstract"},
            {"p", s.p},
            {"exponents", s.exponents},
            {"characters", chars},
            {"exceptional_places", places}};
}

json to_json(const ConfigDocument& doc) {
    if (doc.mode == ConfigDocument::Mode::MultiPrime) {
        json arr = json::array();
        for (const auto& c : doc.components) arr.push_back(to_json(c));
        return arr;
    }
    json j;
    if (doc.mode == ConfigDocument::Mode::Abstract) {
        j = to_json(doc.components.front());
    } else {
        j = {{"mode", "kummer"}, {"radicands", doc.kummer.radicands}};
        if (!doc.kummer.labels.empty()) j["labels"] = doc.kummer.labels;
    }
    if (doc.budget) j["budget"] = *doc.budget;
    if (doc.debug_monotonicity) j["debug_monotonicity"] = true;
    if (doc.seed) j["seed"] = *doc.seed;
    return j;
}

Problem to_problem(const AbstractSpec& s) {
    const auto perm = canonical_order(s.exponents);
    std::vector<int> exps;
    for (int j : perm) exps.push_back(s.exponents[static_cast<std::size_t>(j)]);
    auto permute = [&](const Vec& v, const std::string& what) {
        if (v.size() != perm.size()) fail_validation(what + ": expected " + std::to_string(perm.size()) + " entries");
        Vec out;
        for (int j : perm) out.push_back(v[static_cast<std::size_t>(j)]);
        return out;
    };
    Problem pr;
    pr.fields.group = PGroup(s.p, exps, kMaxGaloisOrder);
    for (const auto& c : s.characters) {
        pr.fields.chars.emplace_back(pr.fields.group, c.target_exponent, permute(c.coeffs, "character " + c.label));
        pr.fields.labels.push_back(c.label);
    }
    for (const auto& v : s.exceptional_places) {
        std::vector<Element> gens;
        for (const auto& g : v.generators) gens.push_back(permute(g, "place " + v.label));
        pr.local.exceptional.push_back({v.label, subgroup_from_generators(pr.fields.group, gens), true});
    }
    pr.fields.validate();
    pr.local.validate(pr.fields.group);
    return pr;
}

AbstractSpec to_spec(const Problem& pr) {
    AbstractSpec s;
    s.p = pr.fields.p();
    s.exponents = pr.fields.group.exponents();
    for (std::size_t i = 0; i < pr.fields.chars.size(); ++i)
        s.characters.push_back({pr.fields.labels[i], pr.fields.chars[i].target(), pr.fields.chars[i].coeffs()});
    for (const auto& v : pr.local.exceptional) s.exceptional_places.push_back({v.label, v.D.generators()});
    return s;
}

}  // namespace multinorm
