#ifndef MULTINORM_CONFIG_HPP
#define MULTINORM_CONFIG_HPP

// JSON configuration documents.
//
// abstract: {"mode":"abstract","p":2,"exponents":[2,2],
//            "characters":[{"label":"K0","target_exponent":2,"coeffs":[1,0]},...],
//            "exceptional_places":[{"label":"v13","generators":[[2,0],[0,1]]}]}
// kummer:   {"mode":"kummer","radicands":[17,221,13],"labels":[...]}
// several primes: a top-level array of abstract documents.
// Optional everywhere: "budget", "debug_monotonicity", "seed".

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "multinorm/abelian.hpp"
#include "multinorm/fields.hpp"
#include "multinorm/kummer.hpp"
#include "multinorm/local.hpp"

namespace multinorm {

struct CharacterSpec {
    std::string label;
    int target_exponent = 0;
    Vec coeffs;
};

struct PlaceSpec {
    std::string label;
    std::vector<Vec> generators;
};

struct AbstractSpec {
    Int p = 2;
    std::vector<int> exponents;
    std::vector<CharacterSpec> characters;
    std::vector<PlaceSpec> exceptional_places;
};

struct ConfigDocument {
    enum class Mode { Abstract, Kummer, MultiPrime };
    Mode mode = Mode::Abstract;
    std::vector<AbstractSpec> components;  // one for Abstract, several for MultiPrime
    KummerSpec kummer;
    std::optional<Int> budget;
    bool debug_monotonicity = false;
    std::optional<std::uint64_t> seed;
};

ConfigDocument parse_config(const nlohmann::json& j);
ConfigDocument load_config(const std::string& path);
nlohmann::json to_json(const ConfigDocument& doc);
nlohmann::json to_json(const AbstractSpec& spec);

// Builds the group (sorting exponents, permuting coordinates to match), characters and places.
Problem to_problem(const AbstractSpec& spec);
AbstractSpec to_spec(const Problem& problem);

}  // namespace multinorm

#endif
