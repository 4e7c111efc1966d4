#ifndef MULTINORM_TESTS_FIXTURES_HPP
#define MULTINORM_TESTS_FIXTURES_HPP

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "multinorm/config.hpp"
#include "multinorm/fields.hpp"
#include "multinorm/kummer.hpp"
#include "multinorm/local.hpp"
#include "multinorm/selftest.hpp"

namespace fx {

using namespace multinorm;

struct Char {
    int target;
    Vec coeffs;
};

inline FieldConfig field_config(Int p, std::vector<int> exps, const std::vector<Char>& chars) {
    FieldConfig cfg;
    cfg.group = PGroup(p, std::move(exps));
    for (std::size_t i = 0; i < chars.size(); ++i) {
        cfg.chars.emplace_back(cfg.group, chars[i].target, chars[i].coeffs);
        cfg.labels.push_back("K" + std::to_string(i));
    }
    return cfg;
}

inline NormalizedConfig normalized(Int p, std::vector<int> exps, const std::vector<Char>& chars) {
    return validate_and_normalize(field_config(p, std::move(exps), chars));
}

// K_0 = k(⁴√13), K_1 = k(⁴√17), K_2 = k(⁴√(13·17²)) as characters on (Z/4)².
inline NormalizedConfig bicyclic_13_17() { return normalized(2, {2, 2}, {{2, {1, 0}}, {2, {0, 1}}, {2, {1, 2}}}); }

// Residue exponents e = (2,2,1) with U_0 = {1,2}, U_1 = {3}.
inline NormalizedConfig e221() {
    return normalized(2, {2, 2, 2}, {{2, {1, 0, 0}}, {2, {0, 1, 0}}, {2, {0, 0, 1}}, {2, {1, 0, 2}}});
}

inline KummerBuild kummer(std::vector<Int> radicands) {
    KummerSpec spec;
    spec.radicands = std::move(radicands);
    return build_kummer(spec);
}

// Random normalizable problems from the selftest sampler.
inline std::vector<Problem> random_problems(std::uint64_t seed, int count, Shape shape = Shape::Any,
                                            SampleOptions opt = {}) {
    std::mt19937_64 rng(seed);
    std::vector<Problem> out;
    for (int t = 0; t < count; ++t) out.push_back(random_problem(rng, opt, shape));
    return out;
}

}  // namespace fx

#endif
