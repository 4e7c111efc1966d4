#include "multinorm/fields.hpp"

#include <algorithm>
#include <numeric>

#include "multinorm/errors.hpp"

namespace multinorm {

int Field::log_degree() const { return vp(fixer_.index(), fixer_.ambient().prime()); }

std::vector<int> Field::galois_invariants() const { return quotient_invariants(fixer_.ambient(), fixer_); }

void FieldConfig::validate() const {
    if (group.order() > kMaxGaloisOrder)
        fail_budget("Galois group order " + std::to_string(group.order()) + " exceeds cap " + std::to_string(kMaxGaloisOrder));
    if (labels.size() != chars.size()) fail_validation("one label per field required");
    for (std::size_t i = 0; i < chars.size(); ++i) {
        const auto& chi = chars[i];
        if (chi.ambient() != group) fail_validation("field " + labels[i] + ": character on a different group");
        if (chi.target() < 1) fail_validation("field " + labels[i] + ": trivial extension (target exponent 0)");
        if (!chi.surjective())
            fail_validation("NonSurjectiveCharacter: field " + labels[i] + " has image of order p^" +
                            std::to_string(chi.image_exponent()) + " in Z/p^" + std::to_string(chi.target()));
    }
}

std::vector<int> NormalizedConfig::residue_exponents() const {
    std::vector<int> out;
    for (int i = 1; i <= m(); ++i) out.push_back(residue_exponent(i));
    return out;
}

const std::vector<int>& NormalizedConfig::U(int r) const {
    auto it = U_.find(r);
    if (it == U_.end()) fail_validation("r = " + std::to_string(r) + " is not in R");
    return it->second;
}

std::vector<int> NormalizedConfig::U_above(int r) const {
    std::vector<int> out;
    for (const auto& [s, members] : U_)
        if (s > r) out.insert(out.end(), members.begin(), members.end());
    return out;
}

std::vector<int> NormalizedConfig::U_below(int r) const {
    std::vector<int> out;
    for (const auto& [s, members] : U_)
        if (s < r) out.insert(out.end(), members.begin(), members.end());
    return out;
}

std::vector<int> NormalizedConfig::indices() const {
    std::vector<int> out(static_cast<std::size_t>(m()));
    std::iota(out.begin(), out.end(), 1);
    return out;
}

const Subgroup& NormalizedConfig::subfield_fixer(int i, int f) const {
    if (i < 0 || i > m()) fail_validation("field index out of range");
    if (f < 0 || f > eps(i)) fail_validation("subfield degree out of range");
    return fixers_[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)];
}

NormalizedConfig validate_and_normalize(const FieldConfig& cfg) {
    cfg.validate();
    const int n = static_cast<int>(cfg.chars.size());
    std::vector<Subgroup> H;
    for (const auto& chi : cfg.chars) H.push_back(chi.kernel());

    // Drop every field containing another one; among equal fields keep the first.
    std::vector<int> kept, pruned;
    for (int i = 0; i < n; ++i) {
        bool drop = false;
        for (int j = 0; j < n && !drop; ++j) {
            if (j == i || !H[j].contains(H[i])) continue;
            drop = H[i] != H[j] || j < i;
        }
        (drop ? pruned : kept).push_back(i);
    }
    if (kept.size() < 3)
        fail_validation("TooFewFields: " + std::to_string(kept.size()) +
                        " fields remain after removing superfields; at least 3 are required");

    Subgroup all = Subgroup::trivial(cfg.group);
    for (int i : kept) all = join(all, H[i]);
    if (all != Subgroup::full(cfg.group))
        fail_validation("IntersectionNotBase: the intersection of all fields is a proper extension with group " +
                        format_invariants(cfg.p(), quotient_invariants(cfg.group, all)));

    int k0 = kept.front();
    for (int i : kept)
        if (cfg.chars[i].target() < cfg.chars[k0].target()) k0 = i;
    auto e_with = [&](int i, int j) { return vp(join(H[i], H[j]).index(), cfg.p()); };
    std::vector<int> rest;
    for (int i : kept)
        if (i != k0) rest.push_back(i);
    std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) { return e_with(k0, a) < e_with(k0, b); });

    NormalizedConfig out;
    out.original_.push_back(k0);
    out.original_.insert(out.original_.end(), rest.begin(), rest.end());
    out.pruned_ = pruned;
    out.cfg_.group = cfg.group;
    for (int i : out.original_) {
        out.cfg_.chars.push_back(cfg.chars[i]);
        out.cfg_.labels.push_back(cfg.labels[i]);
        out.eps_.push_back(cfg.chars[i].target());
    }
    const std::size_t size = out.original_.size();
    out.fixers_.resize(size);
    for (std::size_t i = 0; i < size; ++i)
        for (int f = 0; f <= out.eps_[i]; ++f) out.fixers_[i].push_back(out.cfg_.chars[i].truncated(f).kernel());
    out.eij_.assign(size, std::vector<int>(size));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            out.eij_[i][j] = i == j ? out.eps_[i] : e_with(out.original_[i], out.original_[j]);
    for (int i = 1; i < static_cast<int>(size); ++i) out.U_[out.e0(i)].push_back(i);
    for (const auto& kv : out.U_) out.R_.push_back(kv.first);

    require(out.e0(1) == 0 && out.residue_exponent(1) == out.eps0(), "normalize: e_{0,1} must vanish");
    require(out.R_.front() == 0, "normalize: U_0 must be nonempty");
    for (int i = 1; i < static_cast<int>(size); ++i)
        for (int j = i + 1; j < static_cast<int>(size); ++j) {
            require(out.e(i, j) >= out.e0(i), "normalize: e_{i,j} >= e_{0,i} violated");
            require(out.e(i, j) < std::min(out.eps(i), out.eps(j)), "normalize: nested fields survived pruning");
        }
    return out;
}

Field subfield(const NormalizedConfig& cfg, int i, int f) { return Field(cfg.subfield_fixer(i, f)); }

Field composite(const NormalizedConfig& cfg, const std::vector<int>& C, int d) {
    if (C.empty()) fail_validation("composite of an empty family");
    Subgroup fix = Subgroup::full(cfg.group());
    for (int i : C) fix = intersect(fix, cfg.subfield_fixer(i, d));
    return Field(fix);
}

int intersection_exponent(const NormalizedConfig& cfg, int i, int j) {
    if (i < 0 || j < 0 || i > cfg.m() || j > cfg.m()) fail_validation("field index out of range");
    return cfg.e(i, j);
}

bool is_sub_bicyclic(const NormalizedConfig& cfg, const Subgroup& H) {
    return quotient_invariants(cfg.group(), H).size() <= 2;
}

Field pair_composite(const NormalizedConfig& cfg, int d, int s, int t, int beta) {
    if (beta != std::min(cfg.e0(s), cfg.e0(t))) fail_validation("pair_composite: beta must be min(e_{0,s}, e_{0,t})");
    const int g = d + cfg.e(s, t) - beta;
    if (g < 0 || g > std::min(cfg.eps(s), cfg.eps(t))) fail_validation("pair_composite: degree out of range");
    return subfield(cfg, s, g) * subfield(cfg, t, g);
}

}  // namespace multinorm
