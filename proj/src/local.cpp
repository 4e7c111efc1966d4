#include "multinorm/local.hpp"

#include <set>

#include "multinorm/errors.hpp"

namespace multinorm {

void LocalData::validate(const PGroup& A) const {
    std::set<std::string> labels;
    for (const auto& v : exceptional) {
        if (!labels.insert(v.label).second) fail_validation("duplicate place label " + v.label);
        if (v.D.ambient() != A) fail_validation("place " + v.label + ": decomposition group outside A");
    }
}

int delta(Int p, Int x, int s, Int y, int t) {
    const int top = std::min(s, t);
    int d = 0;
    Int q = 1;
    while (d < top && mod(x - y, q * p) == 0) q *= p, ++d;
    return d;
}

std::vector<int> i_n(const NormalizedConfig& cfg, const ResidueVector& a, Int n) {
    std::vector<int> out;
    for (int i = 1; i <= cfg.m(); ++i) {
        const Int m = ipow(cfg.p(), cfg.residue_exponent(i));
        if (mod(n, m) == a[static_cast<std::size_t>(i - 1)]) out.push_back(i);
    }
    return out;
}

bool sigma_contains(const NormalizedConfig& cfg, const Subgroup& D, int i, int d) {
    if (d < 0 || d > cfg.eps0()) fail_validation("sigma_contains: d out of range");
    return cfg.subfield_fixer(0, cfg.eps0() - d).contains(intersect(D, cfg.kernel(i)));
}

int sigma_threshold(const NormalizedConfig& cfg, const Subgroup& D, int i) {
    const Subgroup DH = intersect(D, cfg.kernel(i));
    for (int d = 0; d <= cfg.eps0(); ++d)
        if (cfg.subfield_fixer(0, cfg.eps0() - d).contains(DH)) return d;
    fail_internal("sigma_threshold: d = ε_0 must always pass");
}

bool omega_contains(const NormalizedConfig& cfg, const Subgroup& D, const ResidueVector& a, Int n) {
    const Int p = cfg.p();
    for (int i = 1; i <= cfg.m(); ++i) {
        const int ei = cfg.residue_exponent(i);
        const Int ai = a[static_cast<std::size_t>(i - 1)];
        const int d = delta(p, n, cfg.eps0(), ai, ei);
        if (d == ei) continue;  // i ∈ I_n(a)
        if (!sigma_contains(cfg, D, i, d)) return false;
    }
    return true;
}

const char* to_string(Membership m) {
    switch (m) {
        case Membership::InG: return "IN_G";
        case Membership::InGOmegaOnly: return "IN_G_OMEGA_ONLY";
        case Membership::Outside: return "OUTSIDE";
    }
    return "?";
}

namespace {

bool some_n_passes(const NormalizedConfig& cfg, const Subgroup& D, const ResidueVector& a) {
    const Int top = ipow(cfg.p(), cfg.residue_exponent(1));
    for (Int n = 0; n < top; ++n)
        if (omega_contains(cfg, D, a, n)) return true;
    return false;
}

}  // namespace

Membership classify(const NormalizedConfig& cfg, const LocalData& local, const ResidueVector& a) {
    if (static_cast<int>(a.size()) != cfg.m()) fail_validation("residue vector has wrong length");
    for (const auto& C : cyclic_subgroups(cfg.group()))
        if (!some_n_passes(cfg, C, a)) return Membership::Outside;
    for (const auto& v : local.exceptional)
        if (!some_n_passes(cfg, v.D, a)) return Membership::InGOmegaOnly;
    return Membership::InG;
}

bool locally_cyclic(const NormalizedConfig& cfg, const LocalData& local, const Subgroup& H) {
    return noncyclic_places(cfg, local, H).empty();
}

std::vector<Place> noncyclic_places(const NormalizedConfig& cfg, const LocalData& local, const Subgroup& H) {
    if (H.ambient() != cfg.group()) fail_validation("subgroup outside A");
    std::vector<Place> out;
    for (const auto& v : local.exceptional)
        if (!image_is_cyclic(v.D, H)) out.push_back(v);
    return out;
}

}  // namespace multinorm
