#include "multinorm/oracle.hpp"

#include <algorithm>
#include <set>

#include "multinorm/errors.hpp"

namespace multinorm {

namespace {

bool dominated(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t t = 0; t < a.size(); ++t)
        if (a[t] > b[t]) return false;
    return true;
}

// One congruence system, pre-digested for the inner loop.
struct Test {
    std::vector<Int> q;  // p^{σ_t}
    std::size_t pivot = 0;

    bool passes(const ResidueVector& x) const {
        const Int ref = x[pivot];
        for (std::size_t t = 0; t < q.size(); ++t)
            if ((x[t] - ref) % q[t] != 0) return false;
        return true;
    }
};

Test make_test(Int p, const std::vector<int>& sigma) {
    Test t;
    for (int s : sigma) t.q.push_back(ipow(p, s));
    t.pivot = static_cast<std::size_t>(std::max_element(sigma.begin(), sigma.end()) - sigma.begin());
    return t;
}

// Maximal threshold vectors over the chosen coordinates: generic ones, then exceptional
// ones not already implied by a generic one.
std::pair<std::vector<Test>, std::vector<Test>> reduced_tests(const CandidateTable& table,
                                                              const std::vector<int>& coords) {
    std::set<std::vector<int>> generic, exceptional;
    for (const auto& c : table.candidates()) {
        std::vector<int> s;
        for (int i : coords) s.push_back(c.threshold[static_cast<std::size_t>(i - 1)]);
        if (std::all_of(s.begin(), s.end(), [](int v) { return v == 0; })) continue;
        (c.exceptional ? exceptional : generic).insert(s);
    }
    auto maximal = [](const std::set<std::vector<int>>& pool, const std::set<std::vector<int>>& above) {
        std::vector<std::vector<int>> out;
        for (const auto& s : pool) {
            bool drop = false;
            for (const auto& t : pool)
                if (t != s && dominated(s, t)) drop = true;
            for (const auto& t : above)
                if (dominated(s, t)) drop = true;
            if (!drop) out.push_back(s);
        }
        return out;
    };
    const Int p = table.config().p();
    std::vector<Test> g, e;
    for (const auto& s : maximal(generic, {})) g.push_back(make_test(p, s));
    for (const auto& s : maximal(exceptional, generic)) e.push_back(make_test(p, s));
    return {g, e};
}

}  // namespace

CandidateTable::CandidateTable(const NormalizedConfig& cfg, const LocalData& local, Int cyclic_budget) : cfg_(&cfg) {
    local.validate(cfg.group());
    auto threshold = [&](const Subgroup& D) {
        std::vector<int> s;
        for (int i = 1; i <= cfg.m(); ++i) {
            s.push_back(sigma_threshold(cfg, D, i));
            require(s.back() <= cfg.residue_exponent(i), "sigma threshold exceeds e_i");
        }
        return s;
    };
    auto cyc = cyclic_subgroups(cfg.group(), cyclic_budget);
    std::stable_sort(cyc.begin(), cyc.end(), [](const Subgroup& a, const Subgroup& b) { return a.order() > b.order(); });
    for (const auto& C : cyc) all_.push_back({"cyclic " + C.describe(), C, false, threshold(C)});
    for (const auto& v : local.exceptional) all_.push_back({v.label, v.D, true, threshold(v.D)});
}

bool congruences_solvable(Int p, const std::vector<int>& sigma, const ResidueVector& x) {
    return make_test(p, sigma).passes(x);
}

std::vector<std::size_t> CandidateTable::fail_set(const ResidueVector& a) const {
    if (static_cast<int>(a.size()) != cfg_->m()) fail_validation("residue vector has wrong length");
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < all_.size(); ++c)
        if (!congruences_solvable(cfg_->p(), all_[c].threshold, a)) out.push_back(c);
    return out;
}

Membership CandidateTable::classify(const ResidueVector& a) const {
    bool exceptional_failure = false;
    for (std::size_t c : fail_set(a)) {
        if (!all_[c].exceptional) return Membership::Outside;
        exceptional_failure = true;
    }
    return exceptional_failure ? Membership::InGOmegaOnly : Membership::InG;
}

Membership CandidateTable::classify_literal(const ResidueVector& a) const {
    if (static_cast<int>(a.size()) != cfg_->m()) fail_validation("residue vector has wrong length");
    const Int top = ipow(cfg_->p(), cfg_->eps0());
    auto passes = [&](const Subgroup& D) {
        for (Int n = 0; n < top; ++n)
            if (omega_contains(*cfg_, D, a, n)) return true;
        return false;
    };
    bool exceptional_failure = false;
    for (const auto& c : all_) {
        if (passes(c.D)) continue;
        if (!c.exceptional) return Membership::Outside;
        exceptional_failure = true;
    }
    return exceptional_failure ? Membership::InGOmegaOnly : Membership::InG;
}

PGroup residue_group(const NormalizedConfig& cfg, const std::vector<int>& coords) {
    std::vector<int> e;
    for (int i : coords) e.push_back(cfg.residue_exponent(i));
    return PGroup(cfg.p(), e);
}

Subgroup diagonal(const PGroup& ambient) {
    return subgroup_from_generators(ambient, {ambient.reduce(Vec(static_cast<std::size_t>(ambient.rank()), 1))});
}

OracleResult sweep_coordinates(const CandidateTable& table, const std::vector<int>& coords,
                               const std::function<bool(const ResidueVector&)>& keep, const OracleOptions& opt) {
    const NormalizedConfig& cfg = table.config();
    if (coords.empty() || !std::is_sorted(coords.begin(), coords.end())) fail_validation("coordinates must be ascending");
    Int total = 1;
    for (int i : coords) {
        const Int m = ipow(cfg.p(), cfg.residue_exponent(i));
        if (total > opt.budget / m) fail_budget("oracle sweep needs more than " + std::to_string(opt.budget) + " vectors");
        total *= m;
    }
    OracleResult res;
    res.coords = coords;
    res.ambient = residue_group(cfg, coords);
    res.D = diagonal(res.ambient);
    res.G = res.G_omega = Subgroup::trivial(res.ambient);
    const auto [generic, exceptional] = reduced_tests(table, coords);
    const bool literal = opt.literal;
    if (literal && coords != cfg.indices()) fail_validation("literal classification needs every coordinate");

    const std::size_t k = coords.size();
    ResidueVector x(k, 0);
    while (true) {
        ++res.visited;
        if (!keep || keep(x)) {
            bool in_omega, in_g;
            if (literal) {
                const Membership mb = table.classify_literal(x);
                in_omega = mb != Membership::Outside;
                in_g = mb == Membership::InG;
            } else {
                in_omega = std::all_of(generic.begin(), generic.end(), [&](const Test& t) { return t.passes(x); });
                in_g = in_omega &&
                       std::all_of(exceptional.begin(), exceptional.end(), [&](const Test& t) { return t.passes(x); });
            }
            if (in_omega) {
                ++res.in_g_omega;
                if (!res.G_omega.contains(x)) res.G_omega = join(res.G_omega, subgroup_from_generators(res.ambient, {x}));
                if (in_g) {
                    ++res.in_g;
                    if (!res.G.contains(x)) res.G = join(res.G, subgroup_from_generators(res.ambient, {x}));
                }
            }
        }
        std::size_t t = 0;
        while (t < k && ++x[t] == res.ambient.modulus(static_cast<int>(t))) x[t++] = 0;
        if (t == k) break;
    }
    if (res.G_omega.order() != res.in_g_omega) fail_internal("G_omega is not closed under addition");
    if (res.G.order() != res.in_g) fail_internal("G is not closed under addition");
    if (!res.G_omega.contains(res.G)) fail_internal("G is not contained in G_omega");
    return res;
}

OracleResult compute_G_and_Gomega(const CandidateTable& table, const OracleOptions& opt) {
    auto res = sweep_coordinates(table, table.config().indices(), {}, opt);
    if (!res.G.contains(res.D)) fail_internal("diagonal is not contained in G");
    return res;
}

OracleResult compute_G_and_Gomega(const NormalizedConfig& cfg, const LocalData& local, const OracleOptions& opt) {
    CandidateTable table(cfg, local);
    return compute_G_and_Gomega(table, opt);
}

std::vector<int> quotient_by_D(const Subgroup& group, const Subgroup& D) {
    if (!group.contains(D)) fail_internal("quotient_by_D: the diagonal is not contained in the group");
    return quotient_invariants(group, D);
}

ResidueVector aprime(const CandidateTable& table, const ResidueVector& a) {
    const NormalizedConfig& cfg = table.config();
    const Int p = cfg.p();
    const int m = cfg.m();
    if (static_cast<int>(a.size()) != m) fail_validation("residue vector has wrong length");
    auto e = [&](int i) { return cfg.residue_exponent(i); };
    auto at = [&](int i) { return a[static_cast<std::size_t>(i - 1)]; };
    if (table.classify(a) == Membership::Outside) fail_validation("aprime: vector is not in G_omega");
    // δ(a_1, a_i) over i ∉ I_{a_1}(a)
    int low = -1, j = -1;
    for (int i = 1; i <= m; ++i) {
        const int d = delta(p, at(1), e(1), at(i), e(i));
        if (d == e(i)) continue;
        if (low < 0 || d < low) low = d, j = i;
    }
    if (j < 0) fail_validation("aprime: vector lies in the diagonal");
    ResidueVector out(a.size());
    for (int i = 1; i <= m; ++i) {
        const int d = delta(p, at(1), e(1), at(i), e(i));
        const Int src = (d != e(i) && d == low) ? at(j) : at(1);
        out[static_cast<std::size_t>(i - 1)] = mod(src, ipow(p, e(i)));
    }
    return out;
}

ResidueVector varpi_r(const NormalizedConfig& cfg, const ResidueVector& a, int r) {
    ResidueVector out;
    for (int i : cfg.U(r)) out.push_back(a[static_cast<std::size_t>(i - 1)]);
    return out;
}

}  // namespace multinorm
