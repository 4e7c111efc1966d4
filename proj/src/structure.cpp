#include "multinorm/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "multinorm/errors.hpp"

namespace multinorm {

namespace {

// Largest v in [low, high] with pred(v), scanning down. Returns low - 1 if none.
int scan_down(int high, int low, const std::function<bool(int)>& pred, const std::string& name,
              StructureResult* trace) {
    int found = low - 1;
    for (int v = high; v >= low; --v)
        if (pred(v)) {
            found = v;
            break;
        }
    if (trace && found >= low)
        for (int v = found - 1; v >= low; --v)
            if (!pred(v))
                trace->monotonicity_violations.push_back(name + ": admissible at " + std::to_string(found) +
                                                         " but not at " + std::to_string(v));
    return found;
}

StructureResult* debug_trace(StructureResult* trace, bool on) { return on ? trace : nullptr; }

Field meet_of_pairs(const NormalizedConfig& cfg, const std::vector<int>& idx, int d) {
    Field acc = subfield(cfg, 0, d) * subfield(cfg, idx.front(), d);
    for (int i : idx) acc = acc.meet(subfield(cfg, 0, d) * subfield(cfg, i, d));
    return acc;
}

std::vector<std::vector<int>> components(const NormalizedConfig& cfg, const std::vector<int>& C, int l) {
    std::vector<int> parent(C.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t a = 0; a < C.size(); ++a)
        for (std::size_t b = a + 1; b < C.size(); ++b)
            if (cfg.e(C[a], C[b]) >= l) parent[find(static_cast<int>(a))] = find(static_cast<int>(b));
    std::vector<std::vector<int>> out;
    std::vector<int> slot(C.size(), -1);
    for (std::size_t a = 0; a < C.size(); ++a) {
        int root = find(static_cast<int>(a));
        if (slot[root] < 0) {
            slot[root] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[slot[root]].push_back(C[a]);
    }
    for (auto& c : out) {
        std::sort(c.begin(), c.end());
        // ~_l must already be transitive on each component
        for (int i : c)
            for (int j : c)
                if (i != j) require(cfg.e(i, j) >= l, "l-equivalence is not transitive");
    }
    std::sort(out.begin(), out.end());
    return out;
}

int min_eps(const NormalizedConfig& cfg, const std::vector<int>& c) {
    int m = cfg.eps(c.front());
    for (int i : c) m = std::min(m, cfg.eps(i));
    return m;
}

int level_of(const NormalizedConfig& cfg, const std::vector<int>& c) {
    if (c.size() == 1) return cfg.eps(c.front());
    int l = cfg.e(c[0], c[1]);
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b) l = std::min(l, cfg.e(c[a], c[b]));
    return l;
}

}  // namespace

LevelInfo level_and_classes(const NormalizedConfig& cfg, const std::vector<int>& C) {
    if (C.empty()) fail_validation("level of an empty class");
    std::vector<int> sorted = C;
    std::sort(sorted.begin(), sorted.end());
    LevelInfo info;
    info.level = level_of(cfg, sorted);
    int top = cfg.eps0();
    for (int i : sorted) top = std::max(top, cfg.eps(i));
    for (int l = 0; l <= top; ++l) info.classes.push_back(components(cfg, sorted, l));
    return info;
}

int delta_omega(const NormalizedConfig& cfg, int r, StructureResult* trace) {
    const auto& Ur = cfg.U(r);
    if (static_cast<int>(Ur.size()) == cfg.m()) return cfg.eps0();
    const auto above = cfg.U_above(r), below = cfg.U_below(r);
    auto ok = [&](int d) {
        if (!above.empty() && !composite(cfg, above, d).within(meet_of_pairs(cfg, Ur, d))) return false;
        if (!below.empty() && !composite(cfg, Ur, d).within(meet_of_pairs(cfg, below, d))) return false;
        return true;
    };
    int d = scan_down(cfg.eps0(), 0, ok, "delta_omega(r=" + std::to_string(r) + ")", trace);
    require(d >= r, "delta_omega below r");
    return d;
}

int delta(const NormalizedConfig& cfg, const LocalData& local, int r, StructureResult* trace) {
    const auto& Ur = cfg.U(r);
    if (static_cast<int>(Ur.size()) == cfg.m()) return cfg.eps0();
    const int bound = delta_omega(cfg, r);
    const auto above = cfg.U_above(r), below = cfg.U_below(r);
    auto ok = [&](int d) {
        const Field k0 = subfield(cfg, 0, d);
        if (!above.empty() && !locally_cyclic(cfg, local, (k0 * composite(cfg, above, d)).fixer())) return false;
        if (!below.empty() && !locally_cyclic(cfg, local, (k0 * composite(cfg, Ur, d)).fixer())) return false;
        return true;
    };
    int d = scan_down(bound, 0, ok, "delta(r=" + std::to_string(r) + ")", trace);
    require(d >= r, "delta below r");
    return d;
}

int f_omega(const NormalizedConfig& cfg, int r, const std::vector<int>& c, int level, int bound) {
    const int cap = min_eps(cfg, c);
    auto ok = [&](int f) {
        const int g = f + level - r;
        if (g < 0 || g > cap || f > cfg.eps0()) return false;
        const Field M = composite(cfg, c, g);
        if (M.galois_invariants().size() > 2) return false;
        return subfield(cfg, 0, f).within(M);
    };
    int f = scan_down(bound, 0, ok, "f_omega", nullptr);
    require(f >= std::min(r, bound), "f_omega: f = r must be admissible");
    return f;
}

int f_ordinary(const NormalizedConfig& cfg, const LocalData& local, int r, const std::vector<int>& c, int level,
               int f_omega_c) {
    auto ok = [&](int f) {
        const int g = f + level - r;
        if (g < 0) return true;
        return locally_cyclic(cfg, local, composite(cfg, c, g).fixer());
    };
    return scan_down(f_omega_c, 0, ok, "f", nullptr);
}

ClassTree class_tree(const NormalizedConfig& cfg, const LocalData& local, int r, int delta_omega_r,
                     StructureResult* trace) {
    ClassTree tree;
    tree.r = r;
    std::function<int(const std::vector<int>&, int, int)> build = [&](const std::vector<int>& c, int parent,
                                                                       int bound) {
        ClassNode node;
        node.members = c;
        node.parent = parent;
        node.level = level_of(cfg, c);
        node.f_omega = f_omega(cfg, r, c, node.level, bound);
        node.f = f_ordinary(cfg, local, r, c, node.level, node.f_omega);
        if (trace) {
            const int cap = min_eps(cfg, c);
            for (int f = node.f_omega - 1; f >= 0; --f) {
                const int g = f + node.level - r;
                if (g < 0 || g > cap) continue;
                const Field M = composite(cfg, c, g);
                if (M.galois_invariants().size() > 2 || !subfield(cfg, 0, f).within(M))
                    trace->monotonicity_violations.push_back("f_omega: admissible at " + std::to_string(node.f_omega) +
                                                             " but not at " + std::to_string(f));
            }
            for (int f = node.f - 1; f >= 0; --f) {
                const int g = f + node.level - r;
                if (g >= 0 && !locally_cyclic(cfg, local, composite(cfg, c, g).fixer()))
                    trace->monotonicity_violations.push_back("f: admissible at " + std::to_string(node.f) +
                                                             " but not at " + std::to_string(f));
            }
        }
        const int id = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back(node);
        if (c.size() > 1) {
            auto kids = components(cfg, c, tree.nodes[id].level + 1);
            require(kids.size() > 1, "class does not split at its level");
            tree.nodes[id].splits = static_cast<int>(kids.size());
            const int fw = tree.nodes[id].f_omega;
            for (const auto& kid : kids) {
                int child = build(kid, id, fw);
                tree.nodes[id].children.push_back(child);
                // every child except the one holding the node's smallest index gets a generator
                if (kid.front() != c.front()) tree.nodes[id].chosen.push_back(child);
            }
        }
        return id;
    };
    build(cfg.U(r), -1, delta_omega_r);
    return tree;
}

StructureResult assemble(const NormalizedConfig& cfg, const LocalData& local, const StructureOptions& opt) {
    StructureResult res;
    StructureResult* trace = debug_trace(&res, opt.debug_monotonicity);
    const Int p = cfg.p();
    const int m = cfg.m();
    auto embed = [&](const std::vector<int>& support, int exponent) {
        ResidueVector v(static_cast<std::size_t>(m), 0);
        for (int i : support) v[static_cast<std::size_t>(i - 1)] = mod(ipow(p, exponent), ipow(p, cfg.residue_exponent(i)));
        return v;
    };
    for (int r : cfg.R()) {
        Patching pd{r, delta_omega(cfg, r, trace), delta(cfg, local, r, trace)};
        res.patching.push_back(pd);
        if (r > 0) {
            res.sha_omega.push_back(pd.delta_omega - r);
            res.sha.push_back(pd.delta - r);
            res.quotient_annotation.push_back(pd.delta_omega - pd.delta);
            res.generators.push_back(
                {r, -1, cfg.U(r), embed(cfg.U(r), cfg.eps0() - pd.delta_omega), embed(cfg.U(r), cfg.eps0() - pd.delta)});
        }
        ClassTree tree = class_tree(cfg, local, r, pd.delta_omega, trace);
        for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
            const auto& node = tree.nodes[id];
            if (node.children.empty()) continue;
            for (int child : node.chosen) {
                const auto& c1 = tree.nodes[static_cast<std::size_t>(child)].members;
                res.sha_omega.push_back(node.f_omega - r);
                res.sha.push_back(node.f - r);
                res.quotient_annotation.push_back(node.f_omega - node.f);
                res.generators.push_back({r, static_cast<int>(id), c1, embed(c1, cfg.eps0() - node.f_omega),
                                          embed(c1, cfg.eps0() - node.f)});
            }
        }
        res.trees.push_back(std::move(tree));
    }
    for (auto* list : {&res.sha, &res.sha_omega, &res.quotient_annotation}) {
        std::erase_if(*list, [](int e) { return e <= 0; });
        std::sort(list->rbegin(), list->rend());
    }
    return res;
}

bool trivial_criterion(const NormalizedConfig& cfg) {
    Subgroup acc = Subgroup::trivial(cfg.group());
    for (int i : cfg.U(0)) acc = join(acc, intersect(cfg.kernel(0), cfg.kernel(i)));
    return acc == cfg.kernel(0);
}

bool is_linearly_disjoint(const NormalizedConfig& cfg) {
    for (int i = 0; i <= cfg.m(); ++i)
        for (int j = i + 1; j <= cfg.m(); ++j)
            if (cfg.e(i, j) != 0) return false;
    return true;
}

std::optional<ShaPair> shortcut_linearly_disjoint(const NormalizedConfig& cfg, const LocalData& local) {
    if (!is_linearly_disjoint(cfg)) return std::nullopt;
    std::vector<int> all(static_cast<std::size_t>(cfg.m()) + 1);
    std::iota(all.begin(), all.end(), 0);
    int f = 0;
    for (int d = cfg.eps0(); d >= 0; --d)
        if (composite(cfg, all, d).galois_invariants().size() <= 2) {
            f = d;
            break;
        }
    int f2 = 0;
    for (int d = f; d >= 0; --d)
        if (locally_cyclic(cfg, local, composite(cfg, all, d).fixer())) {
            f2 = d;
            break;
        }
    ShaPair out;
    if (f > 0) out.sha_omega.assign(static_cast<std::size_t>(cfg.m() - 1), f);
    if (f2 > 0) out.sha.assign(static_cast<std::size_t>(cfg.m() - 1), f2);
    return out;
}

bool is_bicyclic_subfield_shape(const NormalizedConfig& cfg) {
    Subgroup fix = Subgroup::full(cfg.group());
    for (int i = 0; i <= cfg.m(); ++i) {
        if (cfg.eps(i) != cfg.eps0()) return false;
        fix = intersect(fix, cfg.kernel(i));
    }
    return quotient_invariants(cfg.group(), fix).size() <= 2;
}

std::vector<int> shortcut_bicyclic_subfields(const NormalizedConfig& cfg) {
    if (!is_bicyclic_subfield_shape(cfg))
        fail_validation("bicyclic-subfield shortcut needs equal degrees and a compositum of rank at most 2");
    const int n = cfg.eps0();
    std::vector<int> out;
    for (int r : cfg.R()) {
        if (r > 0) out.push_back(n - r);
        std::function<void(const std::vector<int>&)> walk = [&](const std::vector<int>& c) {
            if (c.size() < 2) return;
            const int l = level_of(cfg, c);
            auto kids = components(cfg, c, l + 1);
            for (std::size_t t = 1; t < kids.size(); ++t) out.push_back(n - l);
            for (const auto& kid : kids) walk(kid);
        };
        walk(cfg.U(r));
    }
    std::erase_if(out, [](int e) { return e <= 0; });
    std::sort(out.rbegin(), out.rend());
    return out;
}

}  // namespace multinorm
