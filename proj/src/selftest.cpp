#include "multinorm/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "multinorm/config.hpp"
#include "multinorm/errors.hpp"

namespace multinorm {

int InvariantCounts::total() const {
    return diagonal_chain + delta_bounds + f_chain + g0_structure + aprime + generators + monotonicity + expression +
           shortcuts;
}

namespace {

Int uniform(std::mt19937_64& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

std::vector<int> random_exponents(std::mt19937_64& rng, Int p, Int max_order, Shape shape) {
    int budget = 0;
    for (Int o = p; o <= max_order; o *= p) ++budget;
    while (true) {
        if (shape == Shape::BicyclicSubfields) {
            int n = static_cast<int>(uniform(rng, 1, std::max(1, budget / 2)));
            return {n, n};
        }
        // rank 2 is where most of the structure lives
        static const int ranks[] = {1, 2, 2, 2, 3, 3, 4};
        int rank = ranks[uniform(rng, 0, 6)];
        std::vector<int> e;
        for (int j = 0; j < rank; ++j) e.push_back(static_cast<int>(uniform(rng, 1, 3)));
        std::sort(e.rbegin(), e.rend());
        int sum = 0;
        for (int x : e) sum += x;
        if (sum <= budget) return e;
    }
}

Character random_character(std::mt19937_64& rng, const PGroup& A, int target) {
    const Int p = A.prime();
    std::vector<int> wide;
    for (int j = 0; j < A.rank(); ++j)
        if (A.exponents()[static_cast<std::size_t>(j)] >= target) wide.push_back(j);
    const int unit_at = wide[static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(wide.size()) - 1))];
    const Int q = ipow(p, target);
    Vec c(static_cast<std::size_t>(A.rank()));
    for (int j = 0; j < A.rank(); ++j) {
        const int n = A.exponents()[static_cast<std::size_t>(j)];
        if (j == unit_at) {
            Int u;
            do u = uniform(rng, 1, q - 1);
            while (u % p == 0);
            c[static_cast<std::size_t>(j)] = u;
        } else {
            const int shift = std::max(0, target - n);
            c[static_cast<std::size_t>(j)] = ipow(p, shift) * uniform(rng, 0, ipow(p, target - shift) - 1);
        }
    }
    return Character(A, target, c);
}

bool shape_matches(const NormalizedConfig& cfg, Shape shape) {
    switch (shape) {
        case Shape::Any: return true;
        case Shape::LinearlyDisjoint: return is_linearly_disjoint(cfg);
        case Shape::BicyclicSubfields: return is_bicyclic_subfield_shape(cfg);
    }
    return false;
}

Int vector_count(const NormalizedConfig& cfg) {
    Int total = 1;
    for (int i : cfg.indices()) total *= ipow(cfg.p(), cfg.residue_exponent(i));
    return total;
}

std::string show(const std::vector<int>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t t = 0; t < v.size(); ++t) os << (t ? "," : "") << v[t];
    os << ']';
    return os.str();
}

std::string show(const ResidueVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t t = 0; t < v.size(); ++t) os << (t ? "," : "") << v[t];
    os << ')';
    return os.str();
}

Element random_member(std::mt19937_64& rng, const Subgroup& H) {
    const PGroup& A = H.ambient();
    Element x = A.zero();
    for (const auto& g : H.generators()) x = A.add(x, A.scale(g, uniform(rng, 0, A.exponent() - 1)));
    return x;
}

bool subset(std::vector<std::size_t> a, std::vector<std::size_t> b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Problem random_problem(std::mt19937_64& rng, const SampleOptions& opt, Shape shape) {
    for (int attempt = 0; attempt < 200000; ++attempt) {
        const Int p = opt.primes[static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(opt.primes.size()) - 1))];
        const auto exps = random_exponents(rng, p, opt.max_order, shape);
        Problem pr;
        pr.fields.group = PGroup(p, exps);
        const int count = static_cast<int>(uniform(rng, opt.min_fields, opt.max_fields));
        // Most characters are u·β + p^s·ψ truncated, so the fields share subfields of degree
        // p^s with each other; independent draws almost never do.
        const int top = exps.front();
        const Character beta = random_character(rng, pr.fields.group, top);
        for (int i = 0; i < count; ++i) {
            const int target = shape == Shape::BicyclicSubfields || uniform(rng, 0, 1) == 0
                                   ? top
                                   : static_cast<int>(uniform(rng, 1, top));
            if (uniform(rng, 0, 2) == 0) {
                pr.fields.chars.push_back(random_character(rng, pr.fields.group, target));
            } else {
                const Character psi = random_character(rng, pr.fields.group, top);
                const Int shift = ipow(p, uniform(rng, 1, target));
                Int u;
                do u = uniform(rng, 1, ipow(p, top) - 1);
                while (u % p == 0);
                Vec c;
                for (int j = 0; j < pr.fields.group.rank(); ++j)
                    c.push_back(mod(u * beta.coeffs()[static_cast<std::size_t>(j)] +
                                        shift * psi.coeffs()[static_cast<std::size_t>(j)],
                                    ipow(p, target)));
                pr.fields.chars.emplace_back(pr.fields.group, target, c);
            }
            pr.fields.labels.push_back("K" + std::to_string(i));
        }
        const int places = static_cast<int>(uniform(rng, 0, opt.max_exceptional));
        for (int v = 0; v < places; ++v) {
            std::vector<Element> gens;
            const int k = static_cast<int>(uniform(rng, 1, 2));
            for (int t = 0; t < k; ++t) {
                Element x;
                for (int e : exps) x.push_back(uniform(rng, 0, ipow(p, e) - 1));
                gens.push_back(x);
            }
            pr.local.exceptional.push_back(
                {"v" + std::to_string(v + 1), subgroup_from_generators(pr.fields.group, gens), true});
        }
        try {
            const NormalizedConfig cfg = validate_and_normalize(pr.fields);
            // the drawn count is the count after pruning, so larger configurations are not starved
            if (cfg.m() + 1 != count) continue;
            if (vector_count(cfg) > opt.max_vectors) continue;
            if (!shape_matches(cfg, shape)) continue;
            return pr;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Validation) throw;
        }
    }
    fail_internal("random_problem: no configuration of the requested shape found");
}

CheckOutcome check_problem(const NormalizedConfig& cfg, const LocalData& local, const CheckOptions& opt) {
    CheckOutcome out;
    auto flag = [&](int& counter, const std::string& msg) {
        ++counter;
        out.messages.push_back(msg);
    };

    const CandidateTable table(cfg, local);
    const OracleResult orc = compute_G_and_Gomega(table, opt.oracle);
    out.vectors = orc.visited;
    out.oracle_sha = quotient_by_D(orc.G, orc.D);
    out.oracle_sha_omega = quotient_by_D(orc.G_omega, orc.D);
    out.oracle_quotient = quotient_invariants(orc.G_omega, orc.G);

    StructureOptions sopt;
    sopt.debug_monotonicity = true;
    const StructureResult st = assemble(cfg, local, sopt);
    out.formula_sha = st.sha;
    out.formula_sha_omega = st.sha_omega;
    out.agree = out.formula_sha == out.oracle_sha && out.formula_sha_omega == out.oracle_sha_omega;
    if (!out.agree)
        out.messages.push_back("disagreement: oracle sha " + show(out.oracle_sha) + " sha_omega " +
                               show(out.oracle_sha_omega) + ", formula sha " + show(out.formula_sha) + " sha_omega " +
                               show(out.formula_sha_omega));

    // (a)
    if (!orc.G.contains(orc.D) || !orc.G_omega.contains(orc.G))
        flag(out.violations.diagonal_chain, "D ⊆ G ⊆ G_omega fails");

    // (b)
    for (std::size_t t = 0; t < st.patching.size(); ++t) {
        const Patching& pd = st.patching[t];
        if (!(pd.r <= pd.delta && pd.delta <= pd.delta_omega && pd.delta_omega <= cfg.eps0()))
            flag(out.violations.delta_bounds, "r <= delta <= delta_omega <= eps0 fails at r=" + std::to_string(pd.r));
        if (static_cast<int>(cfg.U(pd.r).size()) == cfg.m() && (pd.delta != cfg.eps0() || pd.delta_omega != cfg.eps0()))
            flag(out.violations.delta_bounds, "U_r = I but delta != eps0");
        if (t + 1 == st.patching.size()) continue;
        const Patching& nx = st.patching[t + 1];
        auto chain = [&](int a, int b, const char* what) {
            if (pd.r == 0 && a != b)
                flag(out.violations.delta_bounds, std::string(what) + "_0 != " + what + "_r'");
            if (a > b) flag(out.violations.delta_bounds, std::string(what) + "_r > " + what + "_r'");
            if (a - pd.r < b - nx.r) flag(out.violations.delta_bounds, std::string(what) + "_r - r < " + what + "_r' - r'");
        };
        chain(pd.delta_omega, nx.delta_omega, "delta_omega");
        chain(pd.delta, nx.delta, "delta");
    }

    // (c) and the M = K_0 K_i expression
    for (std::size_t t = 0; t < st.trees.size(); ++t) {
        const ClassTree& tree = st.trees[t];
        const int r = tree.r;
        const int dw = st.patching[t].delta_omega;
        for (const auto& node : tree.nodes) {
            const int up = node.parent < 0 ? dw : tree.nodes[static_cast<std::size_t>(node.parent)].f_omega;
            if (!(r <= node.f && node.f <= node.f_omega && node.f_omega <= up && up <= dw))
                flag(out.violations.f_chain, "r <= f <= f_omega <= parent <= delta_omega fails at r=" +
                                                 std::to_string(r) + " node " + show(node.members));
            for (int f = r; f <= node.f_omega; ++f) {
                const int g = f + node.level - r;
                const Field M = composite(cfg, node.members, g);
                for (int i : node.members)
                    if (!(M == subfield(cfg, 0, f) * subfield(cfg, i, g)))
                        flag(out.violations.expression, "M_c(" + std::to_string(g) + ") != K_0(" + std::to_string(f) +
                                                            ")K_" + std::to_string(i) + " for node " +
                                                            show(node.members));
            }
        }
    }

    for (const auto& msg : st.monotonicity_violations) flag(out.violations.monotonicity, "monotonicity: " + msg);

    // generator certificates
    {
        std::vector<Element> gw{orc.D.generators().front()}, g{orc.D.generators().front()};
        for (const auto& cert : st.generators) {
            if (!orc.G_omega.contains(cert.omega_vector))
                flag(out.violations.generators, "x_omega " + show(cert.omega_vector) + " not in G_omega");
            if (!orc.G.contains(cert.vector))
                flag(out.violations.generators, "x " + show(cert.vector) + " not in G");
            gw.push_back(cert.omega_vector);
            g.push_back(cert.vector);
        }
        if (!(subgroup_from_generators(orc.ambient, gw) == orc.G_omega))
            flag(out.violations.generators, "D and the x_omega do not span G_omega");
        if (!(subgroup_from_generators(orc.ambient, g) == orc.G))
            flag(out.violations.generators, "D and the x do not span G");
    }

    // (d): G_omega ≅ D ⊕ ⊕_r G̃_omega(K_0, K_{U_r}), likewise for G
    try {
        Int prod_omega = orc.D.order(), prod = orc.D.order();
        for (const auto& pd : st.patching) {
            const auto& Ur = cfg.U(pd.r);
            auto bounded = [&](int delta_r) {
                const Int q = ipow(cfg.p(), cfg.eps0() - delta_r);
                return [&, q, r = pd.r](const ResidueVector& x) {
                    if (r == 0 && x.front() != 0) return false;  // coordinate of K_1, the first index of U_0
                    return std::all_of(x.begin(), x.end(), [q](Int v) { return v % q == 0; });
                };
            };
            prod_omega *= sweep_coordinates(table, Ur, bounded(pd.delta_omega), opt.oracle).G_omega.order();
            prod *= sweep_coordinates(table, Ur, bounded(pd.delta), opt.oracle).G.order();
        }
        if (prod_omega != orc.G_omega.order())
            flag(out.violations.g0_structure, "|G_omega| = " + std::to_string(orc.G_omega.order()) +
                                                  " but |D| prod |G~_omega| = " + std::to_string(prod_omega));
        if (prod != orc.G.order())
            flag(out.violations.g0_structure,
                 "|G| = " + std::to_string(orc.G.order()) + " but |D| prod |G~| = " + std::to_string(prod));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Budget) throw;
        flag(out.violations.g0_structure, std::string("G~ sweep: ") + e.what());
    }

    // (e)
    if (orc.G_omega.order() > orc.D.order()) {
        std::mt19937_64 rng(opt.seed);
        for (int s = 0; s < opt.aprime_samples; ++s) {
            const Element a = random_member(rng, orc.G_omega);
            if (orc.D.contains(a)) continue;
            const ResidueVector b = aprime(table, a);
            if (orc.D.contains(b)) flag(out.violations.aprime, "a' of " + show(a) + " lies in D");
            if (!subset(table.fail_set(b), table.fail_set(a)))
                flag(out.violations.aprime, "fail-set of a' = " + show(b) + " not inside that of " + show(a));
        }
    }

    // closed forms
    if (trivial_criterion(cfg) && (!out.oracle_sha_omega.empty() || !out.formula_sha_omega.empty()))
        flag(out.violations.shortcuts, "trivial criterion holds but sha_omega is non-zero");
    if (auto ld = shortcut_linearly_disjoint(cfg, local)) {
        if (ld->sha != out.oracle_sha || ld->sha_omega != out.oracle_sha_omega)
            flag(out.violations.shortcuts, "linearly disjoint shortcut gives sha " + show(ld->sha) + " sha_omega " +
                                               show(ld->sha_omega));
    }
    if (is_bicyclic_subfield_shape(cfg)) {
        const auto bw = shortcut_bicyclic_subfields(cfg);
        if (bw != out.oracle_sha_omega)
            flag(out.violations.shortcuts, "bicyclic-subfield shortcut gives sha_omega " + show(bw));
    }
    return out;
}

SelftestSummary run_selftest(std::uint64_t seed, int count, const SampleOptions& opt, Shape shape) {
    const auto start = std::chrono::steady_clock::now();
    SelftestSummary sum;
    std::mt19937_64 rng(seed);
    for (int k = 0; k < count; ++k) {
        const Problem pr = random_problem(rng, opt, shape);
        const NormalizedConfig cfg = validate_and_normalize(pr.fields);
        CheckOptions copt;
        copt.seed = rng();
        CheckOutcome res;
        try {
            res = check_problem(cfg, pr.local, copt);
        } catch (const Error& e) {
            res.agree = false;
            res.messages.push_back(std::string("error: ") + e.what());
        }
        ++sum.count;
        if (res.agree) ++sum.agreements;
        if (is_linearly_disjoint(cfg) || is_bicyclic_subfield_shape(cfg)) ++sum.shortcut_instances;
        auto& v = sum.violations;
        const auto& w = res.violations;
        v.diagonal_chain += w.diagonal_chain;
        v.delta_bounds += w.delta_bounds;
        v.f_chain += w.f_chain;
        v.g0_structure += w.g0_structure;
        v.aprime += w.aprime;
        v.generators += w.generators;
        v.monotonicity += w.monotonicity;
        v.expression += w.expression;
        v.shortcuts += w.shortcuts;
        if (!res.messages.empty()) {
            std::string entry = "#" + std::to_string(k) + " " + to_json(to_spec(pr)).dump();
            for (const auto& msg : res.messages) entry += "\n    " + msg;
            sum.failures.push_back(entry);
        }
    }
    sum.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return sum;
}

}  // namespace multinorm
