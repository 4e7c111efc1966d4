#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "brute.hpp"
#include "multinorm/abelian.hpp"
#include "multinorm/errors.hpp"

using namespace multinorm;

namespace {

PGroup Z4xZ4() { return PGroup(2, {2, 2}); }

// All subgroups via join-closure of cyclic subgroups; empty result if more than `cap`.
std::vector<Subgroup> all_subgroups(const PGroup& A, std::size_t cap) {
    auto cyc = cyclic_subgroups(A);
    std::set<Subgroup> seen(cyc.begin(), cyc.end());
    std::vector<Subgroup> frontier(cyc.begin(), cyc.end());
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const auto& s : frontier)
            for (const auto& c : cyc) {
                if (s.contains(c)) continue;
                auto j = join(s, c);
                if (seen.insert(j).second) next.push_back(j);
                if (seen.size() > cap) return {};
            }
        frontier.swap(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

TEST_CASE("span of generators") {
    auto A = Z4xZ4();
    CHECK(subgroup_from_generators(A, {}).order() == 1);
    CHECK(subgroup_from_generators(A, {{1, 0}, {0, 1}}).order() == 16);
    auto H = subgroup_from_generators(A, {{2, 1}});
    CHECK(brute::as_set(H) == brute::ElementSet{{0, 0}, {2, 1}, {0, 2}, {2, 3}});
    CHECK_THROWS_AS(subgroup_from_generators(A, {{4, 0}}), Error);
}

TEST_CASE("join and intersect on a small example") {
    auto A = Z4xZ4();
    auto H1 = subgroup_from_generators(A, {{0, 1}});
    auto H2 = subgroup_from_generators(A, {{2, 1}});
    auto J = join(H1, H2);
    auto I = intersect(H1, H2);
    CHECK(J.order() == 8);
    CHECK(brute::as_set(J) == brute::span(A, {{0, 1}, {2, 1}}));
    brute::ElementSet both;
    auto s1 = brute::as_set(H1), s2 = brute::as_set(H2);
    std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::inserter(both, both.begin()));
    CHECK(brute::as_set(I) == both);
    CHECK(I == subgroup_from_generators(A, {{0, 2}}));
    CHECK(join(H1, Subgroup::trivial(A)) == H1);
    CHECK(intersect(H1, Subgroup::full(A)) == H1);
}

TEST_CASE("quotient invariants on small examples") {
    auto A = Z4xZ4();
    CHECK(quotient_invariants(A, Subgroup::full(A)).empty());
    CHECK(quotient_invariants(A, Subgroup::trivial(A)) == std::vector<int>{2, 2});
    auto H = subgroup_from_generators(A, {{2, 1}});
    // (1,0) has order 4 modulo <(2,1)> and |A/H| = 4, so the quotient is cyclic
    CHECK(quotient_invariants(A, H) == std::vector<int>{2});
    CHECK(quotient_invariants(A, H) == brute::quotient_census(A, brute::as_set(Subgroup::full(A)), brute::as_set(H)));
    CHECK(quotient_invariants(A, subgroup_from_generators(A, {{2, 2}})) == std::vector<int>{2, 1});
}

TEST_CASE("cyclic image test") {
    auto A = Z4xZ4();
    auto H = subgroup_from_generators(A, {{2, 2}});
    CHECK(image_is_cyclic(Subgroup::trivial(A), H));
    CHECK(image_is_cyclic(subgroup_from_generators(A, {{1, 3}}), H));
    CHECK_FALSE(image_is_cyclic(Subgroup::full(A), H));
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        auto D = subgroup_from_generators(A, {brute::random_element(A, rng)});
        auto K = subgroup_from_generators(A, brute::random_generators(A, rng, 2));
        CHECK(image_is_cyclic(D, K));
    }
}

TEST_CASE("cyclic subgroup enumeration matches element spans") {
    auto count_spans = [](const PGroup& A) {
        std::set<brute::ElementSet> spans;
        for (const auto& g : brute::all_elements(A)) spans.insert(brute::span(A, {g}));
        return spans.size();
    };
    CHECK(cyclic_subgroups(PGroup(2, {1})).size() == 2);
    CHECK(cyclic_subgroups(PGroup(2, {1, 1})).size() == 4);
    // 1 trivial, 3 of order 2, 6 of order 4 (12 elements of order 4, two generators each)
    auto cyc = cyclic_subgroups(Z4xZ4());
    CHECK(cyc.size() == 10);
    std::map<Int, int> by_order;
    for (const auto& c : cyc) by_order[c.order()]++;
    CHECK(by_order == std::map<Int, int>{{1, 1}, {2, 3}, {4, 6}});
    for (const auto& A : brute::groups_up_to(256, {2, 3, 5, 7}))
        CHECK_MESSAGE(cyclic_subgroups(A).size() == count_spans(A), A.describe());
    CHECK_THROWS_AS(cyclic_subgroups(PGroup(2, {5, 5}), 512), Error);
}

TEST_CASE("annihilator under the standard pairing") {
    auto A = Z4xZ4();
    CHECK(annihilator(A, Subgroup::trivial(A)) == Subgroup::full(A));
    CHECK(annihilator(A, Subgroup::full(A)) == Subgroup::trivial(A));
    auto ann = annihilator(A, subgroup_from_generators(A, {{2, 0}}));
    CHECK(ann.order() == 8);
    CHECK(brute::as_set(ann) == brute::span(A, {{2, 0}, {0, 1}}));
    CHECK_THROWS_AS(annihilator(PGroup(2, {2, 1}), Subgroup::trivial(PGroup(2, {2, 1}))), Error);

    std::mt19937_64 rng(11);
    for (const auto& B : {PGroup(2, {2, 2, 2}), PGroup(3, {1, 1, 1}), PGroup(3, {2, 2})}) {
        for (int t = 0; t < 30; ++t) {
            auto gens = brute::random_generators(B, rng, 3);
            auto S = subgroup_from_generators(B, gens);
            brute::ElementSet expect;
            for (const auto& a : brute::all_elements(B)) {
                bool ok = true;
                for (const auto& s : gens) {
                    Int dot = 0;
                    for (int j = 0; j < B.rank(); ++j) dot += a[j] * s[j];
                    ok = ok && dot % B.exponent() == 0;
                }
                if (ok) expect.insert(a);
            }
            CHECK(brute::as_set(annihilator(B, S)) == expect);
            CHECK(annihilator(B, S).order() * S.order() == B.order());
        }
    }
}

TEST_CASE("canonical form is determined by the span") {
    std::mt19937_64 rng(1234);
    for (const auto& A : {PGroup(2, {3, 2, 1}), PGroup(3, {2, 2}), PGroup(2, {2, 2, 2, 2}), PGroup(5, {2, 1})}) {
        std::map<brute::ElementSet, Subgroup> by_span;
        for (int t = 0; t < 300; ++t) {
            auto gens = brute::random_generators(A, rng, 3);
            auto H = subgroup_from_generators(A, gens);
            auto s = brute::span(A, gens);
            REQUIRE(brute::as_set(H) == s);
            CHECK(static_cast<std::size_t>(H.order()) == s.size());
            auto [it, fresh] = by_span.emplace(s, H);
            if (!fresh) CHECK(it->second == H);
            CHECK(subgroup_from_generators(A, H.generators()) == H);
        }
    }
}

TEST_CASE("random lattice laws against enumeration") {
    std::mt19937_64 rng(99);
    for (const auto& A : {PGroup(2, {2, 2, 1}), PGroup(3, {2, 1}), PGroup(2, {3, 3})}) {
        for (int t = 0; t < 100; ++t) {
            auto g1 = brute::random_generators(A, rng, 2), g2 = brute::random_generators(A, rng, 2);
            auto H1 = subgroup_from_generators(A, g1), H2 = subgroup_from_generators(A, g2);
            auto J = join(H1, H2), I = intersect(H1, H2);
            CHECK(H1.contains(I));
            CHECK(J.contains(H1));
            CHECK(J.contains(H2));
            auto s1 = brute::as_set(H1), s2 = brute::as_set(H2);
            brute::ElementSet both;
            std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::inserter(both, both.begin()));
            CHECK(brute::as_set(I) == both);
            auto all = g1;
            all.insert(all.end(), g2.begin(), g2.end());
            CHECK(brute::as_set(J) == brute::span(A, all));
            // modular law with H1 ⊆ H3
            auto H3 = join(H1, subgroup_from_generators(A, brute::random_generators(A, rng, 1)));
            CHECK(join(H1, intersect(H2, H3)) == intersect(join(H1, H2), H3));
            // sub-quotient against the census
            CHECK(quotient_invariants(J, H1) == brute::quotient_census(A, brute::as_set(J), s1));
        }
    }
}

TEST_CASE("order duality and quotient census over small groups") {
    std::size_t exhaustive = 0, sampled = 0;
    std::mt19937_64 rng(5);
    for (const auto& A : brute::groups_up_to(kMaxEnumeratedOrder, {2, 3, 5, 7, 11, 13})) {
        auto subs = all_subgroups(A, 3000);
        if (subs.empty()) {
            ++sampled;
            for (int t = 0; t < 200; ++t) subs.push_back(subgroup_from_generators(A, brute::random_generators(A, rng, 4)));
        } else {
            ++exhaustive;
        }
        const auto whole = brute::as_set(Subgroup::full(A));
        for (const auto& H : subs) {
            auto q = quotient_invariants(A, H);
            int logq = 0;
            for (int e : q) logq += e;
            CHECK(H.order() * ipow(A.prime(), logq) == A.order());
            CHECK(H.order() * H.index() == A.order());
            CHECK(q == brute::quotient_census(A, whole, brute::as_set(H)));
        }
    }
    MESSAGE("groups with every subgroup checked: " << exhaustive << ", sampled: " << sampled);
    CHECK(exhaustive > 40);
}

TEST_CASE("characters and kernels") {
    auto A = Z4xZ4();
    Character chi(A, 2, {1, 2});
    CHECK(chi.surjective());
    CHECK(chi({1, 1}) == 3);
    CHECK(chi.kernel().order() == 4);
    auto half = chi.truncated(1);
    CHECK(half.kernel() == subgroup_from_generators(A, {{2, 0}, {0, 1}}));
    CHECK_FALSE(Character(A, 2, {2, 0}).surjective());
    CHECK(Character(A, 2, {2, 0}).image_exponent() == 1);
    // 1 on Z/2 cannot map to Z/4
    CHECK_THROWS_AS(Character(PGroup(2, {2, 1}), 2, {0, 1}), Error);
    CHECK_NOTHROW(Character(PGroup(2, {2, 1}), 2, {0, 2}));

    std::mt19937_64 rng(3);
    PGroup B(3, {2, 1, 1});
    for (int t = 0; t < 100; ++t) {
        int eps = 1 + static_cast<int>(rng() % 2);
        Vec c(3);
        for (int j = 0; j < 3; ++j) {
            Int step = ipow(3, std::max(0, eps - B.exponents()[j]));
            c[j] = step * static_cast<Int>(rng() % 9);
        }
        Character x(B, eps, c);
        brute::ElementSet ker;
        for (const auto& a : brute::all_elements(B))
            if (x(a) == 0) ker.insert(a);
        CHECK(brute::as_set(x.kernel()) == ker);
        CHECK(x.kernel().index() == ipow(3, x.image_exponent()));
    }
}

TEST_CASE("multi-target kernels") {
    std::mt19937_64 rng(17);
    PGroup A(2, {3, 2, 1});
    for (int t = 0; t < 100; ++t) {
        std::vector<int> targets{1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 2)};
        std::vector<Vec> images(3, Vec(2));
        for (int j = 0; j < 3; ++j)
            for (int s = 0; s < 2; ++s) {
                Int step = ipow(2, std::max(0, targets[s] - A.exponents()[j]));
                images[j][s] = step * static_cast<Int>(rng() % 8);
            }
        auto K = homomorphism_kernel(A, images, targets);
        brute::ElementSet ker;
        for (const auto& a : brute::all_elements(A)) {
            bool zero = true;
            for (int s = 0; s < 2; ++s) {
                Int v = 0;
                for (int j = 0; j < 3; ++j) v += a[j] * images[j][s];
                zero = zero && v % ipow(2, targets[s]) == 0;
            }
            if (zero) ker.insert(a);
        }
        CHECK(brute::as_set(K) == ker);
    }
}

TEST_CASE("group construction errors") {
    CHECK_THROWS_AS(PGroup(4, {1}), Error);
    CHECK_THROWS_AS(PGroup(2, {1, 2}), Error);
    CHECK_THROWS_AS(PGroup(2, {0}), Error);
    CHECK_THROWS_AS(PGroup(2, {21}, kMaxGaloisOrder), Error);
    CHECK(canonical_order({1, 3, 2, 3}) == std::vector<int>{1, 3, 2, 0});
    CHECK_THROWS_AS(join(Subgroup::full(PGroup(2, {1})), Subgroup::full(PGroup(3, {1}))), Error);
}
