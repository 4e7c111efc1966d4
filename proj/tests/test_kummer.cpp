#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "multinorm/errors.hpp"
#include "multinorm/examples.hpp"
#include "multinorm/kummer.hpp"

using namespace multinorm;

namespace {

std::vector<Int> primes_below(Int n) {
    std::vector<Int> out;
    for (Int q = 3; q < n; ++q)
        if (is_prime(q)) out.push_back(q);
    return out;
}

// Residues mod N of Z[i]/N as (re, im) pairs.
using Residue = std::pair<Int, Int>;

Residue mul(Residue a, Residue b, Int N) {
    return {mod(a.first * b.first - a.second * b.second, N), mod(a.first * b.second + a.second * b.first, N)};
}

Residue fourth(Residue x, Int N) {
    const Residue s = mul(x, x, N);
    return mul(s, s, N);
}

// i ≡ r mod π for a split prime π = a + bi of norm q: r = −a·b⁻¹ mod q.
Int image_of_i(const Gaussian& pi) {
    const Int q = pi.norm();
    for (Int r = 0; r < q; ++r)
        if (mod(pi.re + pi.im * r, q) == 0 && mod(r * r + 1, q) == 0) return r;
    FAIL("no square root of -1");
    return 0;
}

Gaussian power(Gaussian x, int e) {
    Gaussian r(1);
    for (int t = 0; t < e; ++t) r = r * x;
    return r;
}

}  // namespace

TEST_CASE("Gaussian primes above rational primes") {
    CHECK(primes_above(2) == std::vector<Gaussian>{Gaussian(1, 1)});
    CHECK(primes_above(7) == std::vector<Gaussian>{Gaussian(7)});
    CHECK(primes_above(13) == std::vector<Gaussian>{Gaussian(3, 2), Gaussian(3, -2)});
    CHECK(primes_above(17) == std::vector<Gaussian>{Gaussian(1, 4), Gaussian(1, -4)});
    CHECK(primes_above(409) == std::vector<Gaussian>{Gaussian(3, 20), Gaussian(3, -20)});
    for (Int q : primes_below(200))
        for (const auto& pi : primes_above(q)) {
            CHECK(pi.norm() == (q % 4 == 3 ? q * q : q));
            CHECK(prime_kind(pi) == (q % 4 == 3 ? PrimeKind::Inert : PrimeKind::Split));
        }
    CHECK(prime_kind(Gaussian(1, 1)) == PrimeKind::Ramified);
    CHECK(valuation(Gaussian(4), Gaussian(1, 1)) == 4);
    CHECK(valuation(Gaussian(13 * 13 * 17), Gaussian(3, 2)) == 2);
}

TEST_CASE("split primes below 200: fourth powers against x^4 mod q") {
    for (Int q : primes_below(200)) {
        if (q % 4 != 1) continue;
        std::set<Int> fourth_powers;
        for (Int x = 1; x < q; ++x) fourth_powers.insert(x * x % q * x % q * x % q);
        for (const auto& pi : primes_above(q)) {
            const Int r = image_of_i(pi);
            for (Int re = -12; re <= 12; ++re)
                for (Int im = -12; im <= 12; ++im) {
                    const Gaussian alpha(re, im);
                    const Int residue = mod(re + im * r, q);
                    if (residue == 0) continue;
                    CHECK(is_fourth_power_local(alpha, pi) == (fourth_powers.count(residue) > 0));
                }
            // every residue class of F_q, through rational representatives
            for (Int x = 1; x < q; ++x) CHECK(is_fourth_power_local(Gaussian(x), pi) == (fourth_powers.count(x) > 0));
        }
    }
}

TEST_CASE("inert primes below 200: fourth powers against F_{q^2}") {
    for (Int q : primes_below(200)) {
        if (q % 4 != 3) continue;
        std::set<Residue> fourth_powers;
        for (Int a = 0; a < q; ++a)
            for (Int b = 0; b < q; ++b)
                if (a || b) fourth_powers.insert(fourth({a, b}, q));
        CHECK(fourth_powers.size() == static_cast<std::size_t>((q * q - 1) / 4));
        for (Int a = 0; a < q; ++a)
            for (Int b = 0; b < q; ++b) {
                if (!a && !b) continue;
                CHECK(is_fourth_power_local(Gaussian(a, b), Gaussian(q)) == (fourth_powers.count({a, b}) > 0));
            }
    }
}

TEST_CASE("the prime above 2: every unit residue mod (1+i)^9 against fourth powers mod 2^8") {
    // u is a fourth power iff it is one mod 2^8: v(x^4 − u) ≥ 16 > 9 lets Hensel finish.
    const Int N = 256;
    std::set<Residue> fourth_powers;
    for (Int a = 0; a < N; ++a)
        for (Int b = 0; b < N; ++b)
            if ((a + b) % 2 == 1) fourth_powers.insert(fourth({a, b}, N));
    int yes = 0, no = 0;
    for (Int a = 0; a < 32; ++a)
        for (Int b = 0; b < 32; ++b) {
            if ((a + b) % 2 == 0) continue;
            bool all = true, any = false;
            for (Int s = 0; s < N; s += 32)
                for (Int t = 0; t < N; t += 32) {
                    const bool in = fourth_powers.count({a + s, b + t}) > 0;
                    all = all && in;
                    any = any || in;
                }
            CHECK(all == any);  // the answer depends only on u mod 32
            const bool got = is_fourth_power_2adic_unit(Gaussian(a, b));
            CHECK(got == all);
            CHECK(is_fourth_power_local(Gaussian(a, b), Gaussian(1, 1)) == got);
            (got ? yes : no) += 1;
        }
    // 512 unit classes mod 32, and [Z_2[i]^× : (Z_2[i]^×)^4] = 4^2 · |μ_4| = 64.
    CHECK(yes == 8);
    CHECK(no == 504);
}

TEST_CASE("fourth powers of non-units") {
    for (const auto& pi : {Gaussian(1, 1), Gaussian(3), Gaussian(3, 2), Gaussian(1, 4)}) {
        CHECK(is_fourth_power_local(Gaussian(1), pi));
        CHECK(is_fourth_power_local(power(pi, 4), pi));
        CHECK_FALSE(is_fourth_power_local(pi, pi));
        CHECK_FALSE(is_fourth_power_local(power(pi, 2), pi));
        CHECK(is_fourth_power_local(power(Gaussian(5, 2), 4) * power(pi, 8), pi));
    }
}

TEST_CASE("quoted local facts") {
    CHECK_FALSE(is_fourth_power_local(Gaussian(17), Gaussian(3, 2)));
    CHECK_FALSE(is_fourth_power_local(Gaussian(17), Gaussian(3, -2)));
    for (const auto& pi : primes_above(409)) CHECK(is_fourth_power_local(Gaussian(17), pi));
    for (const auto& pi : primes_above(17)) CHECK(is_fourth_power_local(Gaussian(409), pi));
    CHECK(is_fourth_power_local(Gaussian(17), Gaussian(1, 1)));
    for (const auto& f : quoted_local_facts()) CHECK_MESSAGE(is_fourth_power_local(f.alpha, f.pi) == f.expected, f.statement);
    CHECK_NOTHROW(verify_quoted_local_facts());
}

TEST_CASE("building the 17, 221, 13 configuration") {
    const auto kb = fx::kummer({17, 17 * 13, 13});
    CHECK(kb.generators == std::vector<Int>{17, 13});
    CHECK(kb.problem.fields.group.exponents() == std::vector<int>{2, 2});
    CHECK(kb.exponent_vectors == std::vector<Vec>{{1, 0}, {1, 1}, {0, 1}});
    for (std::size_t i = 0; i < 3; ++i) CHECK(kb.problem.fields.chars[i].coeffs() == kb.exponent_vectors[i]);
    std::vector<std::string> labels;
    for (const auto& v : kb.places) labels.push_back(v.label);
    CHECK(labels == std::vector<std::string>{"v(1+i)", "v(1+4i)", "v(1-4i)", "v(3+2i)", "v(3-2i)"});
}

TEST_CASE("building the 13, 17, 13*17^2 configuration") {
    const auto kb = fx::kummer({13, 17, 13 * 17 * 17});
    CHECK(kb.exponent_vectors == std::vector<Vec>{{1, 0}, {0, 1}, {1, 2}});
    const auto cfg = validate_and_normalize(kb.problem.fields);
    CHECK(cfg.e0(2) == 1);
}

TEST_CASE("even powers give quadratic characters") {
    const auto kb = fx::kummer({17, 17 * 17 * 13 * 13, 13});
    CHECK(kb.problem.fields.chars[1].target() == 1);
    CHECK(kb.problem.fields.chars[1].coeffs() == Vec{1, 1});
}

TEST_CASE("rejected radicand lists") {
    auto kind_of = [](std::vector<Int> r) {
        try {
            fx::kummer(std::move(r));
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Internal;
    };
    CHECK(kind_of({17}) == ErrorKind::Validation);
    CHECK(kind_of({17, 13}) == ErrorKind::Validation);
    CHECK(kind_of({17, 26, 13}) == ErrorKind::Validation);      // even
    CHECK(kind_of({17, -13, 13 * 17}) == ErrorKind::Validation);  // negative
    CHECK(kind_of({17, 1, 13}) == ErrorKind::Validation);
    CHECK(kind_of({17, 81, 13}) == ErrorKind::Validation);      // a fourth power
    CHECK(kind_of({17, 17 * 17 * 17 * 17 * 17, 13}) == ErrorKind::Validation);  // same field as 17
    CHECK(kind_of({3, 5, 7, 11, 13}) == ErrorKind::Budget);
}

TEST_CASE("K_v of every built place agrees with the local test on all radicand products") {
    for (const auto& radicands : std::vector<std::vector<Int>>{{17, 221, 13}, {17, 6953, 409}, {13, 17, 3757}, {5, 3, 15}, {7, 3, 21}}) {
        const auto kb = fx::kummer(radicands);
        const PGroup& A = kb.problem.fields.group;
        for (const auto& v : kb.places)
            for (const auto& m : Subgroup::full(A).elements()) {
                Gaussian alpha(1);
                for (std::size_t j = 0; j < m.size(); ++j) alpha = alpha * power(Gaussian(kb.generators[j]), static_cast<int>(m[j]));
                CHECK_MESSAGE(v.K_v.contains(m) == is_fourth_power_local(alpha, v.pi), v.label);
            }
    }
}

TEST_CASE("decomposition groups at unramified primes are cyclic") {
    const auto kb = fx::kummer({17, 221, 13});
    const PGroup& A = kb.problem.fields.group;
    for (Int q : primes_below(120)) {
        if (q == 13 || q == 17) continue;
        for (const auto& pi : primes_above(q)) {
            std::vector<Element> K;
            for (const auto& m : Subgroup::full(A).elements()) {
                Gaussian alpha(1);
                for (std::size_t j = 0; j < m.size(); ++j) alpha = alpha * power(Gaussian(kb.generators[j]), static_cast<int>(m[j]));
                if (is_fourth_power_local(alpha, pi)) K.push_back(m);
            }
            const Subgroup Kv = subgroup_from_generators(A, K);
            CHECK(static_cast<std::size_t>(Kv.order()) == K.size());  // a subgroup already
            const Subgroup D = annihilator(A, Kv);
            CHECK_MESSAGE(quotient_invariants(D, Subgroup::trivial(A)).size() <= 1, pi.describe());
        }
    }
}

TEST_CASE("built decomposition groups are annihilators of K_v") {
    const auto kb = fx::kummer({17, 221, 13});
    for (std::size_t v = 0; v < kb.places.size(); ++v)
        CHECK(kb.problem.local.exceptional[v].D == annihilator(kb.problem.fields.group, kb.places[v].K_v));
    // ramified at 13: D has rank 2
    CHECK(quotient_invariants(kb.problem.local.exceptional[3].D, Subgroup::trivial(kb.problem.fields.group)) ==
          std::vector<int>{2, 1});
}
