#include "multinorm/kummer.hpp"

#include <algorithm>
#include <set>

#include "multinorm/errors.hpp"

namespace multinorm {

namespace {

using I128 = __int128;

Int narrow(I128 x) {
    if (x > INT64_MAX || x < INT64_MIN) fail_validation("Gaussian integer arithmetic overflows 64 bits");
    return static_cast<Int>(x);
}

Int mulmod(Int a, Int b, Int m) { return static_cast<Int>(static_cast<I128>(mod(a, m)) * mod(b, m) % m); }

Int powmod(Int a, Int e, Int m) {
    Int r = 1 % m;
    a = mod(a, m);
    for (; e > 0; e >>= 1) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
    }
    return r;
}

// F_{q^2} = F_q[i] for q ≡ 3 mod 4.
struct Fq2 {
    Int a, b;
};

Fq2 mul(Fq2 x, Fq2 y, Int q) {
    return {mod(mulmod(x.a, y.a, q) - mulmod(x.b, y.b, q), q), mod(mulmod(x.a, y.b, q) + mulmod(x.b, y.a, q), q)};
}

Fq2 pow(Fq2 x, Int e, Int q) {
    Fq2 r{1, 0};
    for (; e > 0; e >>= 1) {
        if (e & 1) r = mul(r, x, q);
        x = mul(x, x, q);
    }
    return r;
}

Int v2(Int x) {
    int v = 0;
    while (x % 2 == 0) x /= 2, ++v;
    return v;
}

Int inverse_mod_prime(Int a, Int p) { return powmod(a, p - 2, p); }

// Image of i in Z[i]/π ≅ F_p for split π = a + bi: i ≡ −a/b.
Int image_of_i(const Gaussian& pi) {
    const Int p = pi.norm();
    return mod(-mulmod(pi.re, inverse_mod_prime(pi.im, p), p), p);
}

}  // namespace

Int Gaussian::norm() const { return narrow(static_cast<I128>(re) * re + static_cast<I128>(im) * im); }

std::string Gaussian::describe() const {
    if (im == 0) return std::to_string(re);
    std::string s = re != 0 ? std::to_string(re) : "";
    const Int a = im < 0 ? -im : im;
    s += im < 0 ? "-" : (re != 0 ? "+" : "");
    if (a != 1) s += std::to_string(a);
    return s + "i";
}

Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {narrow(static_cast<I128>(a.re) * b.re - static_cast<I128>(a.im) * b.im),
            narrow(static_cast<I128>(a.re) * b.im + static_cast<I128>(a.im) * b.re)};
}

Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }

bool divides(const Gaussian& b, const Gaussian& a) {
    const I128 n = b.norm();
    if (n == 0) fail_validation("division by zero Gaussian integer");
    const I128 x = static_cast<I128>(a.re) * b.re + static_cast<I128>(a.im) * b.im;
    const I128 y = static_cast<I128>(a.im) * b.re - static_cast<I128>(a.re) * b.im;
    return x % n == 0 && y % n == 0;
}

Gaussian exact_quotient(const Gaussian& a, const Gaussian& b) {
    if (!divides(b, a)) fail_internal("exact_quotient: " + b.describe() + " does not divide " + a.describe());
    const I128 n = b.norm();
    return {narrow((static_cast<I128>(a.re) * b.re + static_cast<I128>(a.im) * b.im) / n),
            narrow((static_cast<I128>(a.im) * b.re - static_cast<I128>(a.re) * b.im) / n)};
}

std::vector<Gaussian> primes_above(Int q) {
    if (!is_prime(q)) fail_validation(std::to_string(q) + " is not a rational prime");
    if (q == 2) return {Gaussian(1, 1)};
    if (q % 4 == 3) return {Gaussian(q)};
    for (Int b = 2; b * b < q; b += 2) {
        const Int a2 = q - b * b;
        Int a = 1;
        while ((a + 2) * (a + 2) <= a2) a += 2;
        if (a * a == a2) return {Gaussian(a, b), Gaussian(a, -b)};
    }
    fail_internal("no two-square decomposition of " + std::to_string(q));
}

PrimeKind prime_kind(const Gaussian& pi) {
    const Int n = pi.norm();
    if (n == 2) return PrimeKind::Ramified;
    if (is_prime(n) && n % 4 == 1) return PrimeKind::Split;
    if (pi.re == 0 || pi.im == 0) {
        const Int q = std::abs(pi.re + pi.im);
        if (is_prime(q) && q % 4 == 3) return PrimeKind::Inert;
    }
    fail_validation(pi.describe() + " is not a Gaussian prime");
}

int valuation(const Gaussian& alpha, const Gaussian& pi) {
    if (alpha.re == 0 && alpha.im == 0) fail_validation("valuation of zero");
    prime_kind(pi);
    int v = 0;
    Gaussian x = alpha;
    while (divides(pi, x)) x = exact_quotient(x, pi), ++v;
    return v;
}

bool is_fourth_power_2adic_unit(const Gaussian& u0) {
    const Gaussian u(mod(u0.re, 32), mod(u0.im, 32));
    if ((u.re + u.im) % 2 == 0) fail_validation("is_fourth_power_2adic_unit: " + u0.describe() + " is not a unit");
    for (Int a = 0; a < 32; ++a)
        for (Int b = 0; b < 16; ++b) {
            if ((a + b) % 2 == 0) continue;
            const Gaussian x(a, b), x2 = x * x;
            const Gaussian t = x2 * x2 - u;
            if (t.re == 0 && t.im == 0) return true;
            if (v2(t.norm()) >= 9) return true;  // v_{1+i}(t) = v_2(N t)
        }
    return false;
}

bool is_fourth_power_local(const Gaussian& alpha, const Gaussian& pi) {
    const PrimeKind kind = prime_kind(pi);
    const int v = valuation(alpha, pi);
    if (v % 4 != 0) return false;
    Gaussian u = alpha;
    for (int t = 0; t < v; ++t) u = exact_quotient(u, pi);
    switch (kind) {
        case PrimeKind::Split: {
            const Int p = pi.norm();
            const Int r = mod(u.re + mulmod(u.im, image_of_i(pi), p), p);
            return powmod(r, (p - 1) / 4, p) == 1;
        }
        case PrimeKind::Inert: {
            const Int q = std::abs(pi.re + pi.im);
            const Fq2 s = pow({mod(u.re, q), mod(u.im, q)}, (q * q - 1) / 4, q);
            return s.a == 1 && s.b == 0;
        }
        case PrimeKind::Ramified: return is_fourth_power_2adic_unit(u);
    }
    return false;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n < 1) fail_validation("factorize: non-positive input");
    std::vector<std::pair<Int, int>> out;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) n /= d, ++e;
        out.push_back({d, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

namespace {

inline constexpr Int kMaxRadicand = Int{1000000000000};

// K_v at an odd place: the kernel of m ↦ (Σ m_j v_π(q_j), Σ m_j s_j) in (Z/4)^2, where
// i^{s_j} is the quartic residue symbol of the unit part of q_j.
Subgroup odd_fourth_powers(const PGroup& B, const std::vector<Int>& gens, const Gaussian& pi) {
    const PrimeKind kind = prime_kind(pi);
    std::vector<Vec> images;
    for (Int q : gens) {
        const int v = valuation(Gaussian(q), pi);
        Gaussian u(q);
        for (int t = 0; t < v; ++t) u = exact_quotient(u, pi);
        int s = -1;
        if (kind == PrimeKind::Split) {
            const Int p = pi.norm();
            const Int rho = image_of_i(pi);
            const Int sym = powmod(mod(u.re + mulmod(u.im, rho, p), p), (p - 1) / 4, p);
            for (int k = 0; k < 4; ++k)
                if (powmod(rho, k, p) == sym) s = k;
        } else {
            const Int q0 = std::abs(pi.re + pi.im);
            const Fq2 sym = pow({mod(u.re, q0), mod(u.im, q0)}, (q0 * q0 - 1) / 4, q0);
            for (int k = 0; k < 4; ++k) {
                const Fq2 ik = pow({0, 1}, k, q0);
                if (ik.a == sym.a && ik.b == sym.b) s = k;
            }
        }
        require(s >= 0, "quartic residue symbol is not a fourth root of unity");
        images.push_back({v % 4, s});
    }
    return homomorphism_kernel(B, images, {2, 2});
}

// K_v at 1+i, by direct evaluation of every exponent vector (all radicands are odd units there).
Subgroup dyadic_fourth_powers(const PGroup& B, const std::vector<Int>& gens) {
    std::vector<Element> members;
    Int count = 0;
    for (const auto& m : Subgroup::full(B).elements()) {
        Gaussian x(1);
        for (std::size_t j = 0; j < gens.size(); ++j)
            for (Int t = 0; t < m[j]; ++t) {
                x = x * Gaussian(mod(gens[j], 32));
                x = Gaussian(mod(x.re, 32), mod(x.im, 32));
            }
        if (is_fourth_power_2adic_unit(x)) {
            members.push_back(m);
            ++count;
        }
    }
    Subgroup K = subgroup_from_generators(B, members);
    if (K.order() != count) fail_internal("local fourth powers at 1+i are not closed under multiplication");
    return K;
}

}  // namespace

KummerBuild build_kummer(const KummerSpec& spec) {
    if (!spec.labels.empty() && spec.labels.size() != spec.radicands.size())
        fail_validation("one label per radicand required");
    if (spec.radicands.size() < 3) fail_validation("at least three radicands are required (K_0 and m >= 2 others)");
    KummerBuild out;
    std::vector<std::vector<std::pair<Int, int>>> factors;
    for (Int b : spec.radicands) {
        const std::string bs = std::to_string(b);
        if (b <= 0) fail_validation("radicand " + bs + " is not positive; units other than 1 are not supported");
        if (b % 2 == 0) fail_validation("radicand " + bs + " is even; the prime 1+i as a generator is not supported");
        if (b == 1) fail_validation("radicand 1 gives the trivial extension");
        if (b > kMaxRadicand) fail_budget("radicand " + bs + " exceeds " + std::to_string(kMaxRadicand));
        factors.push_back(factorize(b));
        for (const auto& [q, e] : factors.back())
            if (std::find(out.generators.begin(), out.generators.end(), q) == out.generators.end())
                out.generators.push_back(q);
    }
    const int g = static_cast<int>(out.generators.size());
    if (g > kMaxKummerGenerators)
        fail_budget(std::to_string(g) + " prime radicand generators; at most " + std::to_string(kMaxKummerGenerators));

    const PGroup A(2, std::vector<int>(static_cast<std::size_t>(g), 2));
    FieldConfig& fc = out.problem.fields;
    fc.group = A;
    for (std::size_t i = 0; i < spec.radicands.size(); ++i) {
        Vec m(static_cast<std::size_t>(g), 0);
        for (const auto& [q, e] : factors[i]) {
            const auto j = std::find(out.generators.begin(), out.generators.end(), q) - out.generators.begin();
            m[static_cast<std::size_t>(j)] = e % 4;
        }
        out.exponent_vectors.push_back(m);
        const std::string b = std::to_string(spec.radicands[i]);
        if (std::all_of(m.begin(), m.end(), [](Int x) { return x == 0; }))
            fail_validation("radicand " + b + " is a fourth power; the extension is trivial");
        if (std::all_of(m.begin(), m.end(), [](Int x) { return x % 2 == 0; })) {
            // b is a square: k(⁴√b) = k(√c) with c = ∏ q_j^{m_j/2}
            Vec half;
            for (Int x : m) half.push_back(x / 2);
            fc.chars.emplace_back(A, 1, half);
        } else {
            fc.chars.emplace_back(A, 2, m);
        }
        fc.labels.push_back(spec.labels.empty() ? "4rt(" + b + ")" : spec.labels[i]);
    }
    for (std::size_t i = 0; i < fc.chars.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (fc.chars[i].kernel() == fc.chars[j].kernel())
                fail_validation("dependent radicands: " + std::to_string(spec.radicands[j]) + " and " +
                                std::to_string(spec.radicands[i]) + " define the same field");

    // the exponent group B has the same shape as A; the pairing is Σ m_j σ_j mod 4
    const PGroup& B = A;
    std::vector<Gaussian> places = primes_above(2);
    for (Int q : out.generators)
        for (const auto& pi : primes_above(q)) places.push_back(pi);
    for (const auto& pi : places) {
        KummerPlace kp{"v(" + pi.describe() + ")", pi,
                       pi.norm() == 2 ? dyadic_fourth_powers(B, out.generators)
                                      : odd_fourth_powers(B, out.generators, pi)};
        out.problem.local.exceptional.push_back({kp.label, annihilator(A, kp.K_v), true});
        out.places.push_back(std::move(kp));
    }
    fc.validate();
    out.problem.local.validate(A);
    return out;
}

}  // namespace multinorm
