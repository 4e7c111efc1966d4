#include "multinorm/examples.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "multinorm/errors.hpp"

namespace multinorm {

namespace {

const std::vector<std::pair<Int, int>> kCyclotomicConductors{{7, 1}, {13, 1}, {19, 1}, {37, 1}};

ConfigDocument kummer_doc(std::vector<Int> radicands) {
    ConfigDocument doc;
    doc.mode = ConfigDocument::Mode::Kummer;
    doc.kummer.radicands = std::move(radicands);
    return doc;
}

Int powmod(Int a, Int e, Int m) {
    Int r = 1 % m;
    a = mod(a, m);
    for (; e > 0; e >>= 1) {
        if (e & 1) r = static_cast<Int>(static_cast<__int128>(r) * a % m);
        a = static_cast<Int>(static_cast<__int128>(a) * a % m);
    }
    return r;
}

// Discrete logarithms to the smallest primitive root of the cyclic group (Z/N)^×.
struct CyclicUnits {
    Int N = 0, phi = 0;
    std::map<Int, Int> log;

    CyclicUnits(Int q, int n) : N(ipow(q, n)), phi(ipow(q, n - 1) * (q - 1)) {
        std::vector<Int> primes;
        for (const auto& [l, e] : factorize(phi)) primes.push_back(l);
        Int g = 2;
        while (std::any_of(primes.begin(), primes.end(), [&](Int l) { return powmod(g, phi / l, N) == 1; }) ||
               g % q == 0)
            ++g;
        Int x = 1;
        for (Int k = 0; k < phi; ++k, x = x * g % N) log[x] = k;
    }
};

}  // namespace

const std::vector<ExampleInfo>& examples() {
    static const std::vector<ExampleInfo> list{
        {"17-13", "k = Q(i); K_0 = k(4rt 17), K_1 = k(4rt(17*13)), K_2 = k(4rt 13)", "Z/2", "Z/4"},
        {"17-409", "k = Q(i); K_0 = k(4rt 17), K_1 = k(4rt(17*409)), K_2 = k(4rt 409)", "Z/4", "Z/4"},
        {"13-17-bicyclic", "k = Q(i); K_0 = k(4rt 13), K_1 = k(4rt 17), K_2 = k(4rt(13*17^2))", "Z/2", "Z/2"},
        {"cyclotomic", "k = Q; K_i = Q(zeta_q) for q = 7, 13, 19, 37, split into its 2- and 3-parts", "0", "0"},
    };
    return list;
}

ConfigDocument example_config(const std::string& name) {
    if (name == "17-13") {
        verify_quoted_local_facts();
        return kummer_doc({17, 17 * 13, 13});
    }
    if (name == "17-409") {
        verify_quoted_local_facts();
        return kummer_doc({17, 17 * 409, 409});
    }
    if (name == "13-17-bicyclic") return kummer_doc({13, 17, 13 * 17 * 17});
    if (name == "cyclotomic") {
        ConfigDocument doc;
        doc.mode = ConfigDocument::Mode::MultiPrime;
        doc.components = cyclotomic_components(kCyclotomicConductors);
        return doc;
    }
    std::string names;
    for (const auto& e : examples()) names += (names.empty() ? "" : ", ") + e.name;
    fail_validation("unknown example \"" + name + "\"; known: " + names);
}

std::vector<AbstractSpec> cyclotomic_components(const std::vector<std::pair<Int, int>>& prime_powers) {
    std::set<Int> seen;
    std::vector<CyclicUnits> units;
    for (const auto& [q, n] : prime_powers) {
        if (q == 2 || !is_prime(q)) fail_validation("cyclotomic conductors must be powers of odd primes");
        if (n < 1) fail_validation("cyclotomic conductor exponent must be positive");
        if (!seen.insert(q).second) fail_validation("cyclotomic conductors must be distinct primes");
        if (ipow(q, n) > 1000000) fail_budget("cyclotomic conductor " + std::to_string(q) + "^" + std::to_string(n));
        units.emplace_back(q, n);
    }
    std::set<Int> ells;
    for (const auto& u : units)
        for (const auto& [l, e] : factorize(u.phi)) ells.insert(l);

    std::vector<AbstractSpec> out;
    for (Int l : ells) {
        AbstractSpec spec;
        spec.p = l;
        std::vector<std::size_t> in;  // fields with a non-trivial l-part
        for (std::size_t t = 0; t < units.size(); ++t) {
            const int a = vp(units[t].phi, l);
            if (a == 0) continue;
            in.push_back(t);
            spec.exponents.push_back(a);
        }
        const std::size_t k = in.size();
        for (std::size_t s = 0; s < k; ++s) {
            Vec c(k, 0);
            c[s] = 1;
            spec.characters.push_back({"Q(zeta_" + std::to_string(units[in[s]].N) + ")", spec.exponents[s], c});
        }
        // At q_t: inertia is the whole t-th coordinate; Frobenius acts on the others through q_t mod N_s.
        for (std::size_t t = 0; t < k; ++t) {
            const Int q = prime_powers[in[t]].first;
            Vec inertia(k, 0), frob(k, 0);
            inertia[t] = 1;
            for (std::size_t s = 0; s < k; ++s)
                if (s != t) frob[s] = mod(units[in[s]].log.at(q % units[in[s]].N), ipow(l, spec.exponents[s]));
            spec.exceptional_places.push_back({"v" + std::to_string(q), {inertia, frob}});
        }
        out.push_back(std::move(spec));
    }
    return out;
}

const std::vector<LocalFact>& quoted_local_facts() {
    static const std::vector<LocalFact> facts{
        {"17 is not a fourth power in Q_13", Gaussian(17), Gaussian(3, 2), false},
        {"17 is not a fourth power in Q_13 (conjugate place)", Gaussian(17), Gaussian(3, -2), false},
        {"17 is a quartic residue modulo 409", Gaussian(17), Gaussian(3, 20), true},
        {"409 is a quartic residue modulo 17", Gaussian(409), Gaussian(1, 4), true},
        {"17 has a fourth root in Q_2", Gaussian(17), Gaussian(1, 1), true},
    };
    return facts;
}

void verify_quoted_local_facts() {
    for (const auto& f : quoted_local_facts())
        if (is_fourth_power_local(f.alpha, f.pi) != f.expected)
            fail_internal("quoted local fact does not hold: " + f.statement);
}

}  // namespace multinorm
