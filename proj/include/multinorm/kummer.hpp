#ifndef MULTINORM_KUMMER_HPP
#define MULTINORM_KUMMER_HPP

// Quartic Kummer configurations K_i = k(⁴√b_i) over k = Q(i).
//
// The radicand group is generated by the odd primes q_1..q_g dividing the b_i, so
// A = Gal(k(⁴√q_1,…,⁴√q_g)/k) ≅ (Z/4)^g, with σ ∈ A acting by ⁴√q_j ↦ i^{σ_j}·⁴√q_j.
// The field k(⁴√b) with b = ∏ q_j^{m_j} has character σ ↦ Σ m_j σ_j.
// At a place v the decomposition group is the annihilator of
// K_v = {m : ∏ q_j^{m_j} ∈ (k_v^×)^4}.

#include <string>
#include <vector>

#include "multinorm/abelian.hpp"
#include "multinorm/local.hpp"

namespace multinorm {

struct Gaussian {
    Int re = 0, im = 0;

    Gaussian() = default;
    Gaussian(Int r, Int i = 0) : re(r), im(i) {}
    Int norm() const;
    Gaussian conj() const { return {re, -im}; }
    bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
    std::string describe() const;
};

Gaussian operator*(const Gaussian& a, const Gaussian& b);
Gaussian operator-(const Gaussian& a, const Gaussian& b);
// a/b when b divides a exactly; nullopt-like failure reported through the bool.
bool divides(const Gaussian& b, const Gaussian& a);
Gaussian exact_quotient(const Gaussian& a, const Gaussian& b);

enum class PrimeKind { Split, Inert, Ramified };

// Gaussian primes above a rational prime q, in a fixed order: 1+i for 2, q itself if
// q ≡ 3 mod 4, and a+bi, a−bi with a odd, b even, a, b > 0 if q ≡ 1 mod 4.
std::vector<Gaussian> primes_above(Int q);
PrimeKind prime_kind(const Gaussian& pi);  // fails unless pi is a Gaussian prime

int valuation(const Gaussian& alpha, const Gaussian& pi);

// alpha ∈ (k_v^×)^4 for the completion of k at pi.
bool is_fourth_power_local(const Gaussian& alpha, const Gaussian& pi);
// Unit u of Z_2[i] given modulo 32 (any representative): is it a fourth power?
// Decided by searching the 2^9 residues mod (1+i)^9 for x with v(x^4 − u) ≥ 9.
bool is_fourth_power_2adic_unit(const Gaussian& u);

struct KummerSpec {
    std::vector<Int> radicands;
    std::vector<std::string> labels;  // optional; defaults to "4rt(b)"
};

struct KummerPlace {
    std::string label;
    Gaussian pi;
    Subgroup K_v;  // exponent vectors that become fourth powers at v
};

struct KummerBuild {
    Problem problem;
    std::vector<Int> generators;  // q_1..q_g in order of first appearance
    std::vector<Vec> exponent_vectors;  // b_i as exponents mod 4
    std::vector<KummerPlace> places;
};

inline constexpr int kMaxKummerGenerators = 4;

KummerBuild build_kummer(const KummerSpec& spec);

// Factorization of a positive integer as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<Int, int>> factorize(Int n);

}  // namespace multinorm

#endif
