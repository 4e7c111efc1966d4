#ifndef MULTINORM_ABELIAN_HPP
#define MULTINORM_ABELIAN_HPP

// Finite abelian p-groups A = ⊕ Z/p^{n_j} and their subgroups.
//
// A subgroup H is stored as the lattice Λ with P·Z^k ⊆ Λ ⊆ Z^k (P = diag(p^{n_j}))
// in row Hermite normal form: upper triangular, positive pivots d_j dividing p^{n_j},
// entries above a pivot reduced into [0, d_j). That form is unique, so equality of
// subgroups is equality of bases.

#include <cstdint>
#include <string>
#include <vector>

namespace multinorm {

using Int = std::int64_t;
using Vec = std::vector<Int>;
using Element = Vec;

// Largest Galois group accepted from a field configuration.
inline constexpr Int kMaxGaloisOrder = Int{1} << 20;
// Representability cap for any ambient group (keeps products of residues in 64 bits).
inline constexpr Int kMaxAmbientOrder = Int{1} << 30;
// Exhaustive subgroup enumeration in tests stays below this.
inline constexpr Int kMaxEnumeratedOrder = 256;

bool is_prime(Int n);
Int ipow(Int base, int exp);
// p-adic valuation; returns `cap` for x == 0.
int vp(Int x, Int p, int cap = 1 << 20);
Int mod(Int x, Int m);

class PGroup {
public:
    PGroup() = default;
    // Exponents must already be non-increasing; see canonical_order() for arbitrary input.
    PGroup(Int p, std::vector<int> exponents, Int cap = kMaxAmbientOrder);

    Int prime() const { return p_; }
    const std::vector<int>& exponents() const { return exps_; }
    int rank() const { return static_cast<int>(exps_.size()); }
    Int modulus(int j) const { return mods_[j]; }
    const Vec& moduli() const { return mods_; }
    Int order() const { return order_; }
    int log_order() const;
    Int exponent() const { return mods_.empty() ? 1 : mods_.front(); }
    bool homocyclic() const;

    bool valid(const Element& x) const;
    Element reduce(const Vec& x) const;
    Element zero() const { return Element(exps_.size(), 0); }
    Element add(const Element& a, const Element& b) const;
    Element scale(const Element& a, Int k) const;
    Element unit(int j) const;
    Int element_order(const Element& a) const;

    bool operator==(const PGroup& o) const { return p_ == o.p_ && exps_ == o.exps_; }
    bool operator!=(const PGroup& o) const { return !(*this == o); }
    std::string describe() const;

private:
    Int p_ = 2;
    std::vector<int> exps_;
    Vec mods_;
    Int order_ = 1;
};

// Permutation sorting exponents non-increasingly (stable): result[new] = old.
std::vector<int> canonical_order(const std::vector<int>& exponents);

class Subgroup {
public:
    Subgroup() = default;  // trivial subgroup of the trivial group
    static Subgroup trivial(const PGroup& A);
    static Subgroup full(const PGroup& A);

    const PGroup& ambient() const { return ambient_; }
    const std::vector<Vec>& basis() const { return basis_; }
    Int order() const;
    int log_order() const;
    Int index() const;  // |A/H|

    bool contains(const Element& x) const;
    bool contains(const Subgroup& other) const;  // other ⊆ this
    // Nonzero reduced basis rows; they generate H.
    std::vector<Element> generators() const;
    // Every element exactly once, in a fixed order.
    std::vector<Element> elements() const;
    Subgroup multiple(Int k) const;  // k·H

    bool operator==(const Subgroup& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator!=(const Subgroup& o) const { return !(*this == o); }
    bool operator<(const Subgroup& o) const { return basis_ < o.basis_; }

    std::string describe() const;

private:
    friend Subgroup from_lattice(const PGroup& A, std::vector<Vec> rows);
    Subgroup(PGroup A, std::vector<Vec> hnf) : ambient_(std::move(A)), basis_(std::move(hnf)) {}
    PGroup ambient_;
    std::vector<Vec> basis_;
};

// Canonical subgroup spanned by rows (plus P·Z^k).
Subgroup from_lattice(const PGroup& A, std::vector<Vec> rows);

Subgroup subgroup_from_generators(const PGroup& A, const std::vector<Element>& gens);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

// Kernel of a ↦ Σ_j a_j·images[j] in ⊕_t Z/p^{targets[t]}. images[j] has one entry per target.
Subgroup homomorphism_kernel(const PGroup& A, const std::vector<Vec>& images, const std::vector<int>& targets);

// Invariant exponents of A/H, non-increasing, zeros dropped.
std::vector<int> quotient_invariants(const PGroup& A, const Subgroup& H);
// Invariant exponents of H/K for K ⊆ H.
std::vector<int> quotient_invariants(const Subgroup& H, const Subgroup& K);

// (D + H)/H cyclic.
bool image_is_cyclic(const Subgroup& D, const Subgroup& H);

std::vector<Subgroup> cyclic_subgroups(const PGroup& A, Int budget = kMaxGaloisOrder);

// {a : Σ a_j s_j ≡ 0 mod p^n for all s ∈ S}; A must be homocyclic of exponent p^n.
Subgroup annihilator(const PGroup& A, const Subgroup& S);

class Character {
public:
    Character() = default;
    Character(PGroup A, int target_exponent, Vec coeffs);

    const PGroup& ambient() const { return ambient_; }
    int target() const { return target_; }
    const Vec& coeffs() const { return coeffs_; }

    Int operator()(const Element& a) const;
    bool surjective() const;
    // log_p of the image order.
    int image_exponent() const;
    Subgroup kernel() const;
    // π_{ε,f} ∘ χ
    Character truncated(int f) const;

private:
    PGroup ambient_;
    int target_ = 0;
    Vec coeffs_;
};

std::string format_invariants(Int p, const std::vector<int>& exps);

}  // namespace multinorm

#endif
