#ifndef MULTINORM_LOCAL_HPP
#define MULTINORM_LOCAL_HPP

// Places of k seen through their decomposition groups D_v ≤ A.
// Unramified places are not stored: every cyclic subgroup of A occurs as D_v for
// infinitely many v, so they are covered by cyclic_subgroups(A). Only the finitely
// many exceptional places (ramified ones, or anything the user wants listed) carry data.

#include <string>
#include <vector>

#include "multinorm/abelian.hpp"
#include "multinorm/fields.hpp"

namespace multinorm {

using ResidueVector = std::vector<Int>;  // a_i ∈ Z/p^{e_i}, position i-1 holds a_i

struct Place {
    std::string label;
    Subgroup D;
    bool exceptional = true;
};

struct LocalData {
    std::vector<Place> exceptional;

    // Unique labels, all groups inside A.
    void validate(const PGroup& A) const;
};

// A field configuration together with its exceptional places.
struct Problem {
    FieldConfig fields;
    LocalData local;
};

// δ(x, y) for x ∈ Z/p^s, y ∈ Z/p^t: largest d ≤ min(s,t) with x ≡ y mod p^d.
int delta(Int p, Int x, int s, Int y, int t);
// I_n(a) = {i : π(n) = a_i}, 1-based indices.
std::vector<int> i_n(const NormalizedConfig& cfg, const ResidueVector& a, Int n);

// D_v ∩ H_i ⊆ Gal(M/K_0(ε_0 − d)), i.e. v ∈ Σ_i^d.
bool sigma_contains(const NormalizedConfig& cfg, const Subgroup& D, int i, int d);
// Smallest d with sigma_contains(D, i, d); always ≤ e_i.
int sigma_threshold(const NormalizedConfig& cfg, const Subgroup& D, int i);
// v ∈ Ω(I_n(a)).
bool omega_contains(const NormalizedConfig& cfg, const Subgroup& D, const ResidueVector& a, Int n);

enum class Membership { InG, InGOmegaOnly, Outside };
const char* to_string(Membership m);

// Direct evaluation of the definitions: sweeps every n for every candidate place.
Membership classify(const NormalizedConfig& cfg, const LocalData& local, const ResidueVector& a);

bool locally_cyclic(const NormalizedConfig& cfg, const LocalData& local, const Subgroup& H);
std::vector<Place> noncyclic_places(const NormalizedConfig& cfg, const LocalData& local, const Subgroup& H);

}  // namespace multinorm

#endif
