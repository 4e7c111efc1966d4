#include "multinorm/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "lattice.hpp"
#include "multinorm/errors.hpp"

namespace multinorm {

using detail::hermite_form;

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Int ipow(Int base, int exp) {
    if (exp < 0) fail_validation("negative exponent");
    Int r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (Int{1} << 62) / std::max<Int>(base, 1)) fail_validation("integer overflow in power");
        r *= base;
    }
    return r;
}

int vp(Int x, Int p, int cap) {
    if (x == 0) return cap;
    int v = 0;
    while (x % p == 0 && v < cap) x /= p, ++v;
    return v;
}

Int mod(Int x, Int m) {
    Int r = x % m;
    return r < 0 ? r + m : r;
}

PGroup::PGroup(Int p, std::vector<int> exponents, Int cap) : p_(p), exps_(std::move(exponents)) {
    if (!is_prime(p_)) fail_validation("p = " + std::to_string(p_) + " is not prime");
    for (std::size_t j = 0; j < exps_.size(); ++j) {
        if (exps_[j] < 1) fail_validation("group exponents must be positive");
        if (j > 0 && exps_[j] > exps_[j - 1]) fail_validation("group exponents must be non-increasing");
    }
    for (int e : exps_) {
        Int m = ipow(p_, e);
        if (order_ > cap / m) fail_budget("group order exceeds cap " + std::to_string(cap));
        order_ *= m;
        mods_.push_back(m);
    }
}

int PGroup::log_order() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool PGroup::homocyclic() const {
    return std::all_of(exps_.begin(), exps_.end(), [&](int e) { return e == exps_.front(); });
}

bool PGroup::valid(const Element& x) const {
    if (x.size() != exps_.size()) return false;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] < 0 || x[j] >= mods_[j]) return false;
    return true;
}

Element PGroup::reduce(const Vec& x) const {
    if (x.size() != exps_.size()) fail_validation("element has wrong length");
    Element r(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) r[j] = mod(x[j], mods_[j]);
    return r;
}

Element PGroup::add(const Element& a, const Element& b) const {
    Element r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r[j] = mod(a[j] + b[j], mods_[j]);
    return r;
}

Element PGroup::scale(const Element& a, Int k) const {
    Element r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r[j] = mod(static_cast<__int128>(a[j]) * k % mods_[j], mods_[j]);
    return r;
}

Element PGroup::unit(int j) const {
    Element e = zero();
    e[j] = 1 % mods_[j];
    return e;
}

Int PGroup::element_order(const Element& a) const {
    Int ord = 1;
    for (std::size_t j = 0; j < a.size(); ++j) {
        Int m = mods_[j] / std::gcd(a[j], mods_[j]);
        ord = std::max(ord, m);
    }
    return ord;
}

std::string PGroup::describe() const {
    std::ostringstream os;
    if (exps_.empty()) return "0";
    for (std::size_t j = 0; j < exps_.size(); ++j) os << (j ? " x " : "") << "Z/" << mods_[j];
    return os.str();
}

std::vector<int> canonical_order(const std::vector<int>& exponents) {
    std::vector<int> perm(exponents.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return exponents[a] > exponents[b]; });
    return perm;
}

Subgroup from_lattice(const PGroup& A, std::vector<Vec> rows) {
    return Subgroup(A, hermite_form(std::move(rows), A.moduli()));
}

Subgroup Subgroup::trivial(const PGroup& A) { return from_lattice(A, {}); }

Subgroup Subgroup::full(const PGroup& A) {
    std::vector<Vec> rows;
    for (int j = 0; j < A.rank(); ++j) rows.push_back(A.unit(j));
    return from_lattice(A, rows);
}

Int Subgroup::order() const {
    Int o = 1;
    for (std::size_t j = 0; j < basis_.size(); ++j) o *= ambient_.modulus(static_cast<int>(j)) / basis_[j][j];
    return o;
}

int Subgroup::log_order() const { return vp(order(), ambient_.prime()); }

Int Subgroup::index() const { return ambient_.order() / order(); }

bool Subgroup::contains(const Element& x) const {
    if (x.size() != basis_.size()) fail_validation("element has wrong length");
    Vec y = ambient_.reduce(x);
    const std::size_t k = y.size();
    for (std::size_t j = 0; j < k; ++j) {
        const Int d = basis_[j][j];
        if (y[j] % d != 0) return false;
        const Int q = y[j] / d;
        if (q == 0) continue;
        for (std::size_t c = j; c < k; ++c)
            y[c] = mod(static_cast<Int>((static_cast<__int128>(y[c]) - static_cast<__int128>(q) * basis_[j][c]) %
                                        ambient_.modulus(static_cast<int>(c))),
                       ambient_.modulus(static_cast<int>(c)));
    }
    return true;
}

bool Subgroup::contains(const Subgroup& other) const {
    if (ambient_ != other.ambient_) fail_validation("subgroups live in different groups");
    for (const auto& g : other.generators())
        if (!contains(g)) return false;
    return true;
}

std::vector<Element> Subgroup::generators() const {
    std::vector<Element> out;
    for (const auto& row : basis_) {
        Element g = ambient_.reduce(row);
        if (std::any_of(g.begin(), g.end(), [](Int x) { return x != 0; })) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Element> Subgroup::elements() const {
    const std::size_t k = basis_.size();
    std::vector<Int> radix(k);
    for (std::size_t j = 0; j < k; ++j) radix[j] = ambient_.modulus(static_cast<int>(j)) / basis_[j][j];
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(order()));
    std::vector<Int> c(k, 0);
    while (true) {
        Element x = ambient_.zero();
        for (std::size_t j = 0; j < k; ++j)
            if (c[j]) x = ambient_.add(x, ambient_.scale(ambient_.reduce(basis_[j]), c[j]));
        out.push_back(std::move(x));
        std::size_t j = 0;
        while (j < k && ++c[j] == radix[j]) c[j++] = 0;
        if (j == k) break;
    }
    return out;
}

Subgroup Subgroup::multiple(Int k) const {
    std::vector<Vec> rows;
    for (const auto& g : generators()) rows.push_back(ambient_.scale(g, k));
    return from_lattice(ambient_, rows);
}

std::string Subgroup::describe() const {
    std::ostringstream os;
    os << "<";
    auto gens = generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        os << (i ? "," : "") << "(";
        for (std::size_t j = 0; j < gens[i].size(); ++j) os << (j ? "," : "") << gens[i][j];
        os << ")";
    }
    os << "> of order " << order();
    return os.str();
}

Subgroup subgroup_from_generators(const PGroup& A, const std::vector<Element>& gens) {
    for (const auto& g : gens)
        if (!A.valid(g)) fail_validation("generator coordinate out of range");
    return from_lattice(A, gens);
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
    if (a.ambient() != b.ambient()) fail_validation("join: ambient mismatch");
    std::vector<Vec> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return from_lattice(a.ambient(), std::move(rows));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    if (a.ambient() != b.ambient()) fail_validation("intersect: ambient mismatch");
    const PGroup& A = a.ambient();
    const std::size_t k = static_cast<std::size_t>(A.rank());
    Vec mods = A.moduli();
    mods.insert(mods.end(), A.moduli().begin(), A.moduli().end());
    std::vector<Vec> rows;
    for (const auto& r : a.basis()) {
        Vec row = r;
        row.insert(row.end(), r.begin(), r.end());
        rows.push_back(std::move(row));
    }
    for (const auto& r : b.basis()) {
        Vec row = r;
        row.resize(2 * k, 0);
        rows.push_back(std::move(row));
    }
    auto h = hermite_form(std::move(rows), mods);
    std::vector<Vec> out;
    for (std::size_t i = k; i < 2 * k; ++i) out.emplace_back(h[i].begin() + static_cast<long>(k), h[i].end());
    return from_lattice(A, std::move(out));
}

Subgroup homomorphism_kernel(const PGroup& A, const std::vector<Vec>& images, const std::vector<int>& targets) {
    const std::size_t k = static_cast<std::size_t>(A.rank()), s = targets.size();
    if (images.size() != k) fail_validation("kernel: one image per generator required");
    Vec mods;
    for (int t : targets) mods.push_back(ipow(A.prime(), t));
    mods.insert(mods.end(), A.moduli().begin(), A.moduli().end());
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < k; ++j) {
        if (images[j].size() != s) fail_validation("kernel: image length mismatch");
        Vec row = images[j];
        row.resize(s + k, 0);
        row[s + j] = 1;
        rows.push_back(std::move(row));
    }
    auto h = hermite_form(std::move(rows), mods);
    std::vector<Vec> out;
    for (std::size_t i = s; i < s + k; ++i) out.emplace_back(h[i].begin() + static_cast<long>(s), h[i].end());
    return from_lattice(A, std::move(out));
}

std::vector<int> quotient_invariants(const Subgroup& H, const Subgroup& K) {
    if (H.ambient() != K.ambient()) fail_validation("quotient: ambient mismatch");
    if (!H.contains(K)) fail_validation("quotient: K is not contained in H");
    const PGroup& A = H.ambient();
    const int N = H.log_order() - K.log_order();
    if (N == 0) return {};
    const std::size_t k = static_cast<std::size_t>(A.rank());
    const auto& BH = H.basis();
    // Coordinates of K's basis rows in terms of H's triangular basis.
    std::vector<Vec> C;
    for (const auto& row : K.basis()) {
        std::vector<__int128> x(row.begin(), row.end());
        Vec c(k);
        for (std::size_t j = 0; j < k; ++j) {
            require(x[j] % BH[j][j] == 0, "quotient: lattice containment failed");
            const __int128 q = x[j] / BH[j][j];
            c[j] = mod(static_cast<Int>(q % ipow(A.prime(), N)), ipow(A.prime(), N));
            for (std::size_t t = j; t < k; ++t) x[t] -= q * BH[j][t];
        }
        C.push_back(std::move(c));
    }
    return detail::padic_smith(std::move(C), k, A.prime(), N);
}

std::vector<int> quotient_invariants(const PGroup& A, const Subgroup& H) {
    return quotient_invariants(Subgroup::full(A), H);
}

bool image_is_cyclic(const Subgroup& D, const Subgroup& H) { return quotient_invariants(join(D, H), H).size() <= 1; }

std::vector<Subgroup> cyclic_subgroups(const PGroup& A, Int budget) {
    if (A.order() > budget) fail_budget("cyclic subgroup enumeration over a group of order " + std::to_string(A.order()));
    std::set<Subgroup> seen;
    for (const auto& g : Subgroup::full(A).elements()) seen.insert(from_lattice(A, {g}));
    return {seen.begin(), seen.end()};
}

Subgroup annihilator(const PGroup& A, const Subgroup& S) {
    if (S.ambient() != A) fail_validation("annihilator: ambient mismatch");
    if (!A.homocyclic()) fail_validation("annihilator needs a homocyclic group");
    const auto gens = S.generators();
    if (gens.empty()) return Subgroup::full(A);
    const int n = A.exponents().front();
    std::vector<Vec> images(static_cast<std::size_t>(A.rank()));
    for (int j = 0; j < A.rank(); ++j)
        for (const auto& s : gens) images[static_cast<std::size_t>(j)].push_back(s[static_cast<std::size_t>(j)]);
    return homomorphism_kernel(A, images, std::vector<int>(gens.size(), n));
}

Character::Character(PGroup A, int target_exponent, Vec coeffs)
    : ambient_(std::move(A)), target_(target_exponent), coeffs_(std::move(coeffs)) {
    if (target_ < 0) fail_validation("character target exponent must be non-negative");
    if (static_cast<int>(coeffs_.size()) != ambient_.rank())
        fail_validation("character needs one coefficient per group coordinate");
    const Int m = ipow(ambient_.prime(), target_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        coeffs_[j] = mod(coeffs_[j], m);
        if (vp(coeffs_[j], ambient_.prime(), target_) < target_ - ambient_.exponents()[j])
            fail_validation("character coefficient " + std::to_string(coeffs_[j]) + " is not well defined on Z/" +
                            std::to_string(ambient_.modulus(static_cast<int>(j))));
    }
}

Int Character::operator()(const Element& a) const {
    const Int m = ipow(ambient_.prime(), target_);
    __int128 s = 0;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) s = (s + static_cast<__int128>(coeffs_[j]) * a[j]) % m;
    return static_cast<Int>(s);
}

int Character::image_exponent() const {
    int v = target_;
    for (Int c : coeffs_) v = std::min(v, vp(c, ambient_.prime(), target_));
    return target_ - v;
}

bool Character::surjective() const { return image_exponent() == target_; }

Subgroup Character::kernel() const {
    std::vector<Vec> images;
    for (Int c : coeffs_) images.push_back({c});
    return homomorphism_kernel(ambient_, images, {target_});
}

Character Character::truncated(int f) const {
    if (f < 0 || f > target_) fail_validation("truncation degree out of range");
    return Character(ambient_, f, coeffs_);
}

std::string format_invariants(Int p, const std::vector<int>& exps) {
    if (exps.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < exps.size(); ++i) os << (i ? " + " : "") << "Z/" << ipow(p, exps[i]);
    return os.str();
}

}  // namespace multinorm
