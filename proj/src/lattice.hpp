#ifndef MULTINORM_SRC_LATTICE_HPP
#define MULTINORM_SRC_LATTICE_HPP

// Integer-lattice kernels shared by the subgroup code. Not part of the public API.

#include "multinorm/abelian.hpp"

namespace multinorm::detail {

struct Bezout {
    Int g, s, t;  // s*a + t*b = g > 0
};
Bezout ext_gcd(Int a, Int b);

Int inverse_mod(Int u, Int m);

// Row Hermite normal form of the lattice spanned by `rows` and moduli[c]·e_c.
// Square, upper triangular, pivots divide moduli, entries above pivots reduced.
std::vector<Vec> hermite_form(std::vector<Vec> rows, const Vec& moduli);

// Exponents of Z^k / (rowspan(M) + p^N Z^k) as a sum of Z/p^{v}, zeros dropped, non-increasing.
std::vector<int> padic_smith(std::vector<Vec> M, std::size_t cols, Int p, int N);

}  // namespace multinorm::detail

#endif
