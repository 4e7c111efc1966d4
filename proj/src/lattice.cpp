#include "lattice.hpp"

#include <algorithm>
#include <utility>

#include "multinorm/errors.hpp"

namespace multinorm::detail {

namespace {

using Wide = __int128;

Int wide_mod(Wide x, Int m) {
    Wide r = x % m;
    if (r < 0) r += m;
    return static_cast<Int>(r);
}

}  // namespace

Bezout ext_gcd(Int a, Int b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

Int inverse_mod(Int u, Int m) {
    if (m == 1) return 0;
    auto [g, s, t] = ext_gcd(mod(u, m), m);
    (void)t;
    require(g == 1, "inverse_mod: not a unit");
    return mod(s, m);
}

std::vector<Vec> hermite_form(std::vector<Vec> rows, const Vec& moduli) {
    const std::size_t k = moduli.size();
    for (auto& r : rows) {
        require(r.size() == k, "hermite_form: row length mismatch");
        for (std::size_t c = 0; c < k; ++c) r[c] = mod(r[c], moduli[c]);
    }
    std::vector<Vec> basis(k);
    for (std::size_t j = 0; j < k; ++j) {
        Vec piv(k, 0);
        piv[j] = moduli[j];
        for (auto& r : rows) {
            if (r[j] == 0) continue;
            auto [g, s, t] = ext_gcd(piv[j], r[j]);
            const Int u = piv[j] / g, v = r[j] / g;
            for (std::size_t c = j + 1; c < k; ++c) {
                const Wide a = piv[c], b = r[c];
                piv[c] = wide_mod(s * a + t * b, moduli[c]);
                r[c] = wide_mod(-v * a + u * b, moduli[c]);
            }
            piv[j] = g;
            r[j] = 0;
        }
        basis[j] = std::move(piv);
        std::erase_if(rows, [](const Vec& r) { return std::all_of(r.begin(), r.end(), [](Int x) { return x == 0; }); });
    }
    for (std::size_t j = 1; j < k; ++j) {
        const Int d = basis[j][j];
        for (std::size_t i = 0; i < j; ++i) {
            Int x = basis[i][j];
            Int q = x >= 0 ? x / d : -((-x + d - 1) / d);
            if (q == 0) continue;
            basis[i][j] -= q * d;
            for (std::size_t c = j + 1; c < k; ++c)
                basis[i][c] = wide_mod(static_cast<Wide>(basis[i][c]) - static_cast<Wide>(q) * basis[j][c], moduli[c]);
        }
    }
    return basis;
}

std::vector<int> padic_smith(std::vector<Vec> M, std::size_t cols, Int p, int N) {
    const Int D = ipow(p, N);
    for (auto& r : M)
        for (auto& x : r) x = mod(x, D);
    std::vector<int> out;
    const std::size_t rows = M.size();
    std::size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
        int best = N;
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                int v = vp(M[i][j], p, N);
                if (v < best) best = v, bi = i, bj = j;
            }
        if (best == N) break;
        std::swap(M[t], M[bi]);
        for (auto& r : M) std::swap(r[t], r[bj]);
        const Int pv = ipow(p, best);
        const Int uinv = inverse_mod(M[t][t] / pv, D);
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (M[i][t] == 0) continue;
            const Int f = wide_mod(static_cast<Wide>(M[i][t] / pv) * uinv, D);
            for (std::size_t c = t; c < cols; ++c) M[i][c] = wide_mod(M[i][c] - static_cast<Wide>(f) * M[t][c], D);
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (M[t][j] == 0) continue;
            const Int f = wide_mod(static_cast<Wide>(M[t][j] / pv) * uinv, D);
            for (std::size_t i = t; i < rows; ++i) M[i][j] = wide_mod(M[i][j] - static_cast<Wide>(f) * M[i][t], D);
        }
        out.push_back(best);
    }
    for (; t < cols; ++t) out.push_back(N);
    std::erase(out, 0);
    std::sort(out.rbegin(), out.rend());
    return out;
}

}  // namespace multinorm::detail
