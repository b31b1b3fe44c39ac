#pragma once

// Slow, independent reference computations used to cross-check the library.
// Nothing here calls into the code under test except for plain data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Int = mpz_class;
using Rat = mpq_class;
using IntRows = std::vector<std::vector<Int>>;
using RatRows = std::vector<std::vector<Rat>>;

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Cofactor expansion along the first row.
inline Int det_cofactor(const IntRows& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        IntRows minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Int> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        const Int term = m[0][c] * det_cofactor(minor);
        total += (c % 2 == 0) ? term : Int(-term);
    }
    return total;
}

// gcd of all k x k minors.
inline Int determinantal_divisor(const IntRows& m, std::size_t k) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    Int g = 0;
    for_each_subset(rows, k, [&](const std::vector<std::size_t>& rs) {
        for_each_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
            IntRows sub;
            for (auto r : rs) {
                std::vector<Int> row;
                for (auto c : cs) row.push_back(m[r][c]);
                sub.push_back(row);
            }
            Int d = det_cofactor(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        });
    });
    return g;
}

// Invariant factors d_k = D_k / D_{k-1} for k up to the rank.
inline std::vector<Int> invariant_factors(const IntRows& m) {
    std::vector<Int> out;
    const std::size_t limit = std::min(m.size(), m.empty() ? std::size_t{0} : m[0].size());
    Int prev = 1;
    for (std::size_t k = 1; k <= limit; ++k) {
        const Int dk = determinantal_divisor(m, k);
        if (dk == 0) break;
        out.push_back(dk / prev);
        prev = dk;
    }
    return out;
}

inline std::size_t rank_of(RatRows m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const Rat f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline RatRows to_rat(const IntRows& m) {
    RatRows out;
    for (const auto& r : m) out.emplace_back(r.begin(), r.end());
    return out;
}

// v is in the integer column span of M iff appending v keeps the rank and
// every determinantal divisor.
inline bool in_integer_span(const IntRows& m, const std::vector<Int>& v) {
    IntRows ext = m;
    for (std::size_t r = 0; r < ext.size(); ++r) ext[r].push_back(v[r]);
    const std::size_t rk = rank_of(to_rat(m));
    if (rank_of(to_rat(ext)) != rk) return false;
    for (std::size_t k = 1; k <= rk; ++k)
        if (determinantal_divisor(m, k) != determinantal_divisor(ext, k)) return false;
    return true;
}

// One-dimensional kernel vector of a (k-1) x k rational matrix of full rank.
inline std::vector<Rat> kernel_vector(RatRows m, std::size_t k) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < k && row < m.size(); ++c) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        const Rat lead = m[row][c];
        for (auto& x : m[row]) x /= lead;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            const Rat f = m[r][c];
            for (std::size_t j = 0; j < k; ++j) m[r][j] -= f * m[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    std::size_t free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
    std::vector<Rat> u(k, Rat(0));
    u[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) u[pivots[i]] = -m[i][free_col];
    return u;
}

// Extremal generators of the cone spanned by `gens`, by enumerating all
// facets through (rank - 1)-subsets. Assumes the cone is pointed.
inline std::vector<bool> extremal_by_facets(const IntRows& gens) {
    const std::size_t n = gens.size();
    std::vector<bool> out(n, false);
    if (n == 0) return out;
    const std::size_t dim = gens[0].size();
    // Coordinates on the span: keep the pivot columns of the generator matrix.
    RatRows all = to_rat(gens);
    std::vector<std::size_t> cols;
    {
        RatRows probe;
        for (std::size_t c = 0; c < dim; ++c) {
            RatRows trial = probe;
            if (trial.empty()) trial.assign(n, {});
            for (std::size_t r = 0; r < n; ++r) trial[r].push_back(all[r][c]);
            if (rank_of(trial) > cols.size()) {
                probe = trial;
                cols.push_back(c);
            }
        }
    }
    const std::size_t k = cols.size();
    RatRows g(n);
    for (std::size_t r = 0; r < n; ++r)
        for (auto c : cols) g[r].push_back(all[r][c]);
    auto is_zero = [](const std::vector<Rat>& v) {
        return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
    };
    if (k == 0) return out;
    if (k == 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = !is_zero(g[i]);
        return out;
    }
    std::vector<std::vector<Rat>> facets;
    for_each_subset(n, k - 1, [&](const std::vector<std::size_t>& s) {
        RatRows sub;
        for (auto i : s) sub.push_back(g[i]);
        if (rank_of(sub) != k - 1) return;
        auto u = kernel_vector(sub, k);
        bool pos = false, neg = false;
        for (const auto& v : g) {
            Rat t = 0;
            for (std::size_t j = 0; j < k; ++j) t += u[j] * v[j];
            if (t > 0) pos = true;
            if (t < 0) neg = true;
        }
        if (pos && neg) return;
        if (neg)
            for (auto& x : u) x = -x;
        facets.push_back(u);
    });
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(g[i])) continue;
        RatRows face;
        for (std::size_t j = 0; j < n; ++j) {
            bool on_all = true;
            for (const auto& u : facets) {
                Rat ti = 0, tj = 0;
                for (std::size_t c = 0; c < k; ++c) {
                    ti += u[c] * g[i][c];
                    tj += u[c] * g[j][c];
                }
                if (ti == 0 && tj != 0) on_all = false;
            }
            if (on_all) face.push_back(g[j]);
        }
        out[i] = rank_of(face) == 1;
    }
    return out;
}

// Random unimodular matrix as a product of elementary operations.
inline IntRows random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 12) {
    IntRows m(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    if (n < 2) return m;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int s = 0; s < steps; ++s) {
        const std::size_t i = pick(rng), j = pick(rng);
        if (i == j) {
            for (auto& x : m[i]) x = -x;
            continue;
        }
        const int c = coef(rng);
        for (std::size_t k = 0; k < n; ++k) m[i][k] += c * m[j][k];
    }
    return m;
}

// GF(4) = F_2[t]/(t^2 + t + 1), elements 0..3 as bit patterns.
struct GF4 {
    static int add(int a, int b) { return a ^ b; }
    static int mul(int a, int b) {
        int r = 0;
        for (int i = 0; i < 2; ++i)
            if (b >> i & 1) r ^= a << i;
        if (r & 4) r ^= 0b111;
        return r;
    }
    static int pow(int a, unsigned e) {
        int r = 1;
        while (e--) r = mul(r, a);
        return r;
    }
    // Frobenius is a bijection; x -> x^2 inverted by x -> x^2 again in GF(4).
    static int sqrt(int a) { return mul(a, a); }
};

}  // namespace oracle
