#include <cstddef>
#include <optional>
#include <vector>

#include "toricwhb/errors.hpp"
#include "toricwhb/lattice.hpp"

namespace toricwhb::lattice {

// Phase-one simplex on A x + s = b (b >= 0 after row sign flips), minimizing
// the sum of artificial variables s. Bland's rule keeps it cycle-free.
std::optional<RationalVector> find_nonnegative_solution(const std::vector<RationalVector>& a_rows,
                                                        const RationalVector& b) {
    const std::size_t m = a_rows.size();
    if (b.size() != m) throw InputError("find_nonnegative_solution: dimension mismatch");
    const std::size_t n = m ? a_rows[0].size() : 0;
    for (const auto& row : a_rows)
        if (row.size() != n) throw InputError("find_nonnegative_solution: ragged matrix");

    if (n == 0) {
        for (const auto& x : b)
            if (x != 0) return std::nullopt;
        return RationalVector{};
    }

    const std::size_t width = n + m + 1;  // structural, artificial, rhs
    const std::size_t rhs = n + m;
    std::vector<RationalVector> t(m, RationalVector(width));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-a_rows[i][j]) : a_rows[i][j];
        t[i][n + i] = 1;
        t[i][rhs] = flip ? Rational(-b[i]) : b[i];
        basis[i] = n + i;
    }
    // Reduced costs of the phase-one objective.
    RationalVector cost(width);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];
    for (std::size_t i = 0; i < m; ++i) cost[rhs] -= t[i][rhs];

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < rhs; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;

        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) throw InternalError("find_nonnegative_solution: phase one is unbounded");

        const Rational inv = 1 / t[leave][enter];
        for (auto& x : t[leave]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
        }
        if (cost[enter] != 0) {
            const Rational f = cost[enter];
            for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    if (cost[rhs] != 0) return std::nullopt;
    RationalVector x(n);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = t[i][rhs];
    for (std::size_t i = 0; i < m; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j) s += a_rows[i][j] * x[j];
        if (s != b[i]) throw InternalError("find_nonnegative_solution: solution failed verification");
    }
    return x;
}

}  // namespace toricwhb::lattice
