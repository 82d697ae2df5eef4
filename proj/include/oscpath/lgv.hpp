#pragma once

#include <utility>
#include <vector>

#include "oscpath/errors.hpp"
#include "oscpath/numbers.hpp"
#include "oscpath/problem.hpp"

namespace oscpath {

/// Exact integer determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        detail::require(row.size() == n, "determinant of a non-square matrix");
    if (n == 0) return Integer(1);
    Integer sign(1);
    Integer prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return Integer(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Number of single-walker paths from height a to height b in t steps.
inline Integer walk_count(int t, int a, int b) {
    int d = b - a;
    if ((t + d) % 2 != 0) return Integer(0);
    return binomial(t, (t + d) / 2);
}

/// Vicious-walker count (the w = 0 slice) via the crossing-cancellation
/// determinant det[ paths(y_start_i -> y_end_j) ].  Independent of both the
/// transfer recurrence and the series engine.
inline Integer lgv_determinant(const ProblemSpec& spec) {
    const int n = spec.n();
    std::vector<std::vector<Integer>> m(static_cast<std::size_t>(n),
                                        std::vector<Integer>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                walk_count(spec.t(), spec.y_start()[static_cast<std::size_t>(i)],
                           spec.y_end()[static_cast<std::size_t>(j)]);
    return determinant(std::move(m));
}

}  // namespace oscpath
