#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace braidvar {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact Gauss elimination solve of A x = b. Returns the solution when the
// system is consistent and has full column rank, nullopt otherwise.
inline std::optional<std::vector<Rational>> solve_unique(RationalMatrix a, std::vector<Rational> b) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(a[p][c])) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(a[i][c])) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t jj = c; jj < cols; ++jj) a[i][jj] -= f * a[r][jj];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!is_zero(b[i])) return std::nullopt;
    if (pivot_col.size() < cols) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    return x;
}

inline int rational_matrix_rank_impl(RationalMatrix m) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    int rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (is_zero(m[i][c])) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t jj = c; jj < cols; ++jj) m[i][jj] -= f * m[r][jj];
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace braidvar
