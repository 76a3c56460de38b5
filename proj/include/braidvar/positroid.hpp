#pragma once

#include <array>
#include <string>
#include <vector>

#include "continuant.hpp"
#include "jet.hpp"
#include "polynomial.hpp"

namespace braidvar {

template <class S>
using Col2 = std::array<S, 2>;

template <class S>
S det2(const Col2<S>& a, const Col2<S>& b) {
    return a[0] * b[1] - a[1] * b[0];
}

// v_1 = (1,0), v_2 = (z_1,1), v_{i+1} = -v_{i-1} + z_i v_i. Column i+1 equals
// B(z_1)...B(z_i) (1,0)^T, so all consecutive minors are 1 by construction.
template <class S>
std::vector<Col2<S>> columns_from_z(const std::vector<S>& z) {
    std::vector<Col2<S>> cols;
    cols.reserve(z.size() + 1);
    cols.push_back({S(1), S(0)});
    if (z.empty()) return cols;
    cols.push_back({z[0], S(1)});
    for (std::size_t i = 1; i < z.size(); ++i) {
        const Col2<S>& prev2 = cols[cols.size() - 2];
        const Col2<S>& prev1 = cols.back();
        cols.push_back({z[i] * prev1[0] - prev2[0], z[i] * prev1[1] - prev2[1]});
    }
    return cols;
}

// Canonical matrix of the variety point with chart coordinates (z_2..z_k):
// z_1 is solved from F_k = 0, so the last column lands on (0, *).
template <class S>
std::vector<Col2<S>> canonical_columns(const std::vector<S>& coords) {
    S den = continuant_value(coords);
    if (scalar_is_zero(den)) throw error("not on chart: F_{k-1}(z_2,...,z_k) = 0");
    S num = coords.empty() ? S(0) : continuant_value(coords, 1, coords.size() - 1);
    std::vector<S> z;
    z.reserve(coords.size() + 1);
    z.push_back(num / den);
    for (auto& c : coords) z.push_back(c);
    return columns_from_z(z);
}

// 2 x n matrix of exact column pairs; membership flags are always recomputed.
struct PositroidMatrix {
    std::vector<Col2<Rational>> cols;

    PositroidMatrix() = default;
    explicit PositroidMatrix(std::vector<Col2<Rational>> c) : cols(std::move(c)) {}

    int n() const { return static_cast<int>(cols.size()); }
    const Col2<Rational>& col(int i) const { return cols.at(static_cast<std::size_t>(i - 1)); }

    bool full_rank() const {
        for (int i = 1; i < n(); ++i)
            for (int j = i + 1; j <= n(); ++j)
                if (!is_zero(det2(col(i), col(j)))) return true;
        return false;
    }
    bool is_open() const {
        if (n() < 2) return false;
        for (int i = 1; i < n(); ++i)
            if (is_zero(det2(col(i), col(i + 1)))) return false;
        return !is_zero(det2(col(1), col(n())));
    }
    bool is_unit() const {
        if (n() < 2) return false;
        for (int i = 1; i < n(); ++i)
            if (det2(col(i), col(i + 1)) != 1) return false;
        return !is_zero(det2(col(1), col(n())));
    }

    bool operator==(const PositroidMatrix& o) const { return cols == o.cols; }
};

struct TorusFactor {
    std::vector<Rational> lambdas;  // entry i scales column i+1, all nonzero
};

inline PositroidMatrix z_to_matrix(const std::vector<Rational>& full_z) {
    return PositroidMatrix(columns_from_z(full_z));
}

inline std::vector<Rational> matrix_to_z(const PositroidMatrix& m) {
    if (m.n() < 2) throw error("matrix_to_z needs at least two columns");
    if (!(m.col(1)[0] == 1 && is_zero(m.col(1)[1])))
        throw error("not normalized: first column is not (1,0)");
    for (int i = 1; i < m.n(); ++i)
        if (det2(m.col(i), m.col(i + 1)) != 1)
            throw error("not normalized: minor D_{" + std::to_string(i) + "," +
                        std::to_string(i + 1) + "} != 1");
    std::vector<Rational> z;
    z.reserve(static_cast<std::size_t>(m.n()) - 1);
    z.push_back(m.col(2)[0]);
    for (int i = 2; i < m.n(); ++i) z.push_back(det2(m.col(i - 1), m.col(i + 1)));
    return z;
}

inline Rational plucker(const PositroidMatrix& m, int i, int j) {
    if (!(1 <= i && i < j && j <= m.n())) throw error("plucker index out of range");
    return det2(m.col(i), m.col(j));
}

// Delta_{i,j} = F_{j-i-1}(z_{i+1},...,z_{j-1}) as a polynomial identity.
inline Polynomial plucker_poly(int k, int i, int j) {
    if (!(1 <= i && i < j && j <= k + 1)) throw error("plucker_poly index out of range");
    return continuant_window(j - i - 1, i + 1);
}

// Delta_ac Delta_bd - Delta_ab Delta_cd - Delta_ad Delta_bc = 0 symbolically.
inline bool plucker_relation_check(int k, int a, int b, int c, int d) {
    if (!(1 <= a && a < b && b < c && c < d && d <= k + 1))
        throw error("plucker relation needs a < b < c < d <= k+1");
    Polynomial lhs = plucker_poly(k, a, c) * plucker_poly(k, b, d) -
                     plucker_poly(k, a, b) * plucker_poly(k, c, d) -
                     plucker_poly(k, a, d) * plucker_poly(k, b, c);
    return lhs.is_zero();
}

using Mat2 = std::array<Col2<Rational>, 2>;  // columns of a 2x2 matrix

inline Col2<Rational> mat2_apply(const Mat2& a, const Col2<Rational>& v) {
    return {a[0][0] * v[0] + a[1][0] * v[1], a[0][1] * v[0] + a[1][1] * v[1]};
}
inline Rational mat2_det(const Mat2& a) { return det2(a[0], a[1]); }
inline Mat2 mat2_inverse(const Mat2& a) {
    Rational d = mat2_det(a);
    if (is_zero(d)) throw error("singular 2x2 matrix");
    return {Col2<Rational>{a[1][1] / d, -a[0][1] / d}, Col2<Rational>{-a[1][0] / d, a[0][0] / d}};
}

// The unique A with AM in standard form (1 * ... 0 / 0 1 ... *);
// det A = 1/Delta_12(M), so Delta_ij(AM) = Delta_ij(M)/Delta_12(M).
inline std::pair<Mat2, PositroidMatrix> normalize_gl2(const PositroidMatrix& m) {
    if (m.n() < 2) throw error("normalize_gl2 needs at least two columns");
    Rational d12 = det2(m.col(1), m.col(2));
    Rational d1n = det2(m.col(1), m.col(m.n()));
    if (is_zero(d12) || is_zero(d1n)) throw error("singular: Delta_12 or Delta_1n vanishes");
    // S = (v_1 v_n)^{-1}, then T = diag(1, 1/alpha) with alpha = Delta_12/Delta_1n.
    Mat2 s = mat2_inverse({m.col(1), m.col(m.n())});
    Rational alpha = d12 / d1n;
    Mat2 a = {Col2<Rational>{s[0][0], s[0][1] / alpha}, Col2<Rational>{s[1][0], s[1][1] / alpha}};
    PositroidMatrix v;
    v.cols.reserve(m.cols.size());
    for (auto& c : m.cols) v.cols.push_back(mat2_apply(a, c));
    return {a, v};
}

// Column rescaling v'_m = v_m * prod_{l=2}^{m-1} Delta_{l,l+1}^{(-1)^{m-l}}
// makes every consecutive minor 1.
// Returns the unit matrix and the per-column factors (entry i for column i+1).
inline std::pair<PositroidMatrix, TorusFactor> rescale_unit(const PositroidMatrix& v) {
    if (v.n() < 2) throw error("rescale_unit needs at least two columns");
    if (det2(v.col(1), v.col(2)) != 1) throw error("rescale_unit expects Delta_12 = 1 standard form");
    for (int i = 2; i < v.n(); ++i)
        if (is_zero(det2(v.col(i), v.col(i + 1))))
            throw error("vanishing consecutive minor Delta_{" + std::to_string(i) + "," +
                        std::to_string(i + 1) + "}");
    if (is_zero(det2(v.col(1), v.col(v.n())))) throw error("vanishing minor Delta_1n");
    TorusFactor t;
    t.lambdas.assign(static_cast<std::size_t>(v.n()) - 1, Rational(1));
    PositroidMatrix u = v;
    Rational factor(1);
    for (int mcol = 3; mcol <= v.n(); ++mcol) {
        // factor for column m is factor for m-1 inverted, times 1/Delta_{m-1,m}
        factor = Rational(1) / (factor * det2(v.col(mcol - 1), v.col(mcol)));
        t.lambdas[static_cast<std::size_t>(mcol) - 2] = factor;
        u.cols[static_cast<std::size_t>(mcol) - 1] = {v.col(mcol)[0] * factor,
                                                      v.col(mcol)[1] * factor};
    }
    return {u, t};
}

// An open M splits uniquely as a unit matrix times column scalings,
// with lambda_{i-1} lambda_i = Delta_{i,i+1} solved left to right (lambda_0 = 1).
inline std::pair<PositroidMatrix, TorusFactor> split_torus(const PositroidMatrix& m) {
    if (!m.is_open()) throw error("split_torus needs an open matrix");
    TorusFactor t;
    t.lambdas.reserve(static_cast<std::size_t>(m.n()) - 1);
    Rational prev(1);
    for (int i = 1; i < m.n(); ++i) {
        Rational lam = det2(m.col(i), m.col(i + 1)) / prev;
        t.lambdas.push_back(lam);
        prev = lam;
    }
    PositroidMatrix u = m;
    for (int i = 2; i <= m.n(); ++i) {
        const Rational& lam = t.lambdas[static_cast<std::size_t>(i) - 2];
        u.cols[static_cast<std::size_t>(i) - 1] = {m.col(i)[0] / lam, m.col(i)[1] / lam};
    }
    return {u, t};
}

inline PositroidMatrix merge_torus(const PositroidMatrix& unit, const TorusFactor& t) {
    if (t.lambdas.size() + 1 != unit.cols.size()) throw error("torus factor size mismatch");
    PositroidMatrix m = unit;
    for (std::size_t i = 0; i < t.lambdas.size(); ++i) {
        if (is_zero(t.lambdas[i])) throw error("torus factor entries must be nonzero");
        m.cols[i + 1] = {unit.cols[i + 1][0] * t.lambdas[i], unit.cols[i + 1][1] * t.lambdas[i]};
    }
    return m;
}

}  // namespace braidvar
