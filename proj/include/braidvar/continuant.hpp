#pragma once

#include <array>
#include <vector>

#include "polynomial.hpp"

namespace braidvar {

// Continuants F_m: F_m = z_last * F_{m-1} - F_{m-2}, F_0 = 1, F_{-1} = 0,
// over an arbitrary ordered list of variable indices (shifted windows are
// needed for the Plucker polynomials).
inline Polynomial continuant(const std::vector<int>& vars) {
    Polynomial fm2(0), fm1(1);  // F_{-1}, F_0
    for (int v : vars) {
        Polynomial f = Polynomial::var(v) * fm1 - fm2;
        fm2 = std::move(fm1);
        fm1 = std::move(f);
    }
    return fm1;
}

// F_m on the contiguous window z_start .. z_{start+m-1}; m = -1 is the 0
// sentinel, m = 0 the empty product 1.
inline Polynomial continuant_window(int m, int start) {
    if (m < -1) throw error("continuant window length below -1");
    if (m == -1) return Polynomial();
    std::vector<int> vars;
    vars.reserve(static_cast<std::size_t>(m));
    for (int t = 0; t < m; ++t) vars.push_back(start + t);
    return continuant(vars);
}

// Evaluate F_m directly on scalar values by the same recurrence.
template <class S>
S continuant_value(const std::vector<S>& values, std::size_t begin, std::size_t count) {
    S fm2{}, fm1 = S(1);
    for (std::size_t t = 0; t < count; ++t) {
        S f = values[begin + t] * fm1 - fm2;
        fm2 = std::move(fm1);
        fm1 = std::move(f);
    }
    return fm1;
}

template <class S>
S continuant_value(const std::vector<S>& values) {
    return continuant_value(values, 0, values.size());
}

using PolyMat2 = std::array<std::array<Polynomial, 2>, 2>;

inline PolyMat2 poly_mat_mul(const PolyMat2& x, const PolyMat2& y) {
    PolyMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return r;
}

inline PolyMat2 elementary_braid_matrix(int var) {
    return {{{Polynomial::var(var), Polynomial(-1)}, {Polynomial(1), Polynomial(0)}}};
}

// Closed form of B(z_1)...B(z_k) in continuants.
inline PolyMat2 braid_matrix(int k) {
    if (k < 1) throw error("braid matrix needs k >= 1");
    return {{{continuant_window(k, 1), -continuant_window(k - 1, 1)},
             {continuant_window(k - 1, 2), -continuant_window(k - 2, 2)}}};
}

// The literal matrix product, kept separate as the oracle side.
inline PolyMat2 braid_matrix_product(int k) {
    if (k < 1) throw error("braid matrix needs k >= 1");
    PolyMat2 r = elementary_braid_matrix(1);
    for (int i = 2; i <= k; ++i) r = poly_mat_mul(r, elementary_braid_matrix(i));
    return r;
}

// F_i(z_1..z_i) F_i(z_2..z_{i+1}) - F_{i+1}(z_1..z_{i+1}) F_{i-1}(z_2..z_i) = 1.
inline bool det_identity(int i) {
    if (i < 0) throw error("det identity needs i >= 0");
    Polynomial lhs = continuant_window(i, 1) * continuant_window(i, 2) -
                     continuant_window(i + 1, 1) * continuant_window(i - 1, 2);
    return lhs == Polynomial(1);
}

// Chart solve: coords are (z_2,...,z_k); z_1 = F_{k-2}(z_3..z_k)/F_{k-1}(z_2..z_k).
inline Rational solve_z1(const std::vector<Rational>& coords) {
    std::size_t m = coords.size();  // k-1 values
    Rational den = continuant_value(coords);
    if (is_zero(den)) throw error("not on chart: F_{k-1}(z_2,...,z_k) = 0");
    Rational num = m == 0 ? Rational(0) : continuant_value(coords, 1, m - 1);
    return num / den;
}

// F_k(z_1..z_k) = 0 test; on the variety F_{k-1}(z_1..z_{k-1}) can never
// vanish, and that is asserted as an internal consistency check.
inline bool on_variety(const std::vector<Rational>& full) {
    if (full.empty()) throw error("on_variety needs k >= 1");
    if (!is_zero(continuant_value(full))) return false;
    if (is_zero(continuant_value(full, 0, full.size() - 1)))
        throw error("internal consistency violation: F_k = 0 but F_{k-1}(z_1..z_{k-1}) = 0");
    return true;
}

// Point of X(sigma^k) in the chart coordinates (z_2,...,z_k); construction
// enforces the chart condition, so the derived full tuple always satisfies
// F_k = 0.
struct VarietyPoint {
    int k;
    std::vector<Rational> coords;

    VarietyPoint(int k_, std::vector<Rational> coords_) : k(k_), coords(std::move(coords_)) {
        if (k < 1) throw error("braid word length must be >= 1");
        if (static_cast<int>(coords.size()) != k - 1)
            throw error("variety point needs k-1 chart coordinates");
        if (is_zero(continuant_value(coords)))
            throw error("not on chart: F_{k-1}(z_2,...,z_k) = 0");
    }

    std::vector<Rational> full_tuple() const {
        std::vector<Rational> full{solve_z1(coords)};
        full.insert(full.end(), coords.begin(), coords.end());
        return full;
    }
};

}  // namespace braidvar
