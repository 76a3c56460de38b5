#pragma once

#include <string>
#include <vector>

#include "positroid.hpp"
#include "prng.hpp"
#include "torus_word.hpp"

namespace braidvar {

// Diagonal (i,j) of the (k+1)-gon splitting X(sigma^k) into X(sigma^a) x
// X(sigma^b), a = j-i, b = k-j+i+1.
struct CutSpec {
    int k, i, j;

    CutSpec(int k_, int i_, int j_) : k(k_), i(i_), j(j_) {
        if (k < 2) throw error("cut needs k >= 2");
        if (!(1 <= i && i < j && j <= k + 1)) throw error("cut indices out of range");
        if (j < i + 2) throw error("(i,j) with j < i+2 is a boundary edge, not a diagonal");
        if (i == 1 && j == k + 1) throw error("(1,k+1) is the frozen boundary edge, not a diagonal");
    }

    int a() const { return j - i; }
    int b() const { return k - j + i + 1; }
};

struct CutPair {
    PositroidMatrix left;   // columns v_i..v_j, lives in Pi_{2,a+1}
    PositroidMatrix right;  // columns v_1..v_i, v_j..v_{k+1} rescaled to unit
};

namespace detail {

// Alternating power lambda^{(-1)^t}.
template <class S>
S alt_power(const S& lambda, long t) {
    if (((t % 2) + 2) % 2 == 0) return lambda;
    return S(1) / lambda;
}

template <class S>
std::pair<std::vector<Col2<S>>, std::vector<Col2<S>>> cut_columns(const std::vector<Col2<S>>& cols,
                                                                  const CutSpec& spec) {
    S delta = det2(cols[static_cast<std::size_t>(spec.i) - 1], cols[static_cast<std::size_t>(spec.j) - 1]);
    if (scalar_is_zero(delta)) throw error("not in the open set: Delta_ij = 0");
    std::vector<Col2<S>> left(cols.begin() + (spec.i - 1), cols.begin() + spec.j);
    std::vector<Col2<S>> right(cols.begin(), cols.begin() + spec.i);
    for (int m = spec.j; m <= spec.k + 1; ++m) {
        S f = alt_power(delta, m - spec.j + 1);
        const Col2<S>& v = cols[static_cast<std::size_t>(m) - 1];
        right.push_back({v[0] * f, v[1] * f});
    }
    return {std::move(left), std::move(right)};
}

template <class S>
std::vector<Col2<S>> glue_columns(const std::vector<Col2<S>>& left, const std::vector<Col2<S>>& right,
                                  const CutSpec& spec) {
    int a = spec.a(), b = spec.b();
    if (static_cast<int>(left.size()) != a + 1 || static_cast<int>(right.size()) != b + 1)
        throw error("glue: factor column counts do not match the cut spec");
    S delta = det2(left.front(), left.back());
    if (scalar_is_zero(delta)) throw error("glue: Delta_{1,a+1}(left) = 0");
    // Undo the alternating rescaling on the columns that came from v_j..v_{k+1}.
    std::vector<Col2<S>> v2 = right;
    for (int l = spec.i; l <= b; ++l) {
        S f = alt_power(delta, l - spec.i);
        v2[static_cast<std::size_t>(l)] = {right[static_cast<std::size_t>(l)][0] * f,
                                           right[static_cast<std::size_t>(l)][1] * f};
    }
    // Unique change of basis sending left's first/last columns onto v_i, v_j;
    // its determinant is Delta_ij / Delta_{1,a+1}(left) = 1.
    const Col2<S>& ti = v2[static_cast<std::size_t>(spec.i) - 1];
    const Col2<S>& tj = v2[static_cast<std::size_t>(spec.i)];
    const Col2<S>& l0 = left.front();
    const Col2<S>& la = left.back();
    // B = (ti tj) (l0 la)^{-1}
    S b00 = (ti[0] * la[1] - tj[0] * l0[1]) / delta;
    S b01 = (tj[0] * l0[0] - ti[0] * la[0]) / delta;
    S b10 = (ti[1] * la[1] - tj[1] * l0[1]) / delta;
    S b11 = (tj[1] * l0[0] - ti[1] * la[0]) / delta;
    if (!(b00 * b11 - b01 * b10 == S(1)))
        throw error("glue: boundary alignment does not have determinant 1");
    auto apply = [&](const Col2<S>& v) -> Col2<S> {
        return {b00 * v[0] + b01 * v[1], b10 * v[0] + b11 * v[1]};
    };
    std::vector<Col2<S>> out;
    out.reserve(static_cast<std::size_t>(spec.k) + 1);
    for (int m = 1; m <= spec.i - 1; ++m) out.push_back(v2[static_cast<std::size_t>(m) - 1]);
    for (int t = 0; t <= a; ++t) out.push_back(apply(left[static_cast<std::size_t>(t)]));
    for (int l = spec.i + 2; l <= b + 1; ++l) out.push_back(v2[static_cast<std::size_t>(l) - 1]);
    return out;
}

}  // namespace detail

CutPair cut(const PositroidMatrix& m, const CutSpec& spec);
PositroidMatrix glue(const CutPair& pair, const CutSpec& spec);

// T_lambda: column m scaled by lambda^{(-1)^{m-anchor}}; preserves all
// consecutive minors and scales Delta_{p,q} by lambda^{(-1)^{p-anchor}+(-1)^{q-anchor}}.
PositroidMatrix torus_action(const PositroidMatrix& m, const Rational& lambda, int anchor);

// Chart coordinates (z_2..z_k) with F_{k-1} != 0, rejection-sampled; the
// retry budget matches the reproducibility contract.
std::vector<Rational> sample_variety_coords(int k, Sampler& rng, int budget = 1000);
PositroidMatrix sample_variety_matrix(int k, Sampler& rng, int budget = 1000);

struct TrialReport {
    std::string name;
    int trials = 0;
    int passed = 0;
    int resampled = 0;
    std::vector<std::string> counterexamples;
    bool pass() const { return trials > 0 && passed == trials && counterexamples.empty(); }
};

// Nested cuts i' <= i < j <= j': both composite glue paths must agree exactly.
TrialReport verify_type_a(int k, int i, int j, int ip, int jp, int trials, std::uint64_t seed);

struct TypeBReport {
    TrialReport corrected;
    int uncorrected_failures = 0;
    bool pass() const { return corrected.pass() && uncorrected_failures > 0; }
};

// Disjoint cuts i < j <= i' < j': the pentagon closes exactly with the
// T_{Delta_ij} correction on the third factor (anchor parity j-i'+1) and must
// fail generically without it.
TypeBReport verify_type_b(int k, int i, int j, int ip, int jp, int trials, std::uint64_t seed);

// Exact check of the pullback identities at sampled points and coordinate
// tangent directions, with s = (-1)^{k-j+1} (the sign forced by the
// alternating rescaling in the glue map):
//   Phi* alpha = alpha_2 + s alpha_1,  Phi* omega = omega_1 + omega_2 + s alpha_1 ^ alpha_2.
TrialReport pullback_point_check(const CutSpec& spec, int trials, std::uint64_t seed);

// Phi* of each cohomology basis class of X(sigma^k), expanded over the tensor
// basis of the factors' cohomology; the matrix must have exact rank k.
struct PullbackMatrix {
    std::vector<std::vector<Rational>> matrix;  // rows: factor basis pairs, cols: degree 0..k-1
    int rank = 0;
};
PullbackMatrix pullback_cohomology_matrix(const CutSpec& spec);

// Exact rank of a rational matrix by Gaussian elimination.
int rational_matrix_rank(std::vector<std::vector<Rational>> m);

// All diagonals of the (k+1)-gon.
std::vector<CutSpec> all_cut_specs(int k);

}  // namespace braidvar
