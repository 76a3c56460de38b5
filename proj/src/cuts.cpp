#include "braidvar/cuts.hpp"

#include <sstream>

#include "braidvar/jet.hpp"
#include "braidvar/linalg.hpp"

namespace braidvar {

namespace {

std::string point_str(const std::vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

// Delta_{p,q} = F_{q-p-1}(z_{p+1}..z_{q-1}) on chart values (vals[0] = z_2).
template <class S>
S delta_value(const std::vector<S>& vals, int p, int q) {
    return continuant_value(vals, static_cast<std::size_t>(p) - 1,
                            static_cast<std::size_t>(q - p) - 1);
}

}  // namespace

CutPair cut(const PositroidMatrix& m, const CutSpec& spec) {
    if (m.n() != spec.k + 1) throw error("cut: matrix has the wrong number of columns");
    if (!m.is_unit()) throw error("cut needs a unit matrix (all Delta_{i,i+1} = 1, Delta_{1,n} != 0)");
    auto [left, right] = detail::cut_columns(m.cols, spec);
    return {PositroidMatrix(std::move(left)), PositroidMatrix(std::move(right))};
}

PositroidMatrix glue(const CutPair& pair, const CutSpec& spec) {
    if (!pair.left.is_unit() || !pair.right.is_unit())
        throw error("glue: both factors must be unit matrices");
    return PositroidMatrix(detail::glue_columns(pair.left.cols, pair.right.cols, spec));
}

PositroidMatrix torus_action(const PositroidMatrix& m, const Rational& lambda, int anchor) {
    if (is_zero(lambda)) throw error("torus action needs lambda != 0");
    PositroidMatrix r = m;
    for (int col = 1; col <= m.n(); ++col) {
        Rational f = detail::alt_power(lambda, col - anchor);
        r.cols[static_cast<std::size_t>(col) - 1] = {m.col(col)[0] * f, m.col(col)[1] * f};
    }
    return r;
}

std::vector<Rational> sample_variety_coords(int k, Sampler& rng, int budget) {
    for (int attempt = 0; attempt < budget; ++attempt) {
        std::vector<Rational> coords;
        coords.reserve(static_cast<std::size_t>(k) - 1);
        for (int t = 2; t <= k; ++t) coords.push_back(rng.small_rational());
        if (!is_zero(continuant_value(coords))) return coords;
    }
    throw error("sampling exhausted: no chart point found in " + std::to_string(budget) + " tries");
}

PositroidMatrix sample_variety_matrix(int k, Sampler& rng, int budget) {
    return PositroidMatrix(canonical_columns(sample_variety_coords(k, rng, budget)));
}

std::vector<CutSpec> all_cut_specs(int k) {
    std::vector<CutSpec> out;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 2; j <= k + 1; ++j) {
            if (i == 1 && j == k + 1) continue;
            out.push_back(CutSpec(k, i, j));
        }
    return out;
}

TrialReport verify_type_a(int k, int i, int j, int ip, int jp, int trials, std::uint64_t seed) {
    if (!(1 <= ip && ip <= i && i < j && j <= jp && jp <= k + 1))
        throw error("type A needs nested diagonals i' <= i < j <= j'");
    if (ip == i && jp == j) throw error("type A degenerates to a single cut when the diagonals coincide");
    CutSpec inner(k, i, j);
    CutSpec outer(k, ip, jp);
    int a = j - i;
    int b = (jp - j) + (i - ip) + 1;
    int c = k - jp + ip + 1;
    TrialReport report;
    std::ostringstream name;
    name << "type-A k=" << k << " (i,j)=(" << i << "," << j << ") (i',j')=(" << ip << "," << jp << ")";
    report.name = name.str();
    Sampler rng(seed);
    for (int t = 0; t < trials; ++t) {
        PositroidMatrix pa = sample_variety_matrix(a, rng);
        PositroidMatrix pb = sample_variety_matrix(b, rng);
        PositroidMatrix pc = sample_variety_matrix(c, rng);
        ++report.trials;
        // left path: glue B and C inside the (b+c)-gon, then insert A
        CutSpec outer_in_bc(b + c - 1, ip, jp - j + i + 1);
        PositroidMatrix r1 = glue({pb, pc}, outer_in_bc);
        PositroidMatrix ml = glue({pa, r1}, inner);
        // right path: glue A and B inside the (a+b)-gon, then insert into C-side
        CutSpec inner_in_ab(a + b - 1, i - ip + 1, j - ip + 1);
        PositroidMatrix r2 = glue({pa, pb}, inner_in_ab);
        PositroidMatrix mr = glue({r2, pc}, outer);
        if (ml == mr) {
            ++report.passed;
        } else if (report.counterexamples.size() < 3) {
            report.counterexamples.push_back("a-point " + point_str(matrix_to_z(pa)) +
                                             " b-point " + point_str(matrix_to_z(pb)) +
                                             " c-point " + point_str(matrix_to_z(pc)));
        }
    }
    return report;
}

TypeBReport verify_type_b(int k, int i, int j, int ip, int jp, int trials, std::uint64_t seed) {
    if (!(1 <= i && i < j && j <= ip && ip < jp && jp <= k + 1))
        throw error("type B needs disjoint diagonals i < j <= i' < j'");
    CutSpec first(k, i, j);
    CutSpec second(k, ip, jp);
    int a = j - i;
    int c = jp - ip;
    int b = k - jp + ip - j + i + 2;
    TypeBReport out;
    std::ostringstream name;
    name << "type-B k=" << k << " (i,j)=(" << i << "," << j << ") (i',j')=(" << ip << "," << jp << ")";
    out.corrected.name = name.str();
    Sampler rng(seed);
    for (int t = 0; t < trials; ++t) {
        PositroidMatrix pa = sample_variety_matrix(a, rng);
        PositroidMatrix pb = sample_variety_matrix(b, rng);
        PositroidMatrix pc = sample_variety_matrix(c, rng);
        ++out.corrected.trials;
        // path 1: Phi_ij o (Id x Phi_i'j'), the C piece glued inside the (b+c)-gon
        CutSpec second_in_bc(b + c - 1, ip - j + i + 1, jp - j + i + 1);
        PositroidMatrix m1 = glue({pa, glue({pc, pb}, second_in_bc)}, first);
        // path 2: Phi_i'j' o (Phi_ij x Id) o (Id x Id x T_{Delta_ij})
        Rational delta_ij = det2(pa.col(1), pa.col(pa.n()));
        CutSpec first_in_ab(a + b - 1, i, j);
        PositroidMatrix r2 = glue({pa, pb}, first_in_ab);
        PositroidMatrix m2 = glue({torus_action(pc, delta_ij, j - ip + 1), r2}, second);
        PositroidMatrix m2_raw = glue({pc, r2}, second);
        if (m1 == m2) {
            ++out.corrected.passed;
        } else if (out.corrected.counterexamples.size() < 3) {
            out.corrected.counterexamples.push_back("a-point " + point_str(matrix_to_z(pa)) +
                                                    " b-point " + point_str(matrix_to_z(pb)) +
                                                    " c-point " + point_str(matrix_to_z(pc)));
        }
        if (m1 != m2_raw) ++out.uncorrected_failures;
    }
    return out;
}

namespace {

// alpha coefficient on dz_m and omega coefficient on dz_m ^ dz_{m'} at a point
// of X(sigma^k) with chart values vals = (z_2..z_k).
Rational alpha_coefficient(const std::vector<Rational>& vals, int k, int m) {
    Rational w = delta_value(vals, 1, k + 1);
    return delta_value(vals, 1, m) * delta_value(vals, m, k + 1) / w;
}

Rational omega_coefficient(const std::vector<Rational>& vals, int k, int m, int mp) {
    Rational w = delta_value(vals, 1, k + 1);
    return -delta_value(vals, 1, m) * delta_value(vals, m, mp) * delta_value(vals, mp, k + 1) / w;
}

}  // namespace

TrialReport pullback_point_check(const CutSpec& spec, int trials, std::uint64_t seed) {
    int k = spec.k, a = spec.a(), b = spec.b();
    if (a < 2 || b < 2) throw error("pullback check needs both factors of dimension >= 1");
    int s = ((k - spec.j + 1) % 2 == 0) ? 1 : -1;
    int dim = k - 1;  // (a-1) + (b-1)
    TrialReport report;
    std::ostringstream name;
    name << "pullback k=" << k << " (i,j)=(" << spec.i << "," << spec.j << ")";
    report.name = name.str();
    Sampler rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<Rational> x = sample_variety_coords(a, rng);
        std::vector<Rational> y = sample_variety_coords(b, rng);
        ++report.trials;
        // seed jets: product coordinates (x_2..x_a, y_2..y_b)
        std::vector<Jet> xj, yj;
        for (int u = 0; u < a - 1; ++u)
            xj.push_back(Jet::seed(x[static_cast<std::size_t>(u)], static_cast<std::size_t>(dim),
                                   static_cast<std::size_t>(u)));
        for (int u = 0; u < b - 1; ++u)
            yj.push_back(Jet::seed(y[static_cast<std::size_t>(u)], static_cast<std::size_t>(dim),
                                   static_cast<std::size_t>(a - 1 + u)));
        std::vector<Jet> glued;
        try {
            auto left = canonical_columns(xj);
            auto right = canonical_columns(yj);
            auto cols = detail::glue_columns(left, right, spec);
            for (int m = 2; m <= k; ++m)
                glued.push_back(det2(cols[static_cast<std::size_t>(m) - 2], cols[static_cast<std::size_t>(m)]));
        } catch (const error&) {
            ++report.resampled;  // pole: resample by skipping this trial
            if (report.resampled > 1000)
                throw error("sampling exhausted: too many poles in pullback check");
            --report.trials;
            --t;
            continue;
        }
        std::vector<Rational> zbar;
        for (auto& g : glued) zbar.push_back(g.value);

        bool ok = true;
        // alpha: Phi*alpha(u) = alpha_2(u_y) + s alpha_1(u_x) for every direction u
        for (int u = 0; u < dim && ok; ++u) {
            Rational lhs(0);
            for (int m = 2; m <= k; ++m)
                lhs += alpha_coefficient(zbar, k, m) *
                       glued[static_cast<std::size_t>(m) - 2].deriv(static_cast<std::size_t>(u));
            Rational rhs(0);
            if (u < a - 1)
                rhs += Rational(s) * alpha_coefficient(x, a, u + 2);
            else
                rhs += alpha_coefficient(y, b, u - (a - 1) + 2);
            if (lhs != rhs) ok = false;
        }
        // omega: checked on every pair of coordinate directions
        for (int u = 0; u < dim && ok; ++u) {
            for (int v = u + 1; v < dim && ok; ++v) {
                Rational lhs(0);
                for (int m = 2; m <= k; ++m)
                    for (int mp = m + 1; mp <= k; ++mp) {
                        Rational du_m = glued[static_cast<std::size_t>(m) - 2].deriv(static_cast<std::size_t>(u));
                        Rational dv_m = glued[static_cast<std::size_t>(m) - 2].deriv(static_cast<std::size_t>(v));
                        Rational du_mp = glued[static_cast<std::size_t>(mp) - 2].deriv(static_cast<std::size_t>(u));
                        Rational dv_mp = glued[static_cast<std::size_t>(mp) - 2].deriv(static_cast<std::size_t>(v));
                        lhs += omega_coefficient(zbar, k, m, mp) * (du_m * dv_mp - dv_m * du_mp);
                    }
                Rational rhs(0);
                if (v < a - 1) {  // both directions in the first factor
                    rhs += omega_coefficient(x, a, u + 2, v + 2);
                } else if (u >= a - 1) {  // both in the second factor
                    rhs += omega_coefficient(y, b, u - (a - 1) + 2, v - (a - 1) + 2);
                } else {  // mixed: only s alpha_1 ^ alpha_2 contributes
                    rhs += Rational(s) * alpha_coefficient(x, a, u + 2) *
                           alpha_coefficient(y, b, v - (a - 1) + 2);
                }
                if (lhs != rhs) ok = false;
            }
        }
        if (ok) {
            ++report.passed;
        } else if (report.counterexamples.size() < 3) {
            report.counterexamples.push_back("x " + point_str(x) + " y " + point_str(y));
        }
    }
    return report;
}

int rational_matrix_rank(std::vector<std::vector<Rational>> m) { return rational_matrix_rank_impl(std::move(m)); }

PullbackMatrix pullback_cohomology_matrix(const CutSpec& spec) {
    int k = spec.k, a = spec.a(), b = spec.b();
    int s = ((k - spec.j + 1) % 2 == 0) ? 1 : -1;
    auto shift = [a](int sym) { return sym + (a - 1); };
    TorusWord a1 = alpha_word(a), w1 = omega_word(a);
    TorusWord a2 = alpha_word(b).remap(shift), w2 = omega_word(b).remap(shift);
    TorusWord phi_alpha = a2 + Rational(s) * a1;
    TorusWord phi_omega = w1 + w2 + Rational(s) * wedge(a1, a2);

    auto basis1 = cohomology_basis(a);
    auto basis2_raw = cohomology_basis(b);
    std::vector<std::pair<int, TorusWord>> basis2;
    for (auto& [d, cls] : basis2_raw) basis2.push_back({d, cls.remap(shift)});

    // tensor basis words B1_p ^ B2_q, and the monomial-coordinate matrix
    std::vector<TorusWord> products;
    for (auto& [d1, c1] : basis1)
        for (auto& [d2, c2] : basis2) products.push_back(wedge(c1, c2));

    std::map<std::vector<int>, std::size_t> mono_index;
    auto index_monos = [&](const TorusWord& w) {
        for (auto& [idx, c] : w.terms()) mono_index.try_emplace(idx, mono_index.size());
    };
    for (auto& p : products) index_monos(p);
    std::vector<TorusWord> images;
    for (int d = 0; d < k; ++d) {
        TorusWord img = (d % 2 == 0) ? wedge_pow(phi_omega, d / 2)
                                     : wedge(phi_alpha, wedge_pow(phi_omega, (d - 1) / 2));
        index_monos(img);
        images.push_back(std::move(img));
    }

    RationalMatrix coords(mono_index.size(), std::vector<Rational>(products.size(), Rational(0)));
    for (std::size_t p = 0; p < products.size(); ++p)
        for (auto& [idx, c] : products[p].terms()) coords[mono_index[idx]][p] = c;

    PullbackMatrix out;
    out.matrix.assign(products.size(), std::vector<Rational>(static_cast<std::size_t>(k), Rational(0)));
    for (int d = 0; d < k; ++d) {
        std::vector<Rational> rhs(mono_index.size(), Rational(0));
        for (auto& [idx, c] : images[static_cast<std::size_t>(d)].terms()) rhs[mono_index[idx]] = c;
        auto sol = solve_unique(coords, rhs);
        if (!sol)
            throw error("pullback image of degree " + std::to_string(d) +
                        " is not in the span of the factor cohomology products");
        for (std::size_t p = 0; p < products.size(); ++p)
            out.matrix[p][static_cast<std::size_t>(d)] = (*sol)[p];
    }
    out.rank = rational_matrix_rank(out.matrix);
    return out;
}

}  // namespace braidvar
