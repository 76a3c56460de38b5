#include "braidvar/seed.hpp"

#include <algorithm>

#include "braidvar/linalg.hpp"

namespace braidvar {

namespace {

bool equals_monomial_product(const RationalFunction& target,
                             const std::vector<RationalFunction>& frozens,
                             const std::vector<int>& exps) {
    RationalFunction prod(1);
    for (std::size_t p = 0; p < frozens.size(); ++p) prod *= frozens[p].pow(exps[p]);
    return prod == target;
}

}  // namespace

std::optional<std::vector<int>> solve_laurent_monomial(const RationalFunction& target,
                                                       const std::vector<RationalFunction>& frozens,
                                                       int exponent_bound) {
    if (target.is_zero()) return std::nullopt;
    std::size_t m = frozens.size();
    if (m == 0) {
        if (target == RationalFunction(1)) return std::vector<int>{};
        return std::nullopt;
    }
    int nv = target.max_variable();
    for (auto& f : frozens) nv = std::max(nv, f.max_variable());
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int v = 1; v <= nv; ++v) {
        std::vector<Rational> row;
        row.reserve(m);
        for (auto& f : frozens) row.push_back(Rational(f.degree_in(v)));
        a.push_back(std::move(row));
        b.push_back(Rational(target.degree_in(v)));
    }
    if (auto e = solve_unique(a, b)) {
        std::vector<int> exps;
        exps.reserve(m);
        for (auto& x : *e) {
            if (x.get_den() != 1) return std::nullopt;
            exps.push_back(static_cast<int>(x.get_num().get_si()));
        }
        if (equals_monomial_product(target, frozens, exps)) return exps;
        return std::nullopt;
    }
    // Degenerate degree system: bounded exhaustive search.
    std::vector<int> exps(m, -exponent_bound);
    while (true) {
        if (equals_monomial_product(target, frozens, exps)) return exps;
        std::size_t p = 0;
        while (p < m && exps[p] == exponent_bound) exps[p++] = -exponent_bound;
        if (p == m) return std::nullopt;
        ++exps[p];
    }
}

QuasiReport quasi_equivalence_check(const Seed& s1, const Seed& s2) {
    if (s1.quiver.labels != s2.quiver.labels || s1.quiver.frozen != s2.quiver.frozen)
        throw error("quasi-equivalence check needs seeds over the same labeled quiver vertices");
    if (s1.mutable_rank() != s2.mutable_rank()) throw error("mutable rank mismatch");

    QuasiReport report;
    auto label = [&](int v) {
        auto& d = s1.quiver.labels[static_cast<std::size_t>(v)];
        return "(" + std::to_string(d.first) + "," + std::to_string(d.second) + ")";
    };
    std::vector<RationalFunction> frozen1, frozen2;
    for (int v = 0; v < s1.size(); ++v)
        if (s1.quiver.frozen[static_cast<std::size_t>(v)]) {
            frozen1.push_back(s1.variables[static_cast<std::size_t>(v)]);
            frozen2.push_back(s2.variables[static_cast<std::size_t>(v)]);
        }

    // Bullet 1: the frozen Laurent-monomial groups coincide.
    for (std::size_t p = 0; p < frozen1.size(); ++p) {
        bool fwd = solve_laurent_monomial(frozen2[p], frozen1).has_value();
        bool bwd = solve_laurent_monomial(frozen1[p], frozen2).has_value();
        report.lines.push_back({"frozen group: frozen #" + std::to_string(p + 1), fwd && bwd,
                                fwd && bwd ? "" : "not a Laurent monomial in the other side's frozens"});
    }
    // Bullet 2: mutable variables match up to frozen Laurent monomials.
    for (int v = 0; v < s1.size(); ++v) {
        if (s1.quiver.frozen[static_cast<std::size_t>(v)]) continue;
        RationalFunction ratio =
            s1.variables[static_cast<std::size_t>(v)] / s2.variables[static_cast<std::size_t>(v)];
        bool ok = solve_laurent_monomial(ratio, frozen1).has_value();
        report.lines.push_back({"mutable match at " + label(v), ok,
                                ok ? "" : "ratio " + ratio.to_string() + " is not a frozen Laurent monomial"});
    }
    // Bullet 3: the exchange ratios coincide.
    for (int v = 0; v < s1.size(); ++v) {
        if (s1.quiver.frozen[static_cast<std::size_t>(v)]) continue;
        RationalFunction y1 = exchange_ratio(s1, v), y2 = exchange_ratio(s2, v);
        bool ok = (y1 == y2);
        report.lines.push_back({"exchange ratio at " + label(v), ok,
                                ok ? "" : y1.to_string() + " != " + y2.to_string()});
    }
    return report;
}

std::pair<Seed, Seed> cut_freezing_seeds(int k, int i, int j) {
    if (!(1 <= i && i < j && j <= k + 1 && j >= i + 2 && !(i == 1 && j == k + 1)))
        throw error("(i,j) is not a diagonal of the (k+1)-gon");
    Triangulation t = cut_chart_triangulation(k, i, j);
    Seed big = triangulation_seed(k, t);
    // Freeze Delta_ij in the big-variety chart; frozen-frozen arrows are ignored.
    int vij = big.quiver.index_of({i, j});
    int fz = big.quiver.index_of({1, k + 1});
    big.quiver.frozen[static_cast<std::size_t>(vij)] = true;
    big.quiver.eps[static_cast<std::size_t>(vij)][static_cast<std::size_t>(fz)] = 0;
    big.quiver.eps[static_cast<std::size_t>(fz)][static_cast<std::size_t>(vij)] = 0;

    // Product chart: the disjoint union of the factor fan quivers. The edge
    // (i,j) is the first factor's frozen variable Delta_ij; on the second
    // factor it is a specialized boundary edge, so the two sides do not
    // interact. Second-factor variables pick up Delta_ij^{(-1)^{m-j+1}}.
    Seed prod = big;
    for (auto& row : prod.quiver.eps) std::fill(row.begin(), row.end(), 0);
    auto arrow = [&](const Diagonal& from, const Diagonal& to) {
        int u = prod.quiver.index_of(from), v = prod.quiver.index_of(to);
        prod.quiver.eps[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] += 1;
        prod.quiver.eps[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] -= 1;
    };
    for (int m = i + 3; m <= j; ++m) arrow({i, m}, {i, m - 1});  // fan path inside (i..j)
    std::vector<int> bverts;  // second factor polygon (1..i, j..k+1)
    for (int m = 1; m <= i; ++m) bverts.push_back(m);
    for (int m = j; m <= k + 1; ++m) bverts.push_back(m);
    for (std::size_t p = 3; p < bverts.size(); ++p)
        arrow({1, bverts[p]}, {1, bverts[p - 1]});
    prod.quiver.check_skew();

    RationalFunction dij = RationalFunction(plucker_poly(k, i, j));
    for (int v = 0; v < prod.size(); ++v) {
        auto& d = prod.quiver.labels[static_cast<std::size_t>(v)];
        if (d.first == 1 && d.second >= j && !(d == Diagonal{i, j}))
            prod.variables[static_cast<std::size_t>(v)] *=
                dij.pow(((d.second - j) % 2 == 0) ? -1 : 1);
    }
    return {big, prod};
}

}  // namespace braidvar
