#pragma once

#include <optional>
#include <string>
#include <vector>

#include "positroid.hpp"
#include "quiver.hpp"
#include "rational_function.hpp"

namespace braidvar {

// Cluster seed: quiver plus a variable attached to every vertex.
struct Seed {
    Quiver quiver;
    std::vector<RationalFunction> variables;

    int size() const { return quiver.size(); }
    int mutable_rank() const {
        int r = 0;
        for (bool f : quiver.frozen) r += f ? 0 : 1;
        return r;
    }
};

// Chart seed of a triangulation of the (k+1)-gon: diagonal (i,j) carries the
// Plucker polynomial Delta_ij, the frozen (1,k+1) carries Delta_{1,k+1}.
inline Seed triangulation_seed(int k, const Triangulation& t) {
    if (t.n != k + 1) throw error("triangulation does not match the (k+1)-gon");
    Seed s;
    s.quiver = quiver_from_triangulation(t);
    s.variables.reserve(s.quiver.labels.size());
    for (auto& d : s.quiver.labels)
        s.variables.push_back(RationalFunction(plucker_poly(k, d.first, d.second)));
    return s;
}

// Exchange binomial: product over incoming arrows plus product over outgoing.
inline RationalFunction exchange_binomial(const Seed& s, int v) {
    RationalFunction in(1), out(1);
    for (int u = 0; u < s.size(); ++u) {
        int e = s.quiver.eps[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        if (e > 0) in *= s.variables[static_cast<std::size_t>(u)].pow(e);
        if (e < 0) out *= s.variables[static_cast<std::size_t>(u)].pow(-e);
    }
    return in + out;
}

inline Seed mutate_seed(const Seed& s, int v) {
    if (v < 0 || v >= s.size()) throw error("mutation vertex out of range");
    if (s.quiver.frozen[static_cast<std::size_t>(v)]) throw error("cannot mutate a frozen vertex");
    RationalFunction binom = exchange_binomial(s, v);
    if (binom.is_zero()) throw error("vanishing exchange binomial");
    Seed r;
    r.quiver = mutate_quiver(s.quiver, v);
    r.variables = s.variables;
    r.variables[static_cast<std::size_t>(v)] = binom / s.variables[static_cast<std::size_t>(v)];
    return r;
}

// Exchange ratio: incoming over outgoing, the orientation pinned by the fan
// chart's omega expansion.
inline RationalFunction exchange_ratio(const Seed& s, int v) {
    if (v < 0 || v >= s.size()) throw error("exchange ratio vertex out of range");
    RationalFunction in(1), out(1);
    for (int u = 0; u < s.size(); ++u) {
        int e = s.quiver.eps[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        if (e > 0) in *= s.variables[static_cast<std::size_t>(u)].pow(e);
        if (e < 0) out *= s.variables[static_cast<std::size_t>(u)].pow(-e);
    }
    return in / out;
}

// Integer exponents e with target = prod frozens[p]^{e_p}, solved through the
// per-variable degree vectors and verified exactly; bounded search fallback
// when the degree system is singular.
std::optional<std::vector<int>> solve_laurent_monomial(const RationalFunction& target,
                                                       const std::vector<RationalFunction>& frozens,
                                                       int exponent_bound = 24);

struct QuasiCheckLine {
    std::string name;
    bool pass;
    std::string detail;
};

struct QuasiReport {
    std::vector<QuasiCheckLine> lines;
    bool pass() const {
        for (auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

// Definition "quasi": frozen Laurent groups coincide, mutable variables agree
// up to frozen Laurent monomials, exchange ratios coincide. Seeds must share
// the vertex indexing (same labels in the same order).
QuasiReport quasi_equivalence_check(const Seed& s1, const Seed& s2);

// Chart adapted to the diagonal (i,j): fans from vertex 1 on both sides of the
// diagonal (i,j), and a fan from vertex i inside the cut-off polygon.
inline Triangulation cut_chart_triangulation(int k, int i, int j) {
    std::set<Diagonal> d;
    for (int m = 3; m <= i; ++m) d.insert({1, m});
    for (int m = i + 2; m <= j - 1; ++m) d.insert({i, m});
    if (!(i == 1 && j == k + 1)) d.insert({i, j});
    for (int m = std::max(j, 3); m <= k; ++m) d.insert({1, m});
    return Triangulation(k + 1, std::move(d));
}

// The two seeds compared when Delta_ij is frozen: the big-variety
// chart with Delta_ij additionally frozen, and the product chart transported
// through the cut (second-factor variables pick up Delta_ij^{(-1)^{m-j+1}}).
std::pair<Seed, Seed> cut_freezing_seeds(int k, int i, int j);

}  // namespace braidvar
