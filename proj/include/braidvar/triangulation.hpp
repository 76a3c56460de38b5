#pragma once

#include <set>
#include <string>
#include <vector>

#include "rational.hpp"

namespace braidvar {

using Diagonal = std::pair<int, int>;  // (i, j), i < j, vertices of the n-gon

inline bool diagonals_cross(const Diagonal& a, const Diagonal& b) {
    auto strictly_between = [](int x, int lo, int hi) { return lo < x && x < hi; };
    return (strictly_between(b.first, a.first, a.second) !=
            strictly_between(b.second, a.first, a.second)) &&
           b.first != a.first && b.first != a.second && b.second != a.first &&
           b.second != a.second;
}

// Noncrossing maximal diagonal set of the convex n-gon with vertices 1..n in
// clockwise order. Boundary edges are (i,i+1) and (1,n).
struct Triangulation {
    int n = 0;
    std::set<Diagonal> diagonals;

    Triangulation() = default;
    Triangulation(int n_, std::set<Diagonal> d) : n(n_), diagonals(std::move(d)) { validate(); }

    void validate() const {
        if (n < 3) throw error("polygon needs at least 3 vertices");
        for (auto& d : diagonals) {
            if (!(1 <= d.first && d.first < d.second && d.second <= n))
                throw error("diagonal out of range");
            if (d.second < d.first + 2 || (d.first == 1 && d.second == n))
                throw error("(" + std::to_string(d.first) + "," + std::to_string(d.second) +
                            ") is a boundary edge, not a diagonal");
        }
        if (static_cast<int>(diagonals.size()) != n - 3)
            throw error("triangulation of an n-gon needs n-3 diagonals");
        for (auto a = diagonals.begin(); a != diagonals.end(); ++a)
            for (auto b = std::next(a); b != diagonals.end(); ++b)
                if (diagonals_cross(*a, *b)) throw error("diagonals cross");
    }

    bool has_edge(int p, int q) const {
        if (p > q) std::swap(p, q);
        if (q == p + 1 || (p == 1 && q == n)) return true;
        return diagonals.count({p, q}) > 0;
    }

    // Triangles = pairwise-connected vertex triples (faces, by convexity).
    std::vector<std::array<int, 3>> triangles() const {
        std::vector<std::array<int, 3>> out;
        for (int p = 1; p <= n; ++p)
            for (int q = p + 1; q <= n; ++q) {
                if (!has_edge(p, q)) continue;
                for (int r = q + 1; r <= n; ++r)
                    if (has_edge(q, r) && has_edge(p, r)) out.push_back({p, q, r});
            }
        return out;
    }

    bool operator==(const Triangulation& o) const { return n == o.n && diagonals == o.diagonals; }
};

// Diagonals {(1,i) : 3 <= i <= k} of the (k+1)-gon; empty for the triangle.
inline Triangulation fan_triangulation(int k) {
    if (k < 2) throw error("fan triangulation needs k >= 2");
    std::set<Diagonal> d;
    for (int i = 3; i <= k; ++i) d.insert({1, i});
    return Triangulation(k + 1, std::move(d));
}

// Replace d by the opposite diagonal of its quadrilateral.
inline Triangulation flip(const Triangulation& t, const Diagonal& d) {
    if (!t.diagonals.count(d)) throw error("diagonal not in triangulation");
    // The two triangles adjacent to d give the quadrilateral's other corners.
    std::vector<int> opposite;
    for (auto& tri : t.triangles()) {
        bool has_i = tri[0] == d.first || tri[1] == d.first || tri[2] == d.first;
        bool has_j = tri[0] == d.second || tri[1] == d.second || tri[2] == d.second;
        if (has_i && has_j)
            for (int v : tri)
                if (v != d.first && v != d.second) opposite.push_back(v);
    }
    if (opposite.size() != 2) throw error("flip: diagonal is not interior to two triangles");
    Diagonal nd{std::min(opposite[0], opposite[1]), std::max(opposite[0], opposite[1])};
    std::set<Diagonal> ds = t.diagonals;
    ds.erase(d);
    ds.insert(nd);
    return Triangulation(t.n, std::move(ds));
}

namespace detail {

// Triangulations of the contiguous vertex range lo..hi closed by the chord
// (lo,hi); inserted diagonals are (lo,m)/(m,hi) with lo < m < hi, which are
// genuine diagonals of the full polygon whenever they span more than one edge.
inline std::vector<std::set<Diagonal>> triangulations_range(int lo, int hi) {
    if (hi - lo < 2) return {{}};
    std::vector<std::set<Diagonal>> out;
    for (int m = lo + 1; m < hi; ++m) {
        auto left = triangulations_range(lo, m);
        auto right = triangulations_range(m, hi);
        for (auto& l : left)
            for (auto& r : right) {
                std::set<Diagonal> s = l;
                s.insert(r.begin(), r.end());
                if (m > lo + 1) s.insert({lo, m});
                if (hi > m + 1) s.insert({m, hi});
                out.push_back(std::move(s));
            }
    }
    return out;
}

}  // namespace detail

// All triangulations of the n-gon (Catalan(n-2) of them).
inline std::vector<Triangulation> all_triangulations(int n) {
    if (n < 3) throw error("polygon needs at least 3 vertices");
    std::vector<Triangulation> out;
    for (auto& s : detail::triangulations_range(1, n)) out.push_back(Triangulation(n, std::move(s)));
    return out;
}

}  // namespace braidvar
