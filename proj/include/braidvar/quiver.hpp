#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "triangulation.hpp"

namespace braidvar {

// Quiver with skew-symmetric exchange matrix. Vertices are labeled by polygon
// edges; in the unit positroid model only (1, n) is frozen and the specialized
// boundary edges are dropped entirely.
struct Quiver {
    std::vector<Diagonal> labels;
    std::vector<bool> frozen;
    std::vector<std::vector<int>> eps;  // eps[u][v] = #arrows u->v minus #arrows v->u

    int size() const { return static_cast<int>(labels.size()); }

    int index_of(const Diagonal& d) const {
        for (int i = 0; i < size(); ++i)
            if (labels[static_cast<std::size_t>(i)] == d) return i;
        throw error("no quiver vertex labeled (" + std::to_string(d.first) + "," +
                    std::to_string(d.second) + ")");
    }

    void check_skew() const {
        for (int u = 0; u < size(); ++u)
            for (int v = 0; v < size(); ++v)
                if (eps[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] !=
                    -eps[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
                    throw error("exchange matrix is not skew-symmetric");
    }

    bool operator==(const Quiver& o) const {
        return labels == o.labels && frozen == o.frozen && eps == o.eps;
    }
};

// Arrows run (p,q) -> (q,r) -> (p,r) -> (p,q) inside each triangle p < q < r;
// with the vertices placed clockwise this is the clockwise rule, and on the
// fan chart it reproduces the sign structure of the omega expansion.
inline Quiver quiver_from_triangulation(const Triangulation& t) {
    Quiver q;
    for (auto& d : t.diagonals) q.labels.push_back(d);
    std::sort(q.labels.begin(), q.labels.end());
    q.labels.push_back({1, t.n});
    q.frozen.assign(q.labels.size(), false);
    q.frozen.back() = true;
    q.eps.assign(q.labels.size(), std::vector<int>(q.labels.size(), 0));

    auto tracked = [&](int p, int r) -> int {
        Diagonal d{p, r};
        for (int i = 0; i < q.size(); ++i)
            if (q.labels[static_cast<std::size_t>(i)] == d) return i;
        return -1;  // specialized boundary edge
    };
    auto arrow = [&](int u, int v) {
        if (u < 0 || v < 0) return;
        q.eps[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] += 1;
        q.eps[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] -= 1;
    };
    for (auto& tri : t.triangles()) {
        int e1 = tracked(tri[0], tri[1]);
        int e2 = tracked(tri[1], tri[2]);
        int e3 = tracked(tri[0], tri[2]);
        arrow(e1, e2);
        arrow(e2, e3);
        arrow(e3, e1);
    }
    q.check_skew();
    return q;
}

// Standard matrix mutation at a mutable vertex; an involution.
inline Quiver mutate_quiver(const Quiver& q, int v) {
    if (v < 0 || v >= q.size()) throw error("mutation vertex out of range");
    if (q.frozen[static_cast<std::size_t>(v)]) throw error("cannot mutate a frozen vertex");
    Quiver r = q;
    auto& e = r.eps;
    const auto& e0 = q.eps;
    for (int i = 0; i < q.size(); ++i)
        for (int j = 0; j < q.size(); ++j) {
            if (i == v || j == v) {
                e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    -e0[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            } else {
                int eiv = e0[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
                int evj = e0[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)];
                e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    e0[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                    (std::abs(eiv) * evj + eiv * std::abs(evj)) / 2;
            }
        }
    // frozen-frozen entries are ignored by convention
    for (int i = 0; i < q.size(); ++i)
        for (int j = 0; j < q.size(); ++j)
            if (q.frozen[static_cast<std::size_t>(i)] && q.frozen[static_cast<std::size_t>(j)])
                e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
    r.check_skew();
    return r;
}

}  // namespace braidvar
