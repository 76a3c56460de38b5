#include <doctest.h>

#include "braidvar/poly_gcd.hpp"
#include "braidvar/prng.hpp"
#include "braidvar/seed.hpp"

using namespace braidvar;

namespace {
Polynomial P(const std::string& s) { return Polynomial::parse(s); }
}

TEST_CASE("fan triangulation") {
    CHECK(fan_triangulation(3).diagonals == std::set<Diagonal>{{1, 3}});
    CHECK(fan_triangulation(4).diagonals == std::set<Diagonal>{{1, 3}, {1, 4}});
    CHECK(fan_triangulation(2).diagonals.empty());
    CHECK_THROWS_AS(fan_triangulation(1), error);
}

TEST_CASE("triangulation validation") {
    CHECK_THROWS_AS(Triangulation(4, {{1, 4}}), error);          // boundary edge
    CHECK_THROWS_AS(Triangulation(4, {}), error);                // wrong count
    CHECK_THROWS_AS(Triangulation(6, {{1, 3}, {2, 4}, {1, 4}}), error);  // crossing
}

TEST_CASE("all triangulations are Catalan many") {
    CHECK(all_triangulations(4).size() == 2);
    CHECK(all_triangulations(5).size() == 5);
    CHECK(all_triangulations(6).size() == 14);
    CHECK(all_triangulations(7).size() == 42);
}

TEST_CASE("quiver of the fan charts") {
    // k=3: one mutable (1,3), frozen (1,4), single arrow w -> w1
    Quiver q3 = quiver_from_triangulation(fan_triangulation(3));
    CHECK(q3.size() == 2);
    int w1 = q3.index_of({1, 3}), w = q3.index_of({1, 4});
    CHECK(q3.frozen[static_cast<std::size_t>(w)]);
    CHECK(!q3.frozen[static_cast<std::size_t>(w1)]);
    CHECK(q3.eps[static_cast<std::size_t>(w)][static_cast<std::size_t>(w1)] == 1);

    // k=4: path w -> w2 -> w1 on labels (1,5), (1,4), (1,3)
    Quiver q4 = quiver_from_triangulation(fan_triangulation(4));
    int a = q4.index_of({1, 3}), b = q4.index_of({1, 4}), c = q4.index_of({1, 5});
    CHECK(q4.eps[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)] == 1);
    CHECK(q4.eps[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] == 1);
    CHECK(q4.eps[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)] == 0);
    q4.check_skew();
}

TEST_CASE("flip") {
    Triangulation square(4, {{1, 3}});
    CHECK(flip(square, {1, 3}).diagonals == std::set<Diagonal>{{2, 4}});
    CHECK(flip(flip(square, {1, 3}), {2, 4}) == square);
    // pentagon fan, flip (1,4): quadrilateral 1-3-4-5, opposite diagonal (3,5)
    CHECK(flip(fan_triangulation(4), {1, 4}).diagonals == std::set<Diagonal>{{1, 3}, {3, 5}});
    CHECK_THROWS_AS(flip(square, {2, 4}), error);
}

TEST_CASE("mutation is an involution") {
    Sampler rng(15);
    for (auto& t : all_triangulations(6)) {
        Quiver q = quiver_from_triangulation(t);
        for (int v = 0; v < q.size(); ++v) {
            if (q.frozen[static_cast<std::size_t>(v)]) {
                CHECK_THROWS_AS(mutate_quiver(q, v), error);
                continue;
            }
            CHECK(mutate_quiver(mutate_quiver(q, v), v) == q);
        }
    }
}

TEST_CASE("flip and mutation commute, exhaustively up to the heptagon") {
    for (int n = 4; n <= 7; ++n)
        for (auto& t : all_triangulations(n))
            for (auto& d : t.diagonals) {
                Triangulation ft = flip(t, d);
                Quiver qf = quiver_from_triangulation(ft);
                Quiver qm = mutate_quiver(quiver_from_triangulation(t),
                                          quiver_from_triangulation(t).index_of(d));
                 // the mutated vertex answers to the flipped diagonal's label
                Diagonal nd{0, 0};
                for (auto& e : ft.diagonals)
                    if (!t.diagonals.count(e)) nd = e;
                qm.labels[static_cast<std::size_t>(quiver_from_triangulation(t).index_of(d))] = nd;
                for (int u = 0; u < qf.size(); ++u)
                    for (int v = 0; v < qf.size(); ++v)
                        CHECK(qf.eps[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] ==
                              qm.eps[static_cast<std::size_t>(qm.index_of(qf.labels[static_cast<std::size_t>(u)]))]
                                    [static_cast<std::size_t>(qm.index_of(qf.labels[static_cast<std::size_t>(v)]))]);
            }
}

TEST_CASE("mutate_seed reproduces the flipped Plucker variable") {
    // square: A' = (1 + Delta_14)/Delta_13 = z3 = Delta_24
    Seed s = triangulation_seed(3, fan_triangulation(3));
    int v = s.quiver.index_of({1, 3});
    Seed m = mutate_seed(s, v);
    CHECK(m.variables[static_cast<std::size_t>(v)] == RationalFunction(P("z3")));
    CHECK(m.variables[static_cast<std::size_t>(v)] == RationalFunction(plucker_poly(3, 2, 4)));
    // involution
    Seed back = mutate_seed(m, v);
    CHECK(back.variables[static_cast<std::size_t>(v)] == s.variables[static_cast<std::size_t>(v)]);
    CHECK(back.quiver == s.quiver);
}

TEST_CASE("mutation along flips yields Plucker variables (Laurent, with monomial denominators)") {
    for (int k = 3; k <= 6; ++k) {
        Triangulation t = fan_triangulation(k);
        Seed s = triangulation_seed(k, t);
        Sampler rng(static_cast<std::uint64_t>(k));
        for (int step = 0; step < 6; ++step) {
            std::vector<Diagonal> ds(t.diagonals.begin(), t.diagonals.end());
            Diagonal d = ds[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(ds.size()) - 1))];
            int v = s.quiver.index_of(d);
            Triangulation ft = flip(t, d);
            Diagonal nd{0, 0};
            for (auto& e : ft.diagonals)
                if (!t.diagonals.count(e)) nd = e;
            s = mutate_seed(s, v);
            s.quiver.labels[static_cast<std::size_t>(v)] = nd;
            t = ft;
            // the new variable is the Plucker polynomial of the new diagonal...
            CHECK(s.variables[static_cast<std::size_t>(v)] ==
                  RationalFunction(plucker_poly(k, nd.first, nd.second)));
            // ...so denominators of all cluster variables are trivially monomial
            for (auto& var : s.variables) CHECK(var.den().is_constant());
        }
    }
}

TEST_CASE("exchange ratios on fan charts") {
    Seed s3 = triangulation_seed(3, fan_triangulation(3));
    CHECK(exchange_ratio(s3, s3.quiver.index_of({1, 3})) ==
          RationalFunction(plucker_poly(3, 1, 4)));  // w / 1
    Seed s4 = triangulation_seed(4, fan_triangulation(4));
    CHECK(exchange_ratio(s4, s4.quiver.index_of({1, 4})) ==
          RationalFunction(plucker_poly(4, 1, 5)) / RationalFunction(plucker_poly(4, 1, 3)));
    // vertex with no incident arrows
    Seed lone;
    lone.quiver.labels = {{1, 3}};
    lone.quiver.frozen = {false};
    lone.quiver.eps = {{0}};
    lone.variables = {RationalFunction(P("z2"))};
    CHECK(exchange_ratio(lone, 0) == RationalFunction(1));
}

TEST_CASE("quasi-equivalence: a seed is quasi-equivalent to itself") {
    Seed s = triangulation_seed(4, fan_triangulation(4));
    auto rep = quasi_equivalence_check(s, s);
    CHECK(rep.pass());
}

TEST_CASE("quasi-equivalence fails when a mutable variable is off by a non-frozen factor") {
    Seed s = triangulation_seed(4, fan_triangulation(4));
    Seed bad = s;
    int v = bad.quiver.index_of({1, 3});
    bad.variables[static_cast<std::size_t>(v)] *= RationalFunction(P("z3"));  // z3 is not frozen
    auto rep = quasi_equivalence_check(s, bad);
    CHECK(!rep.pass());
}

TEST_CASE("freezing a diagonal gives quasi-equivalent big and product seeds") {
    for (int k = 3; k <= 8; ++k)
        for (int i = 1; i <= k; ++i)
            for (int j = i + 2; j <= k + 1; ++j) {
                if (i == 1 && j == k + 1) continue;
                auto [big, prod] = cut_freezing_seeds(k, i, j);
                auto rep = quasi_equivalence_check(big, prod);
                CHECK(rep.pass());
            }
}

TEST_CASE("explicit exchange ratios across the freezing construction") {
    // k = 6, (i,j) = (3,5): the chart has vertices at m = i, m = j and m > j.
    int k = 6, i = 3, j = 5;
    auto [big, prod] = cut_freezing_seeds(k, i, j);
    auto ratio = [&](const Seed& s, Diagonal d) { return exchange_ratio(s, s.quiver.index_of(d)); };
    auto D = [&](int p, int q) { return RationalFunction(plucker_poly(k, p, q)); };
    // m = i: Delta_{1j} / (Delta_{ij} Delta_{1,i-1}), here Delta_{12} = 1
    CHECK(ratio(big, {1, i}) == D(1, j) / D(i, j));
    CHECK(ratio(prod, {1, i}) == ratio(big, {1, i}));
    // m = j: Delta_{ij} Delta_{1,j+1} / Delta_{1,i}
    CHECK(ratio(big, {1, j}) == D(i, j) * D(1, j + 1) / D(1, i));
    CHECK(ratio(prod, {1, j}) == ratio(big, {1, j}));
    // m > j: Delta_{1,m+1} / Delta_{1,m-1}
    CHECK(ratio(big, {1, j + 1}) == D(1, j + 2) / D(1, j));
    CHECK(ratio(prod, {1, j + 1}) == ratio(big, {1, j + 1}));
}
