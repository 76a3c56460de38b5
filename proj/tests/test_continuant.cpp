#include <doctest.h>

#include "braidvar/continuant.hpp"
#include "braidvar/prng.hpp"

using namespace braidvar;

namespace {
Polynomial P(const std::string& s) { return Polynomial::parse(s); }
}

TEST_CASE("continuant initial values and small cases") {
    CHECK(continuant({}) == Polynomial(1));
    CHECK(continuant_window(-1, 1) == Polynomial());
    CHECK(continuant({5}) == P("z5"));
    CHECK(continuant({1, 2}) == P("z1*z2 - 1"));
    // the sigma^4 defining polynomial, written out
    CHECK(continuant({1, 2, 3, 4}) == P("z1*z2*z3*z4 - z1*z2 - z1*z4 - z3*z4 + 1"));
}

TEST_CASE("braid matrix closed form vs literal product") {
    PolyMat2 b1 = braid_matrix(1);
    CHECK(b1[0][0] == P("z1"));
    CHECK(b1[0][1] == P("-1"));
    CHECK(b1[1][0] == P("1"));
    CHECK(b1[1][1] == Polynomial());
    PolyMat2 b3 = braid_matrix(3);
    CHECK(b3[0][0] == P("z1*z2*z3 - z3 - z1"));
    CHECK(b3[0][1] == P("1 - z1*z2"));
    CHECK(b3[1][0] == P("z2*z3 - 1"));
    CHECK(b3[1][1] == P("-z2"));
    for (int k = 1; k <= 8; ++k) {
        PolyMat2 closed = braid_matrix(k), prod = braid_matrix_product(k);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) CHECK(closed[r][c] == prod[r][c]);
        // det = 1
        CHECK(closed[0][0] * closed[1][1] - closed[0][1] * closed[1][0] == Polynomial(1));
    }
}

TEST_CASE("det identity") {
    CHECK(det_identity(0));
    // hand expansion: z1 z2 - (z1 z2 - 1) = 1
    CHECK(det_identity(1));
    CHECK(det_identity(6));
    for (int i = 0; i <= 8; ++i) CHECK(det_identity(i));
}

TEST_CASE("variable-shift equivariance") {
    for (int m = 1; m <= 6; ++m)
        for (int start = 2; start <= 4; ++start) {
            Polynomial shifted = continuant_window(m, start);
            Polynomial base = continuant_window(m, 1).remap_variables([&](int v) { return v + start - 1; });
            CHECK(shifted == base);
        }
}

TEST_CASE("solve_z1 worked examples") {
    CHECK(solve_z1({Rational(2)}) == Rational(1, 2));               // k=2
    CHECK(solve_z1({Rational(1), Rational(2)}) == Rational(2));     // k=3, F_3(2,1,2)=0
    CHECK_THROWS_AS(solve_z1({Rational(1), Rational(1)}), error);   // F_2 = 0
    CHECK(solve_z1({}) == Rational(0));                             // k=1: the point z1=0
}

TEST_CASE("on_variety worked examples") {
    CHECK(on_variety({Rational(0)}));
    CHECK(on_variety({Rational(1), Rational(1)}));
    CHECK(!on_variety({Rational(1), Rational(2)}));
    CHECK(on_variety({Rational(2), Rational(1), Rational(2)}));
}

TEST_CASE("VarietyPoint enforces the chart condition") {
    VarietyPoint p(3, {Rational(1), Rational(2)});
    CHECK(p.full_tuple() == std::vector<Rational>{2, 1, 2});
    CHECK(on_variety(p.full_tuple()));
    CHECK_THROWS_AS(VarietyPoint(3, {Rational(1), Rational(1)}), error);  // F_2 = 0
    CHECK_THROWS_AS(VarietyPoint(3, {Rational(1)}), error);              // wrong arity
}

TEST_CASE("solve_z1 / on_variety roundtrip on random chart points") {
    Sampler rng(42);
    for (int k = 1; k <= 8; ++k) {
        int done = 0;
        while (done < 200) {
            std::vector<Rational> coords;
            for (int t = 2; t <= k; ++t) coords.push_back(rng.small_rational());
            if (is_zero(continuant_value(coords))) continue;
            std::vector<Rational> full{solve_z1(coords)};
            full.insert(full.end(), coords.begin(), coords.end());
            CHECK(on_variety(full));
            ++done;
        }
    }
}
