#include <doctest.h>

#include "braidvar/io_json.hpp"
#include "braidvar/verify.hpp"

using namespace braidvar;

TEST_CASE("parse_point") {
    auto p = parse_point("2,1,2");
    CHECK(p == std::vector<Rational>{2, 1, 2});
    CHECK(parse_point("1/3") == std::vector<Rational>{Rational(1, 3)});
    CHECK_THROWS_AS(parse_point("1.5"), parse_error);
    CHECK_THROWS_AS(parse_point("1,,2"), parse_error);
}

TEST_CASE("polynomial JSON round-trip") {
    Polynomial p = Polynomial::parse("3/2*z1^2*z3 - z2 + 1");
    json j = polynomial_to_json(p);
    CHECK(polynomial_from_json(j) == p);
    CHECK(j["terms"][0]["coef"] == "3/2");
    CHECK(j["terms"][0]["exps"]["1"] == 2);
    CHECK(j["terms"][0]["exps"]["3"] == 1);
}

TEST_CASE("matrix JSON round-trip") {
    PositroidMatrix m = z_to_matrix({Rational(2), Rational(3), Rational(1, 2)});
    json j = matrix_to_json(m);
    CHECK(j["n"] == 4);
    CHECK(j["cols"][1][0] == "2");
    CHECK(matrix_from_json(j) == m);
    json wrong = j;
    wrong["n"] = 7;
    CHECK_THROWS_AS(matrix_from_json(wrong), error);
}

TEST_CASE("verify runs green on small parameters and is byte-stable") {
    VerifyReport a = run_verify_all(3, 5, 42);
    CHECK(a.all_pass());
    VerifyReport b = run_verify_all(3, 5, 42);
    CHECK(a.to_json_string() == b.to_json_string());
    CHECK(a.to_text() == b.to_text());
    CHECK_THROWS_AS(run_verify_all(1, 5, 42), error);
}
