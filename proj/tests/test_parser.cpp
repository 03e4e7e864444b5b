#include "doctest.h"

#include "homvar/cli.hpp"
#include "homvar/parse.hpp"

#include <random>

using namespace homvar;

TEST_CASE("basic expressions") {
    RatExpr u11 = RatExpr::variable(JetVar(1, MultiIndex({1})));
    RatExpr u21 = RatExpr::variable(JetVar(2, MultiIndex({1})));
    CHECK(parse_expr("u[1;1]^2 / u[2;1]") == u11 * u11 / u21);
    CHECK(parse_expr("1/2") == RatExpr::constant(Rational(1, 2)));
    CHECK(parse_expr("-3 + 3") == RatExpr::zero());
    CHECK(parse_expr("2*(u[1;1] + 1) - 2*u[1;1] - 2").is_zero());
    CHECK(parse_expr("u[1;1,0]*u[2;0,1]") ==
          RatExpr::variable(JetVar(1, MultiIndex({1, 0}))) *
              RatExpr::variable(JetVar(2, MultiIndex({0, 1}))));
}

TEST_CASE("precedence and unary minus") {
    CHECK(parse_expr("2 + 3 * 4") == RatExpr::from_int(14));
    CHECK(parse_expr("2 * 3 ^ 2") == RatExpr::from_int(18));
    CHECK(parse_expr("-2^2") == RatExpr::from_int(-4));
    CHECK(parse_expr("(2 + 3) * 4") == RatExpr::from_int(20));
    CHECK(parse_expr("8 / 2 / 2") == RatExpr::from_int(2));
    CHECK(parse_expr("8 - 2 - 2") == RatExpr::from_int(4));
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse_expr("u[1;"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("(1 + 2"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("1 +"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("u[1;1]^0"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("1 1"), SyntaxError);
    try {
        parse_expr("1 +\n* 2");
        CHECK(false);
    } catch (const SyntaxError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("comments are skipped") {
    CHECK(parse_expr("1 + # comment\n 2") == RatExpr::from_int(3));
}

TEST_CASE("print/parse round trip") {
    std::mt19937_64 rng(2024);
    auto rand_var = [&]() {
        std::vector<int> counts{static_cast<int>(rng() % 3),
                                static_cast<int>(rng() % 2)};
        return RatExpr::variable(
            JetVar(1 + static_cast<int>(rng() % 3), MultiIndex(counts)));
    };
    for (int t = 0; t < 60; ++t) {
        RatExpr e = RatExpr::from_int(static_cast<long>(rng() % 9) - 4);
        for (int s = 0; s < 4; ++s) {
            switch (rng() % 4) {
                case 0: e = e + rand_var(); break;
                case 1: e = e * rand_var(); break;
                case 2: {
                    RatExpr d = rand_var() + RatExpr::from_int(1 + (int)(rng() % 3));
                    e = e / d;
                    break;
                }
                default: e = e - RatExpr::constant(Rational(1, 1 + (long)(rng() % 5)));
            }
        }
        CAPTURE(print_expr(e));
        CHECK(parse_expr(print_expr(e)) == e);
    }
}

TEST_CASE("round trip on the gallery forms") {
    const char* exprs[] = {
        "u[1;1]^2 / u[2;1]",
        "u[1;1,0]*u[2;0,1] - u[1;0,1]*u[2;1,0]",
        "(u[1;1,0]*u[2;0,1] - u[1;0,1]*u[2;1,0])^2 / "
        "(u[3;1,0]*u[4;0,1] - u[3;0,1]*u[4;1,0])",
        "(u[1;1]*u[2;2] - u[2;1]*u[1;2]) / u[1;1]^2",
    };
    for (const char* s : exprs) {
        RatExpr e = parse_expr(s);
        CHECK(parse_expr(print_expr(e)) == e);
    }
}

TEST_CASE("problem declarations") {
    ProblemDecl d = parse_problem("m=1 n=2 k=1 L = u[1;1]^2 / u[2;1]");
    CHECK(d.m == 1);
    CHECK(d.n == 2);
    CHECK(d.k == 1);
    CHECK(d.lagrangian.max_order() == 1);

    CHECK_NOTHROW(parse_problem(
        "m=2 n=2 k=1 L = u[1;1,0]*u[2;0,1] - u[1;0,1]*u[2;1,0]"));

    // order above k
    CHECK_THROWS_AS(parse_problem("m=1 n=1 k=1 L = u[1;2]"), IndexOutOfRange);
    // alpha above n
    CHECK_THROWS_AS(parse_problem("m=1 n=1 k=1 L = u[2;1]"), IndexOutOfRange);
    // wrong slot count
    CHECK_THROWS_AS(parse_problem("m=2 n=1 k=1 L = u[1;1]"), IndexOutOfRange);
    // malformed header
    CHECK_THROWS_AS(parse_problem("m=1 n=2 L = u[1;1]"), SyntaxError);
}

TEST_CASE("declarations accept comments and newlines") {
    ProblemDecl d = parse_problem(
        "# a null Lagrangian\nm=2 n=2 k=1\nL = u[1;1,0]*u[2;0,1] "
        "# trailing\n - u[1;0,1]*u[2;1,0]\n");
    CHECK(d.m == 2);
    CHECK(!d.lagrangian.is_zero());
}
