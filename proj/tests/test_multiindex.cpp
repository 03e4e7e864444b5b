#include "doctest.h"

#include "homvar/multiindex.hpp"

#include <random>

using namespace homvar;

TEST_CASE("length and factorial") {
    CHECK(MultiIndex({0, 0}).length() == 0);
    CHECK(MultiIndex({2, 1}).length() == 3);
    CHECK(MultiIndex({0, 4}).length() == 4);

    CHECK(MultiIndex({0, 0}).factorial() == 1);
    CHECK(MultiIndex({2, 1}).factorial() == 2);
    CHECK(MultiIndex({3, 3}).factorial() == 36);
}

TEST_CASE("weight is the multinomial coefficient") {
    CHECK(MultiIndex({0, 0}).weight() == 1);
    CHECK(MultiIndex({2, 1}).weight() == 3);
    CHECK(MultiIndex({1, 1}).weight() == 2);
}

TEST_CASE("componentwise arithmetic") {
    CHECK(MultiIndex({1, 0}).plus(MultiIndex({0, 1})) == MultiIndex({1, 1}));
    CHECK(MultiIndex({2, 1}).minus(MultiIndex({1, 1})) == MultiIndex({1, 0}));
    CHECK_THROWS_AS(MultiIndex({0, 1}).minus(MultiIndex({1, 0})),
                    DegenerateIndex);
    CHECK(MultiIndex({1, 0}).incremented(2) == MultiIndex({1, 1}));
    CHECK(MultiIndex({2, 1}).at(1) == 2);
    CHECK(MultiIndex({2, 1}).at(2) == 1);
}

TEST_CASE("enumeration in canonical order") {
    auto e0 = enumerate_multiindices(2, 0);
    REQUIRE(e0.size() == 1);
    CHECK(e0[0] == MultiIndex({0, 0}));

    auto e2 = enumerate_multiindices(2, 2);
    REQUIRE(e2.size() == 3);
    CHECK(e2[0] == MultiIndex({2, 0}));
    CHECK(e2[1] == MultiIndex({1, 1}));
    CHECK(e2[2] == MultiIndex({0, 2}));

    auto e13 = enumerate_multiindices(1, 3);
    REQUIRE(e13.size() == 1);
    CHECK(e13[0] == MultiIndex({3}));
}

TEST_CASE("enumeration size and weight sum") {
    for (int m = 1; m <= 4; ++m) {
        for (int p = 0; p <= 5; ++p) {
            auto list = enumerate_multiindices(m, p);
            CHECK(static_cast<long>(list.size()) ==
                  static_cast<long>(binomial(p + m - 1, m - 1)));
            BigInt total = 0;
            BigInt expected = 1;
            for (int t = 0; t < p; ++t) expected *= m;
            for (const auto& I : list) {
                CHECK(I.length() == p);
                total += I.weight();
            }
            CHECK(total == expected);
        }
    }
}

TEST_CASE("weight and factorial consistency under addition") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        int m = 1 + static_cast<int>(rng() % 3);
        MultiIndex I(m), J(m);
        for (int s = 0; s < 4; ++s) {
            I = I.incremented(1 + static_cast<int>(rng() % m));
            if (rng() % 2) J = J.incremented(1 + static_cast<int>(rng() % m));
        }
        MultiIndex sum = I.plus(J);
        CHECK(sum.weight() * sum.factorial() ==
              int_factorial(I.length() + J.length()));
        CHECK(sum.minus(J) == I);
    }
}

TEST_CASE("textual form") {
    CHECK(MultiIndex({2, 0, 1}).to_string() == "(2,0,1)");
    CHECK(MultiIndex({0}).to_string() == "(0)");
}

TEST_CASE("falling weight") {
    // (3,1)! / ((3,1)-(2,0))! = 3*2 = 6
    CHECK(falling_weight(MultiIndex({3, 1}), MultiIndex({2, 0})) == 6);
    CHECK(falling_weight(MultiIndex({2, 2}), MultiIndex({1, 1})) == 4);
    CHECK(falling_weight(MultiIndex({2, 2}), MultiIndex({0, 0})) == 1);
}
