#include <catch2/catch_amalgamated.hpp>

#include "gbell/engine.hpp"
#include "gbell/numbers.hpp"

using namespace gbell;

TEST_CASE("bell numbers from the triangle") {
    const long long expect[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597};
    for (int n = 0; n <= 12; ++n) REQUIRE(bell(n) == expect[n]);
    REQUIRE(bell(20) == Integer("51724158235372"));
    REQUIRE(bell(26) == Integer("49631246523618756274"));
    REQUIRE(bell(30) == Integer("846749014511809332450147"));
}

TEST_CASE("bell numbers agree with partition enumeration") {
    // Independent route: count the leaves of the set-partition enumerator on
    // an edgeless graph.
    for (int n = 1; n <= 9; ++n) {
        long long partitions = 0;
        for_each_stable_partition(Graph(n), [&](const std::vector<std::uint64_t>&) { ++partitions; });
        REQUIRE(bell(n) == partitions);
    }
}

TEST_CASE("stirling numbers of the second kind") {
    REQUIRE(stirling2(0, 0) == 1);
    REQUIRE(stirling2(4, 2) == 7);
    REQUIRE(stirling2(8, 3) == 966);
    REQUIRE(stirling2(5, 0) == 0);
    REQUIRE(stirling2(3, 5) == 0);
    for (int n = 0; n <= 30; ++n) {
        Integer row_sum = 0;
        for (int k = 0; k <= n; ++k) row_sum += stirling2(n, k);
        REQUIRE(row_sum == bell(n));
    }
}

TEST_CASE("two-bell numbers match the bell difference") {
    REQUIRE(two_bell(10) == 562595);
    for (int n = 1; n <= 30; ++n) REQUIRE(two_bell(n) == bell(n + 1) - bell(n));
}

TEST_CASE("bell sequence is strictly log-convex") {
    for (int n = 1; n <= 30; ++n) REQUIRE(bell(n) * bell(n) < bell(n - 1) * bell(n + 1));
}

TEST_CASE("fibonacci and lucas with the pinned base cases") {
    REQUIRE(fibonacci(1) == 1);
    REQUIRE(fibonacci(2) == 1);
    REQUIRE(fibonacci(3) == 2);
    REQUIRE(fibonacci(30) == 832040);
    REQUIRE(lucas(1) == 1);
    REQUIRE(lucas(2) == 3);
    REQUIRE(lucas(30) == 1860498);
    for (int n = 2; n <= 30; ++n) REQUIRE(lucas(n) == fibonacci(n - 1) + fibonacci(n + 1));
}

TEST_CASE("binomial and factorial") {
    REQUIRE(binomial(30, 14) == 145422675);
    REQUIRE(binomial(5, 7) == 0);
    REQUIRE(factorial(20) == Integer("2432902008176640000"));
    REQUIRE(factorial(0) == 1);
}

TEST_CASE("negative inputs are rejected") {
    REQUIRE_THROWS_AS(bell(-1), std::invalid_argument);
    REQUIRE_THROWS_AS(stirling2(-2, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(fibonacci(-1), std::invalid_argument);
    REQUIRE_THROWS_AS(binomial(3, -1), std::invalid_argument);
    REQUIRE_THROWS_AS(factorial(-5), std::invalid_argument);
    REQUIRE_THROWS_AS(average_blocks(0), std::invalid_argument);
}

TEST_CASE("average block counts") {
    REQUIRE(average_blocks(1) == Rational(1));
    REQUIRE(average_blocks(2) == make_rational(3, 2));
    REQUIRE(average_blocks(3) == Rational(2));
}

TEST_CASE("rational construction and formatting") {
    REQUIRE(make_rational(30, 8) == make_rational(15, 4));
    REQUIRE(make_rational(-3, -6) == make_rational(1, 2));
    REQUIRE(denominator(make_rational(3, -6)) == 2);
    REQUIRE(numerator(make_rational(3, -6)) == -1);
    REQUIRE_THROWS_AS(make_rational(1, 0), std::invalid_argument);

    REQUIRE(to_fraction_string(make_rational(15, 4)) == "15/4");
    REQUIRE(to_fraction_string(Rational(3)) == "3/1");
    REQUIRE(to_decimal_string(make_rational(15, 4)) == "3.750000");
    REQUIRE(to_decimal_string(make_rational(1, 3)) == "0.333333");
    REQUIRE(to_decimal_string(make_rational(1, 6)) == "0.166667");
    REQUIRE(to_decimal_string(make_rational(-1, 6)) == "-0.166667");
    REQUIRE(to_decimal_string(make_rational(1, 2), 0) == "1");

    REQUIRE(round_to_places(make_rational(60, 17), 3) == make_rational(3529, 1000));
    REQUIRE(round_to_places(make_rational(7, 2), 3) == make_rational(3500, 1000));
}
