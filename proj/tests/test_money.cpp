#include <catch2/catch_amalgamated.hpp>

#include "bankdp/money.hpp"

using namespace bankdp;

TEST_CASE("money arithmetic is exact and checked") {
    Money a = Money::from_minor(12000);
    Money b = Money::from_minor(5000);
    CHECK((a + b).minor() == 17000);
    CHECK((a - b).minor() == 7000);
    CHECK((-b).minor() == -5000);
    CHECK(a > b);
    CHECK(Money{} == Money::from_minor(0));
}

TEST_CASE("money magnitude is capped at 2^62") {
    CHECK_NOTHROW(Money::from_minor(Money::kMaxMagnitude));
    CHECK_THROWS_AS(Money::from_minor(Money::kMaxMagnitude + 1), OverflowError);
    Money big = Money::from_minor(Money::kMaxMagnitude);
    CHECK_THROWS_AS(big + Money::from_minor(1), OverflowError);
    CHECK_THROWS_AS((-big) - Money::from_minor(1), OverflowError);
}

TEST_CASE("decimal rendering uses the currency exponent") {
    CHECK(Money::from_minor(11000).to_decimal(2) == "110.00");
    CHECK(Money::from_minor(5).to_decimal(2) == "0.05");
    CHECK(Money::from_minor(-205).to_decimal(2) == "-2.05");
    CHECK(Money::from_minor(-5).to_decimal(2) == "-0.05");
    CHECK(Money::from_minor(42).to_decimal(0) == "42");
}
