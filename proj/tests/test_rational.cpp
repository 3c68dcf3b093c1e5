#include <doctest.h>

#include <cstdint>

#include "pdtest/rational.hpp"

using pdtest::OverflowError;
using pdtest::ParseError;
using pdtest::Rational;

TEST_CASE("rationals normalize on construction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-6, 8) == Rational(-3, 4));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-5, -10) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(7, 7).num() == 1);
    CHECK(Rational(7, 7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), pdtest::Error);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(3, 5) == Rational(-3, 5));
    CHECK(Rational(1, 3) + Rational(-1, 3) == Rational(0));
    CHECK_THROWS_AS(Rational(1) / Rational(0), pdtest::Error);
}

TEST_CASE("rational comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(5) > Rational(0));
    CHECK(Rational(-7, 2) != Rational(7, 2));
}

TEST_CASE("rational overflow raises instead of wrapping") {
    const Rational big(INT64_MAX);
    CHECK_THROWS_AS(big + Rational(1), OverflowError);
    CHECK_THROWS_AS(big * Rational(2), OverflowError);
    // 128-bit intermediates keep legitimate results alive
    CHECK(Rational(INT64_MAX, 2) * Rational(2, INT64_MAX) == Rational(1));
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-12") == Rational(-12));
    CHECK(Rational::parse("+7") == Rational(7));
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("0/9") == Rational(0));

    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/+2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("/2"), ParseError);
}

TEST_CASE("rational to_string round-trips") {
    for (const Rational r : {Rational(0), Rational(-17), Rational(3, 7), Rational(-22, 9)}) {
        CHECK(Rational::parse(r.to_string()) == r);
    }
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational(-1, 2).to_string() == "-1/2");
}

TEST_CASE("integer accessors") {
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).to_int64() == 2);
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK_THROWS_AS(Rational(1, 2).to_int64(), pdtest::Error);
}
