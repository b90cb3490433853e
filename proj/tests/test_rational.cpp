#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <climits>
#include <sstream>

#include "circhi/rational.hpp"

using namespace circhi;

TEST_CASE("construction reduces and normalizes the sign") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(-Rational(3, 7) == Rational(-3, 7));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("comparisons decide close fractions exactly") {
    CHECK(Rational(60, 17) > Rational(7, 2));
    CHECK(Rational(11, 3) > Rational(60, 17));
    CHECK(Rational(8, 3) < Rational(27, 10));
    CHECK(Rational(1, 3) <= Rational(1, 3));
    // Cross products near the 64-bit limit still compare correctly.
    Rational big(LLONG_MAX / 2, LLONG_MAX / 2 - 1);
    Rational bigger(LLONG_MAX / 2 + 1, LLONG_MAX / 2);
    CHECK(bigger < big);
}

TEST_CASE("overflow raises instead of wrapping") {
    Rational huge(LLONG_MAX, 1);
    CHECK_THROWS_AS(huge + huge, OverflowError);
    CHECK_THROWS_AS(huge * Rational(2), OverflowError);
}

TEST_CASE("parse and print round trip") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK(Rational(5, 2).str() == "5/2");
    CHECK(Rational(-7).str() == "-7");
    CHECK(Rational(4, 2).str() == "2");
    CHECK_THROWS_AS(Rational::parse("x/2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
    std::ostringstream out;
    out << Rational(8, 3);
    CHECK(out.str() == "8/3");
}

TEST_CASE("rational_mod lands in [0, modulus)") {
    CHECK(rational_mod(Rational(7, 2), Rational(2)) == Rational(3, 2));
    CHECK(rational_mod(Rational(-1, 2), Rational(2)) == Rational(3, 2));
    CHECK(rational_mod(Rational(4), Rational(2)) == Rational(0));
    CHECK(rational_mod(Rational(13, 5), Rational(8, 3)) == Rational(13, 5));
    CHECK_THROWS_AS(rational_mod(Rational(1), Rational(0)), DomainError);
}
