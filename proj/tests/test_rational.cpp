#include <doctest.h>

#include "a1score/rational.hpp"

using a1::Rational;

TEST_CASE("rationals normalize") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-3, -6).num() == 1);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic and ordering") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(7, 2).to_string() == "7/2");
  CHECK(Rational(4).to_string() == "4");
}

TEST_CASE("overflow is detected, not wrapped") {
  Rational big(INT64_MAX / 2 + 1);
  CHECK_THROWS_AS(big * Rational(4), std::overflow_error);
  CHECK_THROWS_AS(big + big + big, std::overflow_error);
}

TEST_CASE("exact powers") {
  CHECK(*a1::exact_pow(Rational(4, 9), Rational(1, 2)) == Rational(2, 3));
  CHECK(*a1::exact_pow(Rational(2), Rational(-3)) == Rational(1, 8));
  CHECK(*a1::exact_pow(Rational(8), Rational(2, 3)) == Rational(4));
  CHECK(*a1::exact_pow(Rational(5), Rational(0)) == Rational(1));
  CHECK_FALSE(a1::exact_pow(Rational(2), Rational(1, 2)).has_value());
  CHECK_FALSE(a1::exact_pow(Rational(10), Rational(40)).has_value());
}

TEST_CASE("parse_rational") {
  CHECK(a1::parse_rational("12") == Rational(12));
  CHECK(a1::parse_rational("1.25") == Rational(5, 4));
  CHECK(a1::parse_rational("3/4") == Rational(3, 4));
  CHECK(a1::parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(a1::parse_rational("3/0"), std::invalid_argument);
  CHECK_THROWS_AS(a1::parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(a1::parse_rational("99999999999999999999"), std::overflow_error);
}
