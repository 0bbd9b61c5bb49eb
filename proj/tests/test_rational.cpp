#include <doctest.h>

#include "lpa/rational.hpp"

using lpa::Rational;

TEST_CASE("rational parsing and printing") {
  CHECK(lpa::to_string(lpa::parse_rational("3")) == "3");
  CHECK(lpa::to_string(lpa::parse_rational("-3")) == "-3");
  CHECK(lpa::to_string(lpa::parse_rational("1/2")) == "1/2");
  CHECK(lpa::to_string(lpa::parse_rational("-6/4")) == "-3/2");
  CHECK(lpa::parse_rational("2/4") == Rational(1, 2));
}

TEST_CASE("rational parse errors") {
  CHECK_THROWS_AS(lpa::parse_rational(""), lpa::Error);
  CHECK_THROWS_AS(lpa::parse_rational("1/0"), lpa::Error);
  CHECK_THROWS_AS(lpa::parse_rational("1/"), lpa::Error);
  CHECK_THROWS_AS(lpa::parse_rational("x"), lpa::Error);
}

TEST_CASE("arithmetic is exact") {
  Rational third(1, 3);
  Rational sum = third + third + third;
  CHECK(sum == 1);
  Rational tiny(1, 1000000007LL);
  CHECK(tiny * Rational(1000000007LL) == 1);
}
