#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fictio/rational.hpp"
#include "fictio/sampling.hpp"

using fictio::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
  CHECK(Rational(3, 6) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational(7, 7).denominator_string() == "1");
  CHECK_THROWS_AS(Rational(1, 0), fictio::DivisionByZero);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(3, 5) == Rational(-3, 5));
  CHECK_THROWS_AS(Rational(1) / Rational(0), fictio::DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), fictio::DivisionByZero);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(10, 5) == Rational(2));
  CHECK(Rational(1, 1000000) > Rational(0));
}

TEST_CASE("string parsing") {
  CHECK(Rational::from_string("3/4") == Rational(3, 4));
  CHECK(Rational::from_string("-3/4") == Rational(-3, 4));
  CHECK(Rational::from_string("6/4") == Rational(3, 2));
  CHECK(Rational::from_string("42") == Rational(42));
  CHECK(Rational::from_string("  -7 ") == Rational(-7));
  CHECK(Rational::from_string("2.5") == Rational(5, 2));
  CHECK(Rational::from_string("0.125") == Rational(1, 8));
  CHECK(Rational::from_string("1e-3") == Rational(1, 1000));
  CHECK(Rational::from_string("2.5e2") == Rational(250));
  CHECK_THROWS_AS(Rational::from_string("1/0"), fictio::DivisionByZero);
  CHECK_THROWS_AS(Rational::from_string(""), fictio::ParseError);
  CHECK_THROWS_AS(Rational::from_string("abc"), fictio::ParseError);
  CHECK_THROWS_AS(Rational::from_string("1.2.3"), fictio::ParseError);
}

TEST_CASE("to_string round-trips") {
  fictio::Sampler rng(7);
  for (int i = 0; i < 500; ++i) {
    Rational q = rng.rational(10000, 10000, true);
    CHECK(Rational::from_string(q.to_string()) == q);
  }
}

TEST_CASE("pow, floor, helpers") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2).pow(-2) == Rational(1, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK(Rational::pow2(10) == Rational(1024));
  CHECK(Rational::pow2(-3) == Rational(1, 8));
  CHECK(Rational(7, 2).floor() == Rational(3));
  CHECK(Rational(-7, 2).floor() == Rational(-4));
  CHECK(Rational(7, 2).floor_to_long() == 3);
  CHECK(Rational::factorial(5) == Rational(120));
  CHECK(Rational(-3, 4).abs() == Rational(3, 4));
  CHECK(Rational(-3, 4).sign() == -1);
  CHECK(Rational(5).is_integer());
  CHECK_FALSE(Rational(5, 2).is_integer());
}
