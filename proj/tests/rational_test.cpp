#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "besse/rational.hpp"

using besse::Rational;

TEST_CASE("construction reduces and fixes the sign of the denominator") {
  Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0, -7) == Rational(0));
  CHECK(Rational(0, -7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("exact arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) + Rational(1, 5) == Rational(31, 30));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 6) / Rational(-1, 3) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(-1, 3) < Rational(-1, 4));
  CHECK(Rational(7, 2) > Rational(3));
}

TEST_CASE("overflow is reported rather than wrapped") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(Rational(big) + Rational(1), std::overflow_error);
  CHECK_THROWS_AS(Rational(1, big) + Rational(1, big - 1), std::overflow_error);
  CHECK_THROWS_AS(-Rational(std::numeric_limits<std::int64_t>::min()), std::overflow_error);
  CHECK(Rational(big, 2) * Rational(2, big) == Rational(1));
}

TEST_CASE("canonical text form") {
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational(-1, 30).to_string() == "-1/30");
  CHECK(Rational(1, 30).to_string() == "+1/30");
  CHECK(Rational(2).to_string() == "+2/1");
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("+5") == Rational(5));
  CHECK(Rational::parse(Rational(-7, 9).to_string()) == Rational(-7, 9));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("+-1"), std::invalid_argument);
}

TEST_CASE("floor division rounds toward negative infinity") {
  CHECK(besse::floor_div(3, 2) == 1);
  CHECK(besse::floor_div(-3, 2) == -2);
  CHECK(besse::floor_div(-4, 2) == -2);
  CHECK(besse::floor_div(0, 5) == 0);
}

TEST_CASE("extended gcd satisfies the Bezout identity") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(-100000, 100000);
  for (int it = 0; it < 2000; ++it) {
    auto a = dist(rng), b = dist(rng);
    auto bz = besse::extended_gcd(a, b);
    CHECK(bz.gcd == std::gcd(a, b));
    CHECK(bz.x * a + bz.y * b == bz.gcd);
  }
}
