#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbop/errors.hpp"
#include "hilbop/rational.hpp"

using namespace hilbop;

TEST_CASE("canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(0, 7).is_zero());
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(5).str() == "5/1");
  CHECK_THROWS_AS(Rational(1, 0), domain_error);
}

TEST_CASE("exact arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), domain_error);
  CHECK(Rational(1, 7).inverse() == Rational(7));
  CHECK(Rational(-2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(2).pow(10) == Rational(1024));
}

TEST_CASE("big values stay exact") {
  Rational big = Rational::factorial(25);
  CHECK(big.str() == "15511210043330985984000000/1");
  Rational r(1);
  for (int k = 1; k <= 25; ++k) r *= Rational(1, k);
  CHECK(r * big == Rational(1));
  CHECK(Rational::binomial(30, 15) == Rational(155117520));
}

TEST_CASE("parse round trip") {
  for (const char* s : {"0/1", "1/2", "-7/3", "123456789012345678901234567891/4"}) {
    CHECK(Rational::parse(s).str() == s);
  }
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(Rational::parse("x"), structural_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), domain_error);
}

TEST_CASE("ordering and integers") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).to_long() == 2);
  CHECK_THROWS_AS(Rational(1, 2).to_long(), domain_error);
}
