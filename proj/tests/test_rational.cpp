#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <paramod/rational.hpp>

#include <stdexcept>

using paramod::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(5, 1).num() == 5);
  CHECK(Rational(5, 1).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("field operations") {
  Rational a(1, 6), b(1, 10);
  CHECK(a + b == Rational(4, 15));
  CHECK(a - b == Rational(1, 15));
  CHECK(a * b == Rational(1, 60));
  CHECK(a / b == Rational(5, 3));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK(-a == Rational(-1, 6));
  Rational c(7, 3);
  c += Rational(2, 3);
  CHECK(c == Rational(3));
}

TEST_CASE("comparisons use exact cross multiplication") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(7, 5) > Rational(4, 3));
  // large numerators where double comparison would tie
  CHECK_FALSE(Rational(1000000000000001, 1000000000000000) >
              Rational(1000000000000000, 999999999999999));
  CHECK(Rational(1000000000000001, 1000000000000000) <
        Rational(1000000000000000, 999999999999999));
}

TEST_CASE("floor and mod1") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(3).floor() == 3);
  CHECK(Rational(-3).floor() == -3);
  CHECK(Rational(7, 2).mod1() == Rational(1, 2));
  CHECK(Rational(-7, 2).mod1() == Rational(1, 2));
  CHECK(Rational(-1, 48).mod1() == Rational(47, 48));
  CHECK(Rational(5).mod1() == Rational(0));
}

TEST_CASE("pow and abs") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK(Rational(-2, 3).abs() == Rational(2, 3));
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("string round trip") {
  CHECK(Rational(-3, 7).str() == "-3/7");
  CHECK(Rational(4).str() == "4");
  CHECK(Rational::parse("-3/7") == Rational(-3, 7));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
}

TEST_CASE("overflow is detected, not wrapped") {
  Rational big(1, 1);
  long long huge = 3037000499LL;  // ~sqrt(2^63)
  Rational h(huge, 1);
  CHECK_THROWS_AS((h * h) * (h * h), std::overflow_error);
}

TEST_CASE("to_double") {
  CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
  CHECK(Rational(-1, 3).to_double() == doctest::Approx(-1.0 / 3.0));
}
