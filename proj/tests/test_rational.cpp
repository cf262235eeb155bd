#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "eulerdiff/rational.hpp"
#include "oracles.hpp"

using eulerdiff::BigInt;
using eulerdiff::binomial;
using eulerdiff::factorial;
using eulerdiff::ParseError;
using eulerdiff::Rational;

TEST_CASE("canonical form") {
  const Rational r(BigInt(6), BigInt(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("division by zero is reported") {
  CHECK_THROWS_AS(Rational(1, 3) / Rational(0), std::domain_error);
}

TEST_CASE("rendering and parsing") {
  CHECK(Rational(-691, 2730).to_string() == "-691/2730");
  CHECK(Rational(10).to_string() == "10");
  CHECK(Rational::parse("-691/2730") == Rational(-691, 2730));
  CHECK(Rational::parse("10") == Rational(10));
  CHECK(Rational::parse("+4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
}

TEST_CASE("decimal parsing is exact") {
  CHECK(Rational::parse_decimal("0.125") == Rational(1, 8));
  CHECK(Rational::parse_decimal("-2.5") == Rational(-5, 2));
  CHECK(Rational::parse_decimal("3") == Rational(3));
  CHECK(Rational::parse_decimal("8.5e-07") == Rational(BigInt(85), BigInt(100000000)));
  CHECK(Rational::parse_decimal("1.5E+2") == Rational(150));
  CHECK(Rational::parse_decimal(".5") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse_decimal("."), ParseError);
  CHECK_THROWS_AS(Rational::parse_decimal("1e"), ParseError);
  CHECK_THROWS_AS(Rational::parse_decimal("1..2"), ParseError);
}

TEST_CASE("binomial examples and Pascal oracle") {
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(7, 0) == Rational(1));
  CHECK(binomial(4, 6) == Rational(0));
  CHECK(binomial(4, -1) == Rational(0));

  const auto pascal = oracle::pascal_triangle(40);
  for (unsigned n = 0; n < 40; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == Rational(BigInt(static_cast<long>(pascal[n][k]))));
    }
  }
  for (unsigned n = 2; n < 40; ++n) {
    for (long k = 1; k < static_cast<long>(n); ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(factorial(12) == 479001600);
  for (unsigned n = 1; n <= 40; ++n) {
    CHECK(factorial(n) == factorial(n - 1) * n);
    CHECK(factorial(n) == oracle::iterated_factorial(n));
  }
}

TEST_CASE("property: exact round trips") {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 100000);
  for (int i = 0; i < 500; ++i) {
    const Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK(Rational::parse(a.to_string()) == a);
    CHECK(std::gcd(a.numerator().get_si(), a.denominator().get_si()) == 1);
    CHECK(a.denominator() > 0);
  }
}
