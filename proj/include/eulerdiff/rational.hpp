#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational arithmetic over arbitrary-precision integers.
 *
 * Values are kept in canonical form after every operation: the denominator
 * is positive and coprime to the numerator, and zero is 0/1. Equality is
 * therefore structural.
 *
 * Textual form is "p/q", with "/q" omitted when q = 1.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eulerdiff {

using BigInt = mpz_class;

/// Raised when a textual literal does not match the documented grammar.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  explicit Rational(const BigInt& value) : value_(value) {}
  Rational(const BigInt& numerator, const BigInt& denominator);
  Rational(long numerator, long denominator);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Nearest-toward-zero double; the only float conversion offered.
  double to_double() const { return value_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error when rhs is zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const;

  /// Accepts `[+-]?digits(/digits)?` with a nonzero denominator.
  static Rational parse(std::string_view text);

  /// Accepts a decimal such as `-0.125`, `3` or `8.5e-07`, converted exactly.
  static Rational parse_decimal(std::string_view text);

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! for n >= 0.
BigInt factorial(unsigned n);

/// C(n, k) as an integer-valued Rational; zero outside 0 <= k <= n.
Rational binomial(unsigned n, long k);

}  // namespace eulerdiff
