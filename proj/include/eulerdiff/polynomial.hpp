#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over Rational and over complex<double>.
 *
 * Coefficients are stored in ascending order: index i holds the coefficient
 * of x^i. The highest stored coefficient is never zero; the zero polynomial
 * is the empty sequence and has degree kZeroDegree.
 *
 * Exact and floating-point polynomials never mix implicitly. The single
 * crossing point is to_complex().
 */

#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eulerdiff/rational.hpp"

namespace eulerdiff {

/// Degree of the zero polynomial ("minus infinity").
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(unsigned power, const Rational& c = Rational(1));

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i, zero past the degree.
  Rational coefficient(std::size_t i) const;
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Descending powers, e.g. "1/2*x^2 - 1/2*x"; the zero polynomial is "0".
  std::string to_string() const;

  /// Terms `c*x^k` joined by `+`/`-`. `c` is a rational "p/q" or a decimal;
  /// `c*` may be omitted and `x^1` may be written `x`. Throws ParseError.
  static Polynomial parse(std::string_view text);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

class ComplexPolynomial {
 public:
  using Scalar = std::complex<double>;

  ComplexPolynomial() = default;
  explicit ComplexPolynomial(std::vector<Scalar> ascending);

  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar{}; }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Scalar operator()(Scalar x) const;

  /// Largest |Im c| over the coefficients.
  double max_imag() const;

  ComplexPolynomial& operator+=(const ComplexPolynomial& rhs);
  ComplexPolynomial& operator-=(const ComplexPolynomial& rhs);
  ComplexPolynomial& operator*=(Scalar scalar);

  friend ComplexPolynomial operator+(ComplexPolynomial a, const ComplexPolynomial& b) { return a += b; }
  friend ComplexPolynomial operator-(ComplexPolynomial a, const ComplexPolynomial& b) { return a -= b; }
  friend ComplexPolynomial operator*(ComplexPolynomial a, Scalar s) { return a *= s; }
  friend ComplexPolynomial operator*(Scalar s, ComplexPolynomial a) { return a *= s; }
  friend bool operator==(const ComplexPolynomial& a, const ComplexPolynomial& b) = default;

  /// Descending powers with parenthesised complex coefficients.
  std::string to_string() const;
  /// Real parts only, in the Polynomial grammar (decimal coefficients).
  std::string real_part_string() const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

Polynomial derivative(const Polynomial& p);
ComplexPolynomial derivative(const ComplexPolynomial& p);

/// P with P' = p and P(0) = 0.
Polynomial poly_antiderivative(const Polynomial& p);

/// q(x) = p(x + h), by binomial expansion.
Polynomial poly_shift(const Polynomial& p, const Rational& h = Rational(1));

/// p(x + 1) - p(x).
Polynomial forward_difference(const Polynomial& p);

/// Explicit exact-to-float conversion.
ComplexPolynomial to_complex(const Polynomial& p);

}  // namespace eulerdiff
