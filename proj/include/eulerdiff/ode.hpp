#pragma once

/**
 * @file ode.hpp
 * @brief Constant-coefficient linear ODEs with polynomial forcing, solved
 *        root by root.
 *
 * For (a_0 + a_1 D + ... + a_n D^n) f = g with simple characteristic roots r,
 *
 *     f = sum_r e^{rx} / P'(r) * int e^{-rx} g dx,
 *
 * with every integration constant zero. For polynomial g each summand is
 * itself a polynomial, so the result is a single exponent-0 term.
 */

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerdiff/polynomial.hpp"

namespace eulerdiff {

class MultipleRootUnsupported : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class RootFinderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// P(z) = a_0 + a_1 z + ... + a_n z^n with n >= 1 and a_n != 0.
class CharacteristicPolynomial {
 public:
  using Scalar = std::complex<double>;

  explicit CharacteristicPolynomial(std::vector<Scalar> ascending);

  /// leading * prod (z - r).
  static CharacteristicPolynomial from_roots(const std::vector<Scalar>& roots,
                                             Scalar leading = {1.0, 0.0});

  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Scalar operator()(Scalar z) const;
  /// Coefficients of P'(z), exact differentiation.
  std::vector<Scalar> derivative_coefficients() const;
  double max_abs_coefficient() const;

 private:
  std::vector<Scalar> coeffs_;
};

struct RootFinderOptions {
  double tolerance = 1e-12;
  int max_iterations = 200;
};

struct ExpPolyTerm {
  std::complex<double> exponent;
  ComplexPolynomial poly;
};

/// Finite sum of e^{alpha x} p(x). Exponents closer than kExponentMergeTol
/// are merged and zero polynomials are dropped.
class ExpPoly {
 public:
  static constexpr double kExponentMergeTol = 1e-9;

  ExpPoly() = default;

  void add(std::complex<double> exponent, const ComplexPolynomial& poly);
  const std::vector<ExpPolyTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  std::complex<double> operator()(std::complex<double> x) const;
  std::string to_string() const;

 private:
  std::vector<ExpPolyTerm> terms_;
};

/// All n roots via Aberth-Ehrlich iteration and Newton polish, sorted by
/// (real, imag). Throws MultipleRootUnsupported when two roots are closer
/// than 1e-6, RootFinderError when the budget runs out.
std::vector<std::complex<double>> find_roots(const CharacteristicPolynomial& p,
                                             const RootFinderOptions& options = {});

ExpPoly solve_linear_ode(const CharacteristicPolynomial& p, const Polynomial& g,
                         const RootFinderOptions& options = {});

/// sum_i a_i f^{(i)}, term by term via (e^{ax} p)' = e^{ax} (a p + p').
ExpPoly apply_operator(const CharacteristicPolynomial& p, const ExpPoly& f);

}  // namespace eulerdiff
