#pragma once

/**
 * @file spectral.hpp
 * @brief Mode-sum solution of f(x+1) - f(x) = g(x) for polynomial g.
 *
 * Writing the difference operator as e^D - 1 and expanding its reciprocal
 * over the zeros 2k*pi*i gives
 *
 *     f(x) = -g(x)/2 + int g dx + sum_{k != 0} e^{2k pi i x} int e^{-2k pi i x} g dx,
 *
 * where each mode integral of a monomial has the closed form
 *
 *     e^{ax} int e^{-ax} x^n dx = -(1/a^{n+1}) sum_{m=0}^{n} (n!/m!) a^m x^m.
 *
 * Every integration constant is taken as zero, which selects one particular
 * solution out of the family f + h with h 1-periodic. Dropping the -g/2 term
 * gives the uncorrected formula, whose Delta misses g by exactly g/2.
 */

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "eulerdiff/kernels.hpp"
#include "eulerdiff/polynomial.hpp"

namespace eulerdiff {

/// Highest forcing degree accepted by spectral_solve.
inline constexpr int kMaxSpectralDegree = 30;

class DegreeOverflow : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct SpectralConfig {
  long truncation_order = 100;  ///< K: modes 1 <= |k| <= K
  bool include_correction = true;
  Execution execution = Execution::Parallel;
};

struct SpectralSolution {
  ComplexPolynomial polynomial_part;
  SpectralConfig config;

  std::complex<double> operator()(double x) const { return polynomial_part(x); }
};

/// e^{ax} int e^{-ax} x^n dx with zero integration constant. Throws
/// std::invalid_argument for a == 0.
ComplexPolynomial exp_poly_integral(std::complex<double> a, unsigned n);

/// n-fold integral from 0, evaluated through the Cauchy kernel
/// int_0^x (x-t)^{n-1}/(n-1)! g(t) dt. Throws std::invalid_argument for n == 0.
Polynomial iterated_integral(const Polynomial& g, unsigned n);

/// Contribution of the modes +-k (k >= 1) for forcing g.
ComplexPolynomial mode_pair_term(const Polynomial& g, long k);

SpectralSolution spectral_solve(const Polynomial& g, const SpectralConfig& config);

/// Uncorrected minus corrected solution at x.
double euler_gap(const Polynomial& g, double x, long K);

/// |s(x+1) - s(x) - g(x)| per sample; samples must lie in [-10, 10].
std::vector<double> difference_residual(const SpectralSolution& s, const Polynomial& g,
                                        std::span<const double> xs);

}  // namespace eulerdiff
