#pragma once

/**
 * @file zeta.hpp
 * @brief Even zeta values from the Bernoulli numbers, an integral-test
 *        bracket to check them against, and the A/B coefficient tables that
 *        connect the two solutions of f(x+1) - f(x) = x^n.
 *
 * The spectral solution of Delta f = x^n carries, as coefficient of x^j,
 *
 *     A(n, j) = -(n!/j!) sum_{k != 0} (2k pi i)^{j-(n+1)},
 *
 * while the Faulhaber side carries B(n, j) = C(n+1, j) B_j / (n+1) at the
 * power x^{n+1-j} (j >= 2; zero otherwise). The two agree as
 * A(n, n+1-j) = B(n, j), which rearranges to
 *
 *     zeta(2j) = (-1)^{j-1} (2 pi)^{2j} B_{2j} / (2 (2j)!).
 *
 * A is computed by truncated mode summation only, never through B_j.
 */

#include <complex>
#include <string>
#include <vector>

#include "eulerdiff/kernels.hpp"
#include "eulerdiff/rational.hpp"

namespace eulerdiff {

/// coefficient * pi^pi_power.
struct ZetaClosedForm {
  unsigned j = 1;
  Rational coefficient;
  unsigned pi_power = 2;

  double value() const;
  std::string to_string() const;  // "1/6*pi^2"
};

struct ZetaBracket {
  double lower = 0.0;
  double upper = 0.0;

  bool contains(double v) const { return lower <= v && v <= upper; }
  double width() const { return upper - lower; }
};

ZetaClosedForm zeta_even_closed_form(unsigned j);

/// [S_N + int_{N+1}^inf t^{-2j} dt, S_N + int_N^inf t^{-2j} dt], widened
/// outward by a bound on the floating-point summation error.
ZetaBracket zeta_partial_sum(unsigned j, long N);

struct CoefficientTables {
  unsigned n = 1;
  long K = 1;
  std::vector<std::complex<double>> a;  ///< a[j] = A(n, j), j = 0..n
  std::vector<Rational> b;              ///< b[j] = B(n, j), j = 0..n
};

/// Requires 1 <= n <= 12.
CoefficientTables coefficient_tables(unsigned n, long K, Execution execution = Execution::Parallel);

/// max_{2 <= j <= n} |A(n, n+1-j) - B(n, j)|; zero for n = 1.
double verify_comparison(unsigned n, long K, Execution execution = Execution::Parallel);

}  // namespace eulerdiff
