#include "eulerdiff/zeta.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <stdexcept>

#include "eulerdiff/bernoulli.hpp"
#include "eulerdiff/pfd.hpp"

namespace eulerdiff {

namespace {

constexpr long double kPiLong = 3.141592653589793238462643383279502884L;

long double to_long_double(const Rational& r) {
  const BigInt num = r.numerator();
  const BigInt den = r.denominator();
  if (num.fits_slong_p() && den.fits_slong_p()) {
    return static_cast<long double>(num.get_si()) / static_cast<long double>(den.get_si());
  }
  return static_cast<long double>(r.to_double());
}

double round_down(long double v) {
  double d = static_cast<double>(v);
  if (static_cast<long double>(d) > v) d = std::nextafter(d, -INFINITY);
  return d;
}

double round_up(long double v) {
  double d = static_cast<double>(v);
  if (static_cast<long double>(d) < v) d = std::nextafter(d, INFINITY);
  return d;
}

}  // namespace

double ZetaClosedForm::value() const {
  return static_cast<double>(to_long_double(coefficient) * std::pow(kPiLong, static_cast<int>(pi_power)));
}

std::string ZetaClosedForm::to_string() const {
  return coefficient.to_string() + "*pi^" + std::to_string(pi_power);
}

ZetaClosedForm zeta_even_closed_form(unsigned j) {
  if (j == 0) throw std::invalid_argument("zeta_even_closed_form needs j >= 1");
  // (-1)^{j-1} (2 pi)^{2j} B_{2j} / (2 (2j)!)
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * j - 1);
  Rational c = Rational(two_pow) * bernoulli(2 * j) / Rational(factorial(2 * j));
  if (j % 2 == 0) c = -c;
  return ZetaClosedForm{j, c, 2 * j};
}

ZetaBracket zeta_partial_sum(unsigned j, long N) {
  if (j == 0) throw std::invalid_argument("zeta_partial_sum needs j >= 1");
  if (N < 2) throw std::invalid_argument("zeta_partial_sum needs N >= 2");

  // Smallest terms first.
  long double sum = 0.0L;
  for (long k = N; k >= 1; --k) {
    const long double kk = static_cast<long double>(k);
    const long double inv_sq = 1.0L / (kk * kk);
    long double term = 1.0L;
    for (unsigned i = 0; i < j; ++i) term *= inv_sq;
    sum += term;
  }
  const long double s = 2.0L * j;
  const long double tail_lo = std::pow(static_cast<long double>(N + 1), 1.0L - s) / (s - 1.0L);
  const long double tail_hi = std::pow(static_cast<long double>(N), 1.0L - s) / (s - 1.0L);

  // Each term carries about j+1 roundings and the running sum N more.
  const long double slack = 2.0L * static_cast<long double>(N + 2 * j + 4) * LDBL_EPSILON * (sum + tail_hi);

  return ZetaBracket{round_down(sum + tail_lo - slack), round_up(sum + tail_hi + slack)};
}

CoefficientTables coefficient_tables(unsigned n, long K, Execution execution) {
  if (n < 1 || n > 12) throw std::invalid_argument("coefficient_tables needs 1 <= n <= 12");
  if (K < 1) throw std::invalid_argument("truncation order K must be >= 1");

  CoefficientTables t;
  t.n = n;
  t.K = K;
  t.a.resize(n + 1);
  t.b.resize(n + 1);
  const Rational inv_n1(1L, static_cast<long>(n + 1));
  for (unsigned j = 0; j <= n; ++j) {
    double ratio = 1.0;  // n!/j!
    for (unsigned i = j + 1; i <= n; ++i) ratio *= static_cast<double>(i);
    const int power = static_cast<int>(j) - static_cast<int>(n + 1);
    t.a[j] = -ratio * mode_power_sum(power, K, execution);
    if (j >= 2) t.b[j] = inv_n1 * binomial(n + 1, j) * bernoulli(j);
  }
  return t;
}

double verify_comparison(unsigned n, long K, Execution execution) {
  const auto t = coefficient_tables(n, K, execution);
  double worst = 0.0;
  for (unsigned j = 2; j <= n; ++j) {
    worst = std::max(worst, std::abs(t.a[n + 1 - j] - t.b[j].to_double()));
  }
  return worst;
}

}  // namespace eulerdiff
