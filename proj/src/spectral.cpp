#include "eulerdiff/spectral.hpp"

#include <array>
#include <cmath>
#include <string>

namespace eulerdiff {

namespace {

using Complex = std::complex<double>;

// Writes the n+1 ascending coefficients of e^{ax} int e^{-ax} x^n dx:
// coefficient m is -(n!/m!) a^{m-n-1}.
void exp_poly_integral_coeffs(Complex a, unsigned n, Complex* out) {
  const Complex inv = 1.0 / a;
  Complex inv_pow{1.0, 0.0};
  double ratio = 1.0;  // n!/m!
  for (unsigned m = n + 1; m-- > 0;) {
    inv_pow *= inv;
    out[m] = -ratio * inv_pow;
    ratio *= static_cast<double>(m);
  }
}

std::vector<double> to_doubles(const Polynomial& g) {
  std::vector<double> out;
  out.reserve(g.coefficients().size());
  for (const auto& c : g.coefficients()) out.push_back(c.to_double());
  return out;
}

ComplexPolynomial mode_pair_from_doubles(std::span<const double> g, long k) {
  const Complex a{0.0, kernels::kTwoPi * static_cast<double>(k)};
  std::vector<Complex> out(g.size());
  std::array<Complex, kMaxSpectralDegree + 1> plus{};
  std::array<Complex, kMaxSpectralDegree + 1> minus{};
  for (std::size_t n = 0; n < g.size(); ++n) {
    if (g[n] == 0.0) continue;
    exp_poly_integral_coeffs(a, static_cast<unsigned>(n), plus.data());
    exp_poly_integral_coeffs(-a, static_cast<unsigned>(n), minus.data());
    for (std::size_t m = 0; m <= n; ++m) out[m] += g[n] * (plus[m] + minus[m]);
  }
  return ComplexPolynomial(std::move(out));
}

void check_degree(const Polynomial& g) {
  if (g.degree() > kMaxSpectralDegree) {
    throw DegreeOverflow("forcing degree " + std::to_string(g.degree()) + " exceeds " +
                         std::to_string(kMaxSpectralDegree));
  }
}

}  // namespace

ComplexPolynomial exp_poly_integral(std::complex<double> a, unsigned n) {
  if (a == Complex{}) throw std::invalid_argument("exp_poly_integral requires a nonzero exponent");
  std::vector<Complex> out(n + 1);
  exp_poly_integral_coeffs(a, n, out.data());
  return ComplexPolynomial(std::move(out));
}

Polynomial iterated_integral(const Polynomial& g, unsigned n) {
  if (n == 0) throw std::invalid_argument("iterated_integral needs n >= 1");
  // int_0^x (x-t)^{n-1} t^m dt = x^{n+m} sum_i C(n-1, i) (-1)^i / (i+m+1)
  const auto& c = g.coefficients();
  if (c.empty()) return {};
  const Rational inv_fact(BigInt(1), factorial(n - 1));
  std::vector<Rational> out(c.size() + n);
  for (std::size_t m = 0; m < c.size(); ++m) {
    if (c[m].is_zero()) continue;
    Rational kernel;
    for (unsigned i = 0; i < n; ++i) {
      Rational term = binomial(n - 1, i) / Rational(static_cast<long>(i + m + 1));
      kernel += (i % 2 == 0) ? term : -term;
    }
    out[m + n] = c[m] * kernel * inv_fact;
  }
  return Polynomial(std::move(out));
}

ComplexPolynomial mode_pair_term(const Polynomial& g, long k) {
  check_degree(g);
  if (k < 1) throw std::invalid_argument("mode index must be positive");
  const auto gd = to_doubles(g);
  return mode_pair_from_doubles(gd, k);
}

SpectralSolution spectral_solve(const Polynomial& g, const SpectralConfig& config) {
  check_degree(g);
  if (config.truncation_order < 1) throw std::invalid_argument("truncation order K must be >= 1");

  Polynomial exact = poly_antiderivative(g);
  if (config.include_correction) exact -= g * Rational(1, 2);

  const auto gd = to_doubles(g);
  ComplexPolynomial modes = kernels::ordered_pair_sum(
      config.truncation_order, [&gd](long k) { return mode_pair_from_doubles(gd, k); },
      ComplexPolynomial{}, config.execution);

  return SpectralSolution{to_complex(exact) + modes, config};
}

double euler_gap(const Polynomial& g, double x, long K) {
  SpectralConfig config;
  config.truncation_order = K;
  config.include_correction = false;
  const auto uncorrected = spectral_solve(g, config);
  config.include_correction = true;
  const auto corrected = spectral_solve(g, config);
  return uncorrected(x).real() - corrected(x).real();
}

std::vector<double> difference_residual(const SpectralSolution& s, const Polynomial& g,
                                        std::span<const double> xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    if (!std::isfinite(x) || std::fabs(x) > 10.0) {
      throw std::invalid_argument("residual sample outside [-10, 10]");
    }
    out.push_back(std::abs(s(x + 1.0) - s(x) - g.evaluate(x)));
  }
  return out;
}

}  // namespace eulerdiff
