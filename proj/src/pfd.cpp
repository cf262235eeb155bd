#include "eulerdiff/pfd.hpp"

#include <cmath>
#include <string>

namespace eulerdiff {

namespace {

void check_poles(std::complex<double> z, long K) {
  const long limit = K + 1;
  long nearest = std::lround(z.imag() / kernels::kTwoPi);
  if (nearest > limit) nearest = limit;
  if (nearest < -limit) nearest = -limit;
  const std::complex<double> pole{0.0, kernels::kTwoPi * static_cast<double>(nearest)};
  if (std::abs(z - pole) <= kPoleExclusion) {
    throw PoleProximityError(nearest, "z lies within " + std::to_string(kPoleExclusion) +
                                          " of the pole at k = " + std::to_string(nearest));
  }
}

}  // namespace

PfdParts pfd_parts(std::complex<double> z, long K, Execution execution) {
  if (K < 1) throw std::invalid_argument("truncation order K must be >= 1");
  check_poles(z, K);
  PfdParts parts;
  parts.pole = 1.0 / z;
  parts.mode_sum = kernels::ordered_pair_sum(
      K, [z](long k) { return kernels::pfd_pair(z, k); }, std::complex<double>{}, execution);
  return parts;
}

std::complex<double> pfd_eval(std::complex<double> z, long K, Execution execution) {
  return pfd_parts(z, K, execution).value();
}

std::complex<double> reciprocal_exp_minus_one(std::complex<double> z) {
  // e^{x+iy} - 1 = (expm1(x) cos y - 2 sin^2(y/2)) + i e^x sin y
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(0.5 * y);
  const std::complex<double> denom{std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
  return 1.0 / denom;
}

std::vector<std::complex<double>> characteristic_zeros(long K) {
  if (K < 1) throw std::invalid_argument("K must be >= 1");
  std::vector<std::complex<double>> zeros;
  zeros.reserve(static_cast<std::size_t>(2 * K + 1));
  zeros.emplace_back(0.0, 0.0);
  for (long k = 1; k <= K; ++k) {
    const double w = kernels::kTwoPi * static_cast<double>(k);
    zeros.emplace_back(0.0, w);
    zeros.emplace_back(0.0, -w);
  }
  return zeros;
}

std::complex<double> mode_power_sum(int power, long K, Execution execution) {
  if (K < 1) throw std::invalid_argument("K must be >= 1");
  return kernels::ordered_pair_sum(
      K, [power](long k) { return kernels::mode_power_pair(k, power); }, std::complex<double>{},
      execution);
}

std::complex<double> laurent_from_modes(unsigned j, long K, Execution execution) {
  return -mode_power_sum(-static_cast<int>(j + 1), K, execution);
}

}  // namespace eulerdiff
