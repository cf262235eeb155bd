#pragma once

/**
 * @file pfd.hpp
 * @brief Truncated partial fraction expansion of 1/(e^z - 1) over its poles.
 *
 *     1/(e^z - 1) = -1/2 + 1/z + sum_{k >= 1} 2z / (z^2 + 4 pi^2 k^2)
 *
 * The k-sum is only meaningful as a symmetric (+-k paired) limit.
 */

#include <complex>
#include <stdexcept>
#include <vector>

#include "eulerdiff/kernels.hpp"

namespace eulerdiff {

/// Pole exclusion radius around each 2k*pi*i.
inline constexpr double kPoleExclusion = 1e-6;

class PoleProximityError : public std::domain_error {
 public:
  PoleProximityError(long k, const std::string& what) : std::domain_error(what), k_(k) {}
  long k() const { return k_; }

 private:
  long k_;
};

/// Additive pieces of the truncated expansion.
struct PfdParts {
  double constant = -0.5;
  std::complex<double> pole{};      ///< 1/z
  std::complex<double> mode_sum{};  ///< sum of the +-k pairs

  std::complex<double> value() const { return (pole + mode_sum) + constant; }
};

/// Throws PoleProximityError when z is within kPoleExclusion of 2k*pi*i, |k| <= K+1.
PfdParts pfd_parts(std::complex<double> z, long K, Execution execution = Execution::Parallel);

std::complex<double> pfd_eval(std::complex<double> z, long K,
                              Execution execution = Execution::Parallel);

/// 1/(e^z - 1) evaluated directly, with expm1 for the real part of e^z - 1.
std::complex<double> reciprocal_exp_minus_one(std::complex<double> z);

/// 0, 2 pi i, -2 pi i, 4 pi i, -4 pi i, ... up to |k| = K.
std::vector<std::complex<double>> characteristic_zeros(long K);

/// sum_{1 <= |k| <= K} (2k pi i)^power, paired and accumulated in ascending k.
std::complex<double> mode_power_sum(int power, long K,
                                    Execution execution = Execution::Parallel);

/// Coefficient of z^j in the truncated sum_{k != 0} 1/(z - 2k pi i):
/// -sum_{1 <= |k| <= K} (2k pi i)^{-(j+1)}.
std::complex<double> laurent_from_modes(unsigned j, long K,
                                        Execution execution = Execution::Parallel);

}  // namespace eulerdiff
