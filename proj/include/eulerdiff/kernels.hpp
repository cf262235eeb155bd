#pragma once

/**
 * @file kernels.hpp
 * @brief Ordered mode-pair summation, serial reference and OpenMP variant.
 *
 * Every infinite sum in the library runs over the zeros +-2k*pi*i of
 * e^z - 1 and is truncated symmetrically: the +k and -k contributions are
 * combined into one pair term first, then pair terms are accumulated in
 * ascending k. The parallel variant evaluates pair terms concurrently into
 * a buffer and then accumulates that buffer in the same order as the serial
 * loop, so both variants return bitwise identical results for any thread
 * count.
 */

#include <complex>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eulerdiff {

enum class Execution { Serial, Parallel };

namespace kernels {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// sum_{k=1}^{K} term(k), accumulated in ascending k.
template <class T, class Term>
T ordered_pair_sum_serial(long K, const Term& term, T acc) {
  for (long k = 1; k <= K; ++k) acc += term(k);
  return acc;
}

/// Same result as ordered_pair_sum_serial; term evaluation is spread over threads.
template <class T, class Term>
T ordered_pair_sum_parallel(long K, const Term& term, T acc) {
  if (K <= 0) return acc;
  std::vector<T> terms(static_cast<std::size_t>(K));
#pragma omp parallel for schedule(static)
  for (long k = 1; k <= K; ++k) terms[static_cast<std::size_t>(k - 1)] = term(k);
  for (const T& t : terms) acc += t;
  return acc;
}

template <class T, class Term>
T ordered_pair_sum(long K, const Term& term, T acc, Execution execution) {
  return execution == Execution::Serial ? ordered_pair_sum_serial(K, term, std::move(acc))
                                        : ordered_pair_sum_parallel(K, term, std::move(acc));
}

/// Integer power by repeated multiplication. Negating z flips the result's
/// sign exactly for odd p, so +-k pairs of odd powers cancel to zero.
inline std::complex<double> ipow(std::complex<double> z, int p) {
  if (p < 0) {
    z = 1.0 / z;
    p = -p;
  }
  std::complex<double> result{1.0, 0.0};
  for (int i = 0; i < p; ++i) result *= z;
  return result;
}

/// (2k*pi*i)^p + (-2k*pi*i)^p.
inline std::complex<double> mode_power_pair(long k, int p) {
  const std::complex<double> a{0.0, kTwoPi * static_cast<double>(k)};
  return ipow(a, p) + ipow(-a, p);
}

/// 1/(z - 2k*pi*i) + 1/(z + 2k*pi*i), combined as 2z/(z^2 + 4 pi^2 k^2).
inline std::complex<double> pfd_pair(std::complex<double> z, long k) {
  const double w = kTwoPi * static_cast<double>(k);
  return 2.0 * z / (z * z + w * w);
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int threads) {
  if (threads < 1) throw std::invalid_argument("thread count must be positive");
#ifdef _OPENMP
  omp_set_num_threads(threads);
#endif
}

}  // namespace kernels
}  // namespace eulerdiff
