#pragma once

/**
 * @file bernoulli.hpp
 * @brief Exact Bernoulli numbers, Faulhaber polynomials and the polynomial
 *        antidifference.
 *
 * Bernoulli numbers follow the B_1 = -1/2 convention, i.e. the coefficients
 * of z^n/n! in z/(e^z - 1). They are generated from
 *
 *     sum_{k=0}^{n} C(n+1, k) B_k = 0,   B_0 = 1,
 *
 * in exact arithmetic and memoized in a process-wide table.
 */

#include <mutex>
#include <vector>

#include "eulerdiff/polynomial.hpp"
#include "eulerdiff/rational.hpp"

namespace eulerdiff {

/// Grow-only memo of B_0..B_n. Lookups from several threads are safe.
class BernoulliTable {
 public:
  BernoulliTable();

  Rational get(unsigned n);
  /// Highest index currently stored.
  unsigned computed_up_to();

 private:
  std::mutex mutex_;
  std::vector<Rational> values_;
};

/// B_n from the shared table.
Rational bernoulli(unsigned n);

/// Polynomial p with p(m) = 1^n + 2^n + ... + m^n for every integer m >= 1.
Polynomial faulhaber(unsigned n);

/// The unique f with forward_difference(f) == g and f(0) == 0.
Polynomial antidifference_polynomial(const Polynomial& g);

}  // namespace eulerdiff
