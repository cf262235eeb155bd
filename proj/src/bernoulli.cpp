#include "eulerdiff/bernoulli.hpp"

namespace eulerdiff {

BernoulliTable::BernoulliTable() : values_{Rational(1)} {}

Rational BernoulliTable::get(unsigned n) {
  std::lock_guard lock(mutex_);
  while (values_.size() <= n) {
    const auto m = static_cast<unsigned>(values_.size());
    // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
    Rational acc;
    for (unsigned k = 0; k < m; ++k) acc += binomial(m + 1, k) * values_[k];
    values_.push_back(-acc / Rational(static_cast<long>(m + 1)));
  }
  return values_[n];
}

unsigned BernoulliTable::computed_up_to() {
  std::lock_guard lock(mutex_);
  return static_cast<unsigned>(values_.size()) - 1;
}

Rational bernoulli(unsigned n) {
  static BernoulliTable table;
  return table.get(n);
}

Polynomial faulhaber(unsigned n) {
  // (1/(n+1)) sum_{j=0}^{n} C(n+1, j) B_j^+ x^{n+1-j}, where B_1^+ = +1/2
  // supplies the x^n/2 term.
  std::vector<Rational> coeffs(n + 2);
  const Rational scale(1L, static_cast<long>(n + 1));
  for (unsigned j = 0; j <= n; ++j) {
    const Rational b = j == 1 ? -bernoulli(1) : bernoulli(j);
    coeffs[n + 1 - j] = scale * binomial(n + 1, j) * b;
  }
  return Polynomial(std::move(coeffs));
}

Polynomial antidifference_polynomial(const Polynomial& g) {
  // sum_{k=1}^{x-1} k^n = faulhaber(n)(x - 1), then drop the constant.
  Polynomial f;
  const auto& c = g.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n].is_zero()) continue;
    f += poly_shift(faulhaber(static_cast<unsigned>(n)), Rational(-1)) * c[n];
  }
  return f - Polynomial::constant(f.coefficient(0));
}

}  // namespace eulerdiff
