#include "eulerdiff/ode.hpp"

#include <algorithm>
#include <cmath>

#include "eulerdiff/format.hpp"
#include "eulerdiff/spectral.hpp"

namespace eulerdiff {

namespace {

using Complex = std::complex<double>;

constexpr double kMinRootSeparation = 1e-6;
constexpr double kMinDerivativeAtRoot = 1e-8;
constexpr double kResidualTolerance = 1e-9;

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Value and first derivative in one pass.
std::pair<Complex, Complex> horner_with_derivative(const std::vector<Complex>& c, Complex z) {
  Complex p{};
  Complex dp{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

void check_separation(const std::vector<Complex>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (std::abs(roots[i] - roots[j]) < kMinRootSeparation) {
        throw MultipleRootUnsupported("roots " + format_complex(roots[i]) + " and " +
                                      format_complex(roots[j]) + " coincide within 1e-6");
      }
    }
  }
}

// Aberth-Ehrlich on a monic polynomial of degree >= 2.
std::vector<Complex> aberth(const std::vector<Complex>& monic, const RootFinderOptions& options) {
  const std::size_t n = monic.size() - 1;
  const Complex center = -monic[n - 1] / static_cast<double>(n);
  double radius = std::pow(std::abs(horner(monic, center)), 1.0 / static_cast<double>(n));
  if (!(radius > 0.0) || !std::isfinite(radius)) radius = 1.0;

  std::vector<Complex> z(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double angle = kernels::kTwoPi * static_cast<double>(j) / static_cast<double>(n) + 0.4;
    z[j] = center + std::polar(radius, angle);
  }

  bool converged = false;
  for (int it = 0; it < options.max_iterations && !converged; ++it) {
    double max_step = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto [p, dp] = horner_with_derivative(monic, z[i]);
      if (p == Complex{}) continue;
      const Complex ratio = dp == Complex{} ? p : p / dp;
      Complex repulsion{};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && z[i] != z[j]) repulsion += 1.0 / (z[i] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    converged = max_step <= options.tolerance;
  }
  if (!converged) {
    check_separation(z);
    throw RootFinderError("root finder did not converge within " +
                          std::to_string(options.max_iterations) + " iterations");
  }
  return z;
}

void newton_polish(const std::vector<Complex>& c, Complex& z) {
  for (int it = 0; it < 3; ++it) {
    const auto [p, dp] = horner_with_derivative(c, z);
    if (p == Complex{} || dp == Complex{}) return;
    const Complex candidate = z - p / dp;
    if (std::abs(horner(c, candidate)) >= std::abs(p)) return;
    z = candidate;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

CharacteristicPolynomial::CharacteristicPolynomial(std::vector<Scalar> ascending)
    : coeffs_(std::move(ascending)) {
  if (coeffs_.size() < 2) throw std::invalid_argument("characteristic polynomial needs degree >= 1");
  if (coeffs_.back() == Scalar{}) throw std::invalid_argument("leading coefficient must be nonzero");
}

CharacteristicPolynomial CharacteristicPolynomial::from_roots(const std::vector<Scalar>& roots,
                                                              Scalar leading) {
  std::vector<Scalar> c{leading};
  for (const Scalar& r : roots) {
    std::vector<Scalar> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return CharacteristicPolynomial(std::move(c));
}

CharacteristicPolynomial::Scalar CharacteristicPolynomial::operator()(Scalar z) const {
  return horner(coeffs_, z);
}

std::vector<CharacteristicPolynomial::Scalar> CharacteristicPolynomial::derivative_coefficients() const {
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<double>(i);
  return d;
}

double CharacteristicPolynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

// ---------------------------------------------------------------------------

void ExpPoly::add(std::complex<double> exponent, const ComplexPolynomial& poly) {
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (std::abs(it->exponent - exponent) <= kExponentMergeTol) {
      it->poly += poly;
      if (it->poly.is_zero()) terms_.erase(it);
      return;
    }
  }
  if (!poly.is_zero()) terms_.push_back({exponent, poly});
}

std::complex<double> ExpPoly::operator()(std::complex<double> x) const {
  Complex acc{};
  for (const auto& t : terms_) acc += std::exp(t.exponent * x) * t.poly(x);
  return acc;
}

std::string ExpPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) out += " + ";
    const auto& t = terms_[i];
    if (t.exponent == Complex{}) {
      out += t.poly.to_string();
    } else {
      out += "exp((" + format_complex(t.exponent) + ")*x)*(" + t.poly.to_string() + ")";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::complex<double>> find_roots(const CharacteristicPolynomial& p,
                                             const RootFinderOptions& options) {
  const auto& a = p.coefficients();

  std::size_t zero_roots = 0;
  while (a[zero_roots] == Complex{}) ++zero_roots;
  if (zero_roots > 1) throw MultipleRootUnsupported("zero is a repeated root");

  std::vector<Complex> monic(a.begin() + static_cast<std::ptrdiff_t>(zero_roots), a.end());
  const Complex lead = monic.back();
  for (auto& c : monic) c /= lead;

  std::vector<Complex> roots;
  const std::size_t n = monic.size() - 1;
  if (n == 1) {
    roots.push_back(-monic[0]);
  } else if (n >= 2) {
    roots = aberth(monic, options);
    for (auto& r : roots) newton_polish(monic, r);
  }
  if (zero_roots == 1) roots.emplace_back(0.0, 0.0);

  check_separation(roots);
  const double limit = kResidualTolerance * p.max_abs_coefficient();
  for (const auto& r : roots) {
    if (std::abs(p(r)) > limit) {
      throw RootFinderError("root " + format_complex(r) + " leaves residual above tolerance");
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Complex& x, const Complex& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return roots;
}

ExpPoly solve_linear_ode(const CharacteristicPolynomial& p, const Polynomial& g,
                         const RootFinderOptions& options) {
  const auto roots = find_roots(p, options);
  const auto dcoeffs = p.derivative_coefficients();

  std::vector<double> gd;
  for (const auto& c : g.coefficients()) gd.push_back(c.to_double());

  ComplexPolynomial total;
  for (const Complex& r : roots) {
    const Complex slope = horner(dcoeffs, r);
    if (std::abs(slope) < kMinDerivativeAtRoot) {
      throw MultipleRootUnsupported("P'(" + format_complex(r) + ") vanishes; root is near-multiple");
    }
    ComplexPolynomial term;
    if (r == Complex{}) {
      term = to_complex(poly_antiderivative(g));
    } else {
      for (std::size_t n = 0; n < gd.size(); ++n) {
        if (gd[n] != 0.0) term += exp_poly_integral(r, static_cast<unsigned>(n)) * Complex{gd[n], 0.0};
      }
    }
    total += term * (1.0 / slope);
  }

  ExpPoly f;
  f.add({0.0, 0.0}, total);
  return f;
}

ExpPoly apply_operator(const CharacteristicPolynomial& p, const ExpPoly& f) {
  const auto& a = p.coefficients();
  ExpPoly out;
  for (const auto& term : f.terms()) {
    ComplexPolynomial current = term.poly;  // D^i applied, exponential factored out
    ComplexPolynomial acc = current * a[0];
    for (std::size_t i = 1; i < a.size(); ++i) {
      current = current * term.exponent + derivative(current);
      acc += current * a[i];
    }
    out.add(term.exponent, acc);
  }
  return out;
}

}  // namespace eulerdiff
