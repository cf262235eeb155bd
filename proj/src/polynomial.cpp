#include "eulerdiff/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "eulerdiff/format.hpp"

namespace eulerdiff {

namespace {

std::string power_suffix(std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return "x";
  return "x^" + std::to_string(k);
}

// Joins already-signed terms in descending order: "a - b + c".
std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [negative, body] = terms[i];
    if (i == 0) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::string term_body(const std::string& magnitude, bool is_one, std::size_t k) {
  if (k == 0) return magnitude;
  if (is_one) return power_suffix(k);
  return magnitude + "*" + power_suffix(k);
}

Rational parse_coefficient(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return Rational::parse(text);
  return Rational::parse_decimal(text);
}

}  // namespace

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(unsigned power, const Rational& c) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  std::vector<std::pair<bool, std::string>> terms;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const Rational magnitude = c.sign() < 0 ? -c : c;
    terms.emplace_back(c.sign() < 0, term_body(magnitude.to_string(), magnitude == Rational(1), k));
  }
  return join_terms(terms);
}

Polynomial Polynomial::parse(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  if (compact.empty()) throw ParseError("empty polynomial literal");

  // Split into signed terms; a sign after 'e'/'E' belongs to an exponent.
  std::vector<std::string> terms;
  std::string current;
  for (std::size_t i = 0; i < compact.size(); ++i) {
    const char ch = compact[i];
    const bool is_sign = ch == '+' || ch == '-';
    const bool in_exponent = i > 0 && (compact[i - 1] == 'e' || compact[i - 1] == 'E');
    if (is_sign && i > 0 && !in_exponent) {
      terms.push_back(current);
      current.clear();
    }
    current += ch;
  }
  terms.push_back(current);

  std::vector<Rational> coeffs;
  for (const std::string& raw : terms) {
    std::string_view term = raw;
    bool negative = false;
    if (!term.empty() && (term.front() == '+' || term.front() == '-')) {
      negative = term.front() == '-';
      term.remove_prefix(1);
    }
    if (term.empty()) throw ParseError("empty term in polynomial '" + std::string(text) + "'");

    Rational c(1);
    std::size_t power = 0;
    const auto x_pos = term.find('x');
    if (x_pos == std::string_view::npos) {
      c = parse_coefficient(term);
    } else {
      std::string_view prefix = term.substr(0, x_pos);
      std::string_view suffix = term.substr(x_pos + 1);
      if (!prefix.empty()) {
        if (prefix.back() != '*') {
          throw ParseError("expected '*' before x in '" + std::string(text) + "'");
        }
        prefix.remove_suffix(1);
        c = parse_coefficient(prefix);
      }
      if (suffix.empty()) {
        power = 1;
      } else {
        if (suffix.front() != '^' || suffix.size() < 2 ||
            !std::all_of(suffix.begin() + 1, suffix.end(),
                         [](unsigned char d) { return std::isdigit(d) != 0; }) ||
            suffix.size() > 5) {
          throw ParseError("malformed power in '" + std::string(text) + "'");
        }
        power = std::stoul(std::string(suffix.substr(1)));
      }
    }
    if (negative) c = -c;
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += c;
  }
  return Polynomial(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// ComplexPolynomial

ComplexPolynomial::ComplexPolynomial(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

void ComplexPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Scalar{}) coeffs_.pop_back();
}

ComplexPolynomial::Scalar ComplexPolynomial::operator()(Scalar x) const {
  Scalar acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double ComplexPolynomial::max_imag() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::fabs(c.imag()));
  return m;
}

ComplexPolynomial& ComplexPolynomial::operator+=(const ComplexPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

ComplexPolynomial& ComplexPolynomial::operator-=(const ComplexPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

ComplexPolynomial& ComplexPolynomial::operator*=(Scalar scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

std::string ComplexPolynomial::to_string() const {
  std::vector<std::pair<bool, std::string>> terms;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar c = coeffs_[k];
    if (c == Scalar{}) continue;
    if (c.imag() == 0.0) {
      const std::string magnitude = format_real(std::fabs(c.real()));
      terms.emplace_back(std::signbit(c.real()), term_body(magnitude, magnitude == "1", k));
    } else {
      terms.emplace_back(false, term_body("(" + format_complex(c) + ")", false, k));
    }
  }
  return join_terms(terms);
}

std::string ComplexPolynomial::real_part_string() const {
  std::vector<std::pair<bool, std::string>> terms;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const double re = coeffs_[k].real();
    if (re == 0.0) continue;
    const std::string magnitude = format_real(std::fabs(re));
    terms.emplace_back(std::signbit(re), term_body(magnitude, magnitude == "1", k));
  }
  return join_terms(terms);
}

// ---------------------------------------------------------------------------
// Free operations

Polynomial derivative(const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(out));
}

ComplexPolynomial derivative(const ComplexPolynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<ComplexPolynomial::Scalar> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<double>(i);
  return ComplexPolynomial(std::move(out));
}

Polynomial poly_antiderivative(const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.empty()) return {};
  std::vector<Rational> out(c.size() + 1);
  for (std::size_t i = 0; i < c.size(); ++i) out[i + 1] = c[i] / Rational(static_cast<long>(i + 1));
  return Polynomial(std::move(out));
}

Polynomial poly_shift(const Polynomial& p, const Rational& h) {
  const auto& c = p.coefficients();
  if (c.empty()) return {};
  // (x + h)^i = sum_j C(i, j) h^(i-j) x^j
  std::vector<Rational> h_pow(c.size(), Rational(1));
  for (std::size_t i = 1; i < c.size(); ++i) h_pow[i] = h_pow[i - 1] * h;
  std::vector<Rational> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (std::size_t j = 0; j <= i; ++j) {
      out[j] += c[i] * binomial(static_cast<unsigned>(i), static_cast<long>(j)) * h_pow[i - j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial forward_difference(const Polynomial& p) { return poly_shift(p) - p; }

ComplexPolynomial to_complex(const Polynomial& p) {
  std::vector<ComplexPolynomial::Scalar> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.emplace_back(c.to_double(), 0.0);
  return ComplexPolynomial(std::move(out));
}

}  // namespace eulerdiff
