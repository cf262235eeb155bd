#include "eulerdiff/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "eulerdiff/rational.hpp"

namespace eulerdiff {

std::string format_real(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

std::string format_complex(std::complex<double> value) {
  const double re = value.real();
  const double im = value.imag();
  if (im == 0.0) return format_real(re);
  if (re == 0.0) return format_real(im) + "i";
  std::string out = format_real(re);
  out += std::signbit(im) ? "-" : "+";
  out += format_real(std::fabs(im));
  out += "i";
  return out;
}

double parse_real(std::string_view text) {
  const std::string s(text);
  if (s.empty() || std::isspace(static_cast<unsigned char>(s.front()))) {
    throw ParseError("malformed real literal '" + s + "'");
  }
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ParseError("malformed real literal '" + s + "'");
  }
  return v;
}

std::complex<double> parse_complex(std::string_view text) {
  if (text.empty()) throw ParseError("empty complex literal");
  if (text.back() != 'i') return {parse_real(text), 0.0};

  const std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string_view re_text = split == std::string_view::npos ? "" : body.substr(0, split);
  std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);

  double im = 0.0;
  if (im_text.empty() || im_text == "+") {
    im = 1.0;
  } else if (im_text == "-") {
    im = -1.0;
  } else {
    if (im_text.front() == '+') im_text.remove_prefix(1);
    im = parse_real(im_text);
  }
  const double re = re_text.empty() ? 0.0 : parse_real(re_text);
  return {re, im};
}

}  // namespace eulerdiff
