#pragma once

// Shared textual forms for floating-point and complex scalars.

#include <complex>
#include <string>
#include <string_view>

namespace eulerdiff {

/// `%.15g` rendering with negative zero printed as "0".
std::string format_real(double value);

/// `a+bi` rendering; the zero part is dropped ("2", "-3i", "1.5-2i").
std::string format_complex(std::complex<double> value);

/// Inverse of format_complex. Also accepts "i", "-i", "1+i". Throws ParseError.
std::complex<double> parse_complex(std::string_view text);

/// Strict full-string double parse. Throws ParseError.
double parse_real(std::string_view text);

}  // namespace eulerdiff
