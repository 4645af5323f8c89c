#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace spectra {

// Exact arithmetic used for all series coefficients and exponents.
// Numeric evaluation converts to double only at the very end.
using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Decimal-free rendering: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string rational_to_string(const Rational& r);

// Accepts "p" and "p/q" with optional leading sign; throws grid_error on junk.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

// n choose k for small n; exact.
BigInt binomial(long n, long k);

}  // namespace spectra
