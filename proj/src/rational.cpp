#include "spectra/rational.hpp"

#include <charconv>

#include "spectra/errors.hpp"

namespace spectra {

std::string rational_to_string(const Rational& r) {
  return r.str();  // "p" or "p/q", reduced, q > 0
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw grid_error("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    BigInt num{std::string(text.substr(0, slash))};
    BigInt den{std::string(text.substr(slash + 1))};
    if (den == 0) throw grid_error("zero denominator in rational literal");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw grid_error("malformed rational literal: " + std::string(text));
  }
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;  // exact: product of i+1 consecutive integers
  }
  return result;
}

}  // namespace spectra
