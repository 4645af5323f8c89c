#include "spectra/policy.hpp"

#include <cstdlib>
#include <string>

namespace spectra {

double TruncationPolicy::default_tolerance() {
  if (const char* env = std::getenv("SPECTRA_QKIT_EPS")) {
    try {
      const double parsed = std::stod(env);
      if (parsed > 0.0) return parsed;
    } catch (...) {
      // fall through to the built-in default
    }
  }
  return 1e-12;
}

}  // namespace spectra
