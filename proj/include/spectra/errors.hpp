#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

// Argument outside the region where the quantity is defined (Im tau <= 0,
// Re s <= 0 for the log-series, nonpositive product exponents, ...).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// An exponent does not lie on the declared (1/c)Z grid.
struct grid_error : std::runtime_error {
  explicit grid_error(const std::string& what) : std::runtime_error(what) {}
};

// The adaptive truncation policy cannot meet the requested tolerance.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A ratio denominator vanishes within the pole tolerance.
struct pole_error : std::runtime_error {
  explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

// A lattice index falls outside the configured product cutoff.
struct cutoff_error : std::runtime_error {
  explicit cutoff_error(const std::string& what) : std::runtime_error(what) {}
};

// Bad command-line arguments; the CLI maps this to exit code 2.
struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spectra
