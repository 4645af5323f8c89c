#pragma once

#include <complex>
#include <vector>

#include "spectra/formal_series.hpp"
#include "spectra/modular.hpp"
#include "spectra/policy.hpp"
#include "spectra/rational.hpp"

namespace spectra {

// A numeric value together with a rigorous-style bound on the truncation
// error of the expansion that produced it.
struct ValueWithTail {
  std::complex<double> value;
  double tail = 0.0;
};

// One infinite-product family prod_{m >= start} (1 + sign q^{m+shift})^{w(m)}.
//   weight: w(m) = 1, or w(m) = m for the weight-index families.
//   parity: keep all factor indices m, or odd m only (the q^{2n-1} families).
struct QProductSpec {
  enum class Weight { one, index };
  enum class Parity { all, odd_index };

  long start = 1;        // first factor index m
  Rational shift = 0;    // epsilon
  int sign = -1;         // -1: (1 - q^{m+eps});  +1: (1 + q^{m+eps})
  Weight weight = Weight::one;
  Parity parity = Parity::all;

  // start + shift > 0 so every factor exponent is positive; domain_error
  // otherwise.
  void validate() const;

  Rational xi() const { return Rational(start) + shift; }
};

// Exact coefficients of the product up to `order` (exclusive), on the
// (1/grid)Z exponent grid.  Deterministic; grid_error if shift is off-grid.
FormalSeries series_qproduct(const QProductSpec& spec, std::int64_t grid,
                             const Rational& order);

// Truncated numeric value; the cutoff is chosen so the geometric tail bound
// drops below policy.tolerance.  domain_error if Im tau <= 0.
ValueWithTail numeric_qproduct(const QProductSpec& spec,
                               const ModularParameter& tau,
                               const TruncationPolicy& policy);

// prod (1 - q^n)^{-1}; coefficient of q^N is the partition count p(N).
FormalSeries partition_gf(std::int64_t order);

enum class PartitionConstraint { all, distinct, odd_parts };

// Exhaustive, duplicate-free list of non-increasing positive parts summing
// to n.  This is the independent oracle behind every character formula.
std::vector<std::vector<int>> enumerate_partitions(int n,
                                                   PartitionConstraint c);

// q^{1/24} prod (1 - q^n); series offset is exactly 1/24.
FormalSeries dedekind_eta_series(std::int64_t order,
                                 std::int64_t grid = FormalSeries::kDefaultGrid);
ValueWithTail dedekind_eta(const ModularParameter& tau,
                           const TruncationPolicy& policy);

// The three eta-quotient partners of the theta constants, under the m >= 0
// index convention (m_base = 1 reproduces the shifted products for the
// convention audit):
//   f1 = q^{-1/48} prod_{m>=0} (1 - q^{m+1/2})
//   f2 = q^{-1/48} prod_{m>=0} (1 + q^{m+1/2})
//   f3 = q^{ 1/24} prod_{m>=0} (1 + q^{m+1})
FormalSeries weber_f_series(int index, const Rational& order,
                            std::int64_t grid = FormalSeries::kDefaultGrid,
                            int m_base = 0);
ValueWithTail weber_f(int index, const ModularParameter& tau,
                      const TruncationPolicy& policy, int m_base = 0);

// f1 = eta(tau/2)/eta(tau), f2 = eta(tau)^2/(eta(tau/2) eta(2 tau)),
// f3 = eta(2 tau)/eta(tau); an independent route used for cross-checking.
ValueWithTail weber_f_eta_quotient(int index, const ModularParameter& tau,
                                   const TruncationPolicy& policy);

}  // namespace spectra
