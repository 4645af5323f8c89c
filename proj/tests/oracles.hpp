// Independent test oracles.  These deliberately use different algorithms
// from the library: dense-vector polynomial multiplication instead of the
// sparse binomial expansion, and direct counting DP instead of recursive
// enumeration, so an agreement is meaningful.
#pragma once

#include <cstdint>
#include <vector>

#include "spectra/rational.hpp"

namespace oracles {

using spectra::BigInt;
using spectra::Rational;

struct DenseProductSpec {
  long start = 1;
  std::int64_t shift_units = 0;  // epsilon in grid units
  int sign = -1;
  bool weight_index = false;
  bool odd_only = false;
};

// Dense expansion of prod (1 + sign q^{m+eps})^{w(m)} by repeated
// multiplication with the two-term factor, one repetition per weight unit.
inline std::vector<Rational> dense_qproduct(const DenseProductSpec& spec,
                                            std::int64_t grid,
                                            std::int64_t order_units) {
  std::vector<Rational> dense(static_cast<std::size_t>(order_units), 0);
  dense[0] = 1;
  for (long m = spec.start;; ++m) {
    const std::int64_t e = m * grid + spec.shift_units;
    if (e >= order_units) break;
    if (e <= 0) continue;
    if (spec.odd_only && m % 2 == 0) continue;
    const long w = spec.weight_index ? m : 1;
    for (long rep = 0; rep < w; ++rep) {
      for (std::int64_t k = order_units - 1; k >= e; --k) {
        if (dense[static_cast<std::size_t>(k - e)] == 0) continue;
        if (spec.sign < 0) {
          dense[static_cast<std::size_t>(k)] -=
              dense[static_cast<std::size_t>(k - e)];
        } else {
          dense[static_cast<std::size_t>(k)] +=
              dense[static_cast<std::size_t>(k - e)];
        }
      }
    }
  }
  return dense;
}

// Counting DP for partitions of n: all parts, distinct parts, odd parts.
struct PartitionCounts {
  std::vector<std::int64_t> all;
  std::vector<std::int64_t> distinct;
  std::vector<std::int64_t> odd;
};

inline PartitionCounts partition_counts(int n_max) {
  PartitionCounts counts;
  counts.all.assign(n_max + 1, 0);
  counts.distinct.assign(n_max + 1, 0);
  counts.odd.assign(n_max + 1, 0);
  counts.all[0] = counts.distinct[0] = counts.odd[0] = 1;
  for (int part = 1; part <= n_max; ++part) {
    // unbounded knapsack for `all`
    for (int n = part; n <= n_max; ++n) counts.all[n] += counts.all[n - part];
    // 0/1 knapsack for `distinct`
    for (int n = n_max; n >= part; --n) {
      counts.distinct[n] += counts.distinct[n - part];
    }
    if (part % 2 == 1) {
      for (int n = part; n <= n_max; ++n) counts.odd[n] += counts.odd[n - part];
    }
  }
  return counts;
}

// Dense bivariate expansion of the Hilbert-scheme generating product with
// exact integer coefficients; truncation order_q in q, unbounded in r.
// grid[N][j] = coefficient of q^N r^j.
inline std::vector<std::vector<BigInt>> dense_goettsche(
    long b0, long b1, long b2, long b3, long b4, long order_q) {
  const long max_r = 4 * (order_q - 1) + 3;
  std::vector<std::vector<BigInt>> acc(
      static_cast<std::size_t>(order_q),
      std::vector<BigInt>(static_cast<std::size_t>(max_r) + 1, 0));
  acc[0][0] = 1;

  // multiply by (1 + sign r^a q^n) once
  const auto times_binomial = [&](long n, long a, int sign) {
    for (long nn = order_q - 1; nn >= n; --nn) {
      for (long r = max_r; r >= a; --r) {
        const BigInt& src = acc[static_cast<std::size_t>(nn - n)]
                               [static_cast<std::size_t>(r - a)];
        if (src == 0) continue;
        if (sign > 0) {
          acc[static_cast<std::size_t>(nn)][static_cast<std::size_t>(r)] += src;
        } else {
          acc[static_cast<std::size_t>(nn)][static_cast<std::size_t>(r)] -= src;
        }
      }
    }
  };
  // divide by (1 - r^a q^n) once: geometric inversion in place
  const auto divide_binomial = [&](long n, long a) {
    for (long nn = n; nn <= order_q - 1; ++nn) {
      for (long r = a; r <= max_r; ++r) {
        const BigInt& src = acc[static_cast<std::size_t>(nn - n)]
                               [static_cast<std::size_t>(r - a)];
        if (src == 0) continue;
        acc[static_cast<std::size_t>(nn)][static_cast<std::size_t>(r)] += src;
      }
    }
  };

  for (long n = 1; n < order_q; ++n) {
    for (long i = 0; i < b1; ++i) times_binomial(n, 2 * n - 1, +1);
    for (long i = 0; i < b3; ++i) times_binomial(n, 2 * n + 1, +1);
    for (long i = 0; i < b0; ++i) divide_binomial(n, 2 * n - 2);
    for (long i = 0; i < b2; ++i) divide_binomial(n, 2 * n);
    for (long i = 0; i < b4; ++i) divide_binomial(n, 2 * n + 2);
  }
  return acc;
}

}  // namespace oracles
