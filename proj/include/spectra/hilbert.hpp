#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "spectra/formal_series.hpp"
#include "spectra/modular.hpp"
#include "spectra/policy.hpp"
#include "spectra/qseries.hpp"

namespace spectra {

// Betti numbers (b0..b4) of the surface X.
struct BettiVector {
  long b0 = 0, b1 = 0, b2 = 0, b3 = 0, b4 = 0;

  long euler() const { return b0 - b1 + b2 - b3 + b4; }
  long operator[](int i) const;

  // Entries must be >= 0; optionally check Poincare duality b0=b4, b1=b3
  // (closed oriented X only, so off by default).
  void validate(bool check_poincare_duality = false) const;
};

// Exact bivariate series sum_N q^N P_r(X^[N]) with integer coefficients:
// rows[N][j] = coefficient of q^N r^j.  The constant term is always 1.
class BivariateSeries {
 public:
  BivariateSeries(long order_q, long order_r);

  long order_q() const { return order_q_; }
  long order_r() const { return order_r_; }

  const BigInt& coefficient(long n, long j) const;
  const std::map<long, BigInt>& q_slice(long n) const;

  // In-place multiply by (1 + sign r^a q^n)^{+-b}; used by the expansion.
  void multiply_factor(long n, long a, int sign, long b, bool inverted);

  // Substitute a numeric value for r in every slice, collapsing to a
  // univariate integer-grid series (exact when r = +-1).
  FormalSeries substitute_r(long r_value, std::int64_t order) const;

  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;

  bool operator==(const BivariateSeries& other) const;

 private:
  long order_q_;
  long order_r_;
  std::vector<std::map<long, BigInt>> rows_;
};

// Generating function of the Poincare polynomials of the Hilbert schemes of
// points:
//   prod_{n>=1} (1+r^{2n-1}q^n)^{b1} (1+r^{2n+1}q^n)^{b3}
//             / [(1-r^{2n-2}q^n)^{b0} (1-r^{2n}q^n)^{b2} (1-r^{2n+2}q^n)^{b4}].
// Only factors with n < order_q contribute.  order_r < 0 keeps every r-power
// (the q^N slice has r-degree <= 4N, so nothing is lost).
BivariateSeries goettsche_series(const BettiVector& betti, long order_q,
                                 long order_r = -1);

// q^N slice: the Poincare polynomial of X^[N] (degree <= 4N, coefficients
// nonnegative).
std::map<long, BigInt> poincare_polynomial(const BettiVector& betti, long n);

// r = -1 specialization: collapses to prod (1 - q^n)^{-e(X)}.  Computes both
// routes and verifies they agree before returning.
FormalSeries euler_specialization(const BettiVector& betti, std::int64_t order);

// Numeric value of the product with r = exp(i pi tau) substituted.
ValueWithTail goettsche_product_numeric(const BettiVector& betti,
                                        const ModularParameter& tau,
                                        const TruncationPolicy& policy);

}  // namespace spectra
