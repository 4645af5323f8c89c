#include "spectra/qseries.hpp"

#include <cmath>
#include <complex>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

std::complex<double> ipow(std::complex<double> base, long e) {
  if (e < 0) return 1.0 / ipow(base, -e);
  std::complex<double> acc{1.0, 0.0};
  while (e != 0) {
    if (e & 1L) acc *= base;
    e >>= 1L;
    if (e != 0) base *= base;
  }
  return acc;
}

// Upper bound on sum_{m > M, m kept} w(m) x^{m + eps} for 0 < x < 1.
double product_tail_sum(const QProductSpec& spec, double x, long m_last) {
  const double xeps = std::pow(x, to_double(spec.shift));
  if (spec.parity == QProductSpec::Parity::all) {
    const double head = std::pow(x, static_cast<double>(m_last + 1)) * xeps;
    if (spec.weight == QProductSpec::Weight::one) {
      return head / (1.0 - x);
    }
    // sum_{m>M} m x^m = x^{M+1} ((M+1) - M x) / (1-x)^2
    const double m = static_cast<double>(m_last);
    return head * ((m + 1.0) - m * x) / ((1.0 - x) * (1.0 - x));
  }
  // odd factor indices only; next kept index after M
  const long next = (m_last % 2 == 0) ? m_last + 1 : m_last + 2;
  const double head = std::pow(x, static_cast<double>(next)) * xeps;
  const double geo = 1.0 - x * x;
  if (spec.weight == QProductSpec::Weight::one) {
    return head / geo;
  }
  return head * (static_cast<double>(next) / geo +
                 2.0 * x * x / (geo * geo));
}

}  // namespace

void QProductSpec::validate() const {
  if (start < 0) throw domain_error("q-product start index must be >= 0");
  if (Rational(start) + shift <= 0) {
    throw domain_error(
        "q-product requires start + shift > 0 so every factor exponent is "
        "positive");
  }
}

FormalSeries series_qproduct(const QProductSpec& spec, std::int64_t grid,
                             const Rational& order) {
  spec.validate();
  if (order <= 0) throw domain_error("series order must be positive");
  const std::int64_t order_units = to_grid_units(order, grid);
  const std::int64_t shift_units = to_grid_units(spec.shift, grid);

  FormalSeries acc = FormalSeries::one(grid, order_units);
  for (long m = spec.start;; ++m) {
    if (spec.parity == QProductSpec::Parity::odd_index && m % 2 == 0) continue;
    const std::int64_t e_units = m * grid + shift_units;
    if (e_units >= order_units) break;
    if (e_units <= 0) throw domain_error("nonpositive factor exponent");
    const long w = spec.weight == QProductSpec::Weight::one ? 1 : m;
    if (w == 0) continue;
    // (1 + sign q^e)^w expanded binomially; only j with j e < order matter.
    const long j_max =
        std::min<long>(w, static_cast<long>((order_units - 1) / e_units));
    std::map<std::int64_t, Rational> factor;
    for (long j = 0; j <= j_max; ++j) {
      Rational c{binomial(w, j)};
      if (spec.sign < 0 && (j % 2 == 1)) c = -c;
      factor[j * e_units] = c;
    }
    acc = acc.times_sparse(factor);
  }
  return acc;
}

ValueWithTail numeric_qproduct(const QProductSpec& spec,
                               const ModularParameter& tau,
                               const TruncationPolicy& policy) {
  spec.validate();
  const double x = tau.q_abs();
  const double u0 = std::pow(x, to_double(spec.xi()));

  long cutoff = std::max<long>(spec.start, 4);
  if (policy.mode == TruncationPolicy::Mode::fixed) {
    cutoff = std::max<long>(cutoff, policy.lattice_cutoff);
  } else {
    while (product_tail_sum(spec, x, cutoff) / (1.0 - u0) >
           policy.tolerance) {
      ++cutoff;
      if (cutoff > policy.max_series_terms) {
        throw budget_error("q-product cutoff exceeded max_series_terms");
      }
    }
  }

  std::complex<double> value{1.0, 0.0};
  for (long m = spec.start; m <= cutoff; ++m) {
    if (spec.parity == QProductSpec::Parity::odd_index && m % 2 == 0) continue;
    const long w = spec.weight == QProductSpec::Weight::one ? 1 : m;
    if (w == 0) continue;
    const std::complex<double> qe = tau.q_pow(Rational(m) + spec.shift);
    const std::complex<double> factor =
        1.0 + static_cast<double>(spec.sign) * qe;
    value *= ipow(factor, w);
  }

  const double log_tail = product_tail_sum(spec, x, cutoff) / (1.0 - u0);
  return {value, std::abs(value) * std::expm1(log_tail)};
}

FormalSeries partition_gf(std::int64_t order) {
  if (order < 1) throw domain_error("partition_gf requires order >= 1");
  QProductSpec euler;  // prod (1 - q^n)
  return series_qproduct(euler, 1, Rational(order)).inverse();
}

namespace {

void enumerate_rec(int remaining, int max_part, PartitionConstraint c,
                   std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    if (c == PartitionConstraint::odd_parts && p % 2 == 0) continue;
    current.push_back(p);
    const int next_max = (c == PartitionConstraint::distinct) ? p - 1 : p;
    enumerate_rec(remaining - p, next_max, c, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_partitions(int n,
                                                   PartitionConstraint c) {
  if (n < 0) throw domain_error("cannot partition a negative integer");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  enumerate_rec(n, n, c, current, out);
  if (n == 0) out.assign(1, {});
  return out;
}

FormalSeries dedekind_eta_series(std::int64_t order, std::int64_t grid) {
  QProductSpec euler;
  return series_qproduct(euler, grid, Rational(order))
      .shifted(Rational(1, 24));
}

ValueWithTail dedekind_eta(const ModularParameter& tau,
                           const TruncationPolicy& policy) {
  QProductSpec euler;
  const ValueWithTail prod = numeric_qproduct(euler, tau, policy);
  const std::complex<double> pre = tau.q_pow(Rational(1, 24));
  return {pre * prod.value, std::abs(pre) * prod.tail};
}

namespace {

struct WeberShape {
  Rational prefactor_exponent;
  Rational shift;
  int sign;
};

WeberShape weber_shape(int index) {
  switch (index) {
    case 1:
      return {Rational(-1, 48), Rational(1, 2), -1};
    case 2:
      return {Rational(-1, 48), Rational(1, 2), +1};
    case 3:
      return {Rational(1, 24), Rational(1), +1};
    default:
      throw domain_error("weber function index must be 1, 2 or 3");
  }
}

}  // namespace

FormalSeries weber_f_series(int index, const Rational& order,
                            std::int64_t grid, int m_base) {
  const WeberShape shape = weber_shape(index);
  QProductSpec spec;
  spec.start = m_base;
  spec.shift = shape.shift;
  spec.sign = shape.sign;
  return series_qproduct(spec, grid, order).shifted(shape.prefactor_exponent);
}

ValueWithTail weber_f(int index, const ModularParameter& tau,
                      const TruncationPolicy& policy, int m_base) {
  const WeberShape shape = weber_shape(index);
  QProductSpec spec;
  spec.start = m_base;
  spec.shift = shape.shift;
  spec.sign = shape.sign;
  const ValueWithTail prod = numeric_qproduct(spec, tau, policy);
  const std::complex<double> pre = tau.q_pow(shape.prefactor_exponent);
  return {pre * prod.value, std::abs(pre) * prod.tail};
}

ValueWithTail weber_f_eta_quotient(int index, const ModularParameter& tau,
                                   const TruncationPolicy& policy) {
  const ValueWithTail eta_full = dedekind_eta(tau, policy);
  const ValueWithTail eta_half = dedekind_eta(tau.scaled(0.5), policy);
  const ValueWithTail eta_double = dedekind_eta(tau.scaled(2.0), policy);
  const auto rel = [](const ValueWithTail& v) {
    return v.tail / std::abs(v.value);
  };
  std::complex<double> value;
  double rel_tail = 0.0;
  switch (index) {
    case 1:
      value = eta_half.value / eta_full.value;
      rel_tail = rel(eta_half) + rel(eta_full);
      break;
    case 2:
      value = eta_full.value * eta_full.value /
              (eta_half.value * eta_double.value);
      rel_tail = 2.0 * rel(eta_full) + rel(eta_half) + rel(eta_double);
      break;
    case 3:
      value = eta_double.value / eta_full.value;
      rel_tail = rel(eta_double) + rel(eta_full);
      break;
    default:
      throw domain_error("weber function index must be 1, 2 or 3");
  }
  return {value, std::abs(value) * rel_tail};
}

}  // namespace spectra
