#include "spectra/hilbert.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "spectra/errors.hpp"

namespace spectra {

long BettiVector::operator[](int i) const {
  switch (i) {
    case 0: return b0;
    case 1: return b1;
    case 2: return b2;
    case 3: return b3;
    case 4: return b4;
    default: throw domain_error("Betti index out of range");
  }
}

void BettiVector::validate(bool check_poincare_duality) const {
  if (b0 < 0 || b1 < 0 || b2 < 0 || b3 < 0 || b4 < 0) {
    throw domain_error("Betti numbers must be nonnegative");
  }
  if (check_poincare_duality && (b0 != b4 || b1 != b3)) {
    throw domain_error("Poincare duality b0 = b4, b1 = b3 violated");
  }
}

BivariateSeries::BivariateSeries(long order_q, long order_r)
    : order_q_(order_q), order_r_(order_r) {
  if (order_q < 1) throw domain_error("bivariate order_q must be >= 1");
  if (order_r < 1) throw domain_error("bivariate order_r must be >= 1");
  rows_.resize(static_cast<std::size_t>(order_q));
  rows_[0][0] = 1;
}

const BigInt& BivariateSeries::coefficient(long n, long j) const {
  static const BigInt zero = 0;
  if (n < 0 || n >= order_q_ || j < 0) return zero;
  const auto& row = rows_[static_cast<std::size_t>(n)];
  const auto it = row.find(j);
  return it == row.end() ? zero : it->second;
}

const std::map<long, BigInt>& BivariateSeries::q_slice(long n) const {
  if (n < 0 || n >= order_q_) throw domain_error("q-power outside truncation");
  return rows_[static_cast<std::size_t>(n)];
}

void BivariateSeries::multiply_factor(long n, long a, int sign, long b,
                                      bool inverted) {
  if (b == 0) return;
  if (n < 1) throw domain_error("factor q-exponent must be >= 1");
  // Expand (1 + sign r^a q^n)^{+-b} in powers j of the monomial.
  std::vector<std::pair<long, BigInt>> factor;  // (j, coefficient)
  const long j_max = (order_q_ - 1) / n;
  for (long j = 0; j <= j_max; ++j) {
    if (!inverted && j > b) break;
    BigInt c = inverted ? binomial(b - 1 + j, j) : binomial(b, j);
    const int s = inverted ? -sign : sign;
    if (s < 0 && (j % 2 == 1)) c = -c;
    if (c != 0) factor.emplace_back(j, std::move(c));
  }

  std::vector<std::map<long, BigInt>> result(rows_.size());
  for (long nn = 0; nn < order_q_; ++nn) {
    const auto& row = rows_[static_cast<std::size_t>(nn)];
    if (row.empty()) continue;
    for (const auto& [j, fc] : factor) {
      const long n_out = nn + j * n;
      if (n_out >= order_q_) break;
      const long r_shift = j * a;
      auto& out_row = result[static_cast<std::size_t>(n_out)];
      for (const auto& [r, c] : row) {
        const long r_out = r + r_shift;
        if (r_out >= order_r_) continue;
        BigInt& slot = out_row[r_out];
        slot += c * fc;
        if (slot == 0) out_row.erase(r_out);
      }
    }
  }
  rows_ = std::move(result);
}

FormalSeries BivariateSeries::substitute_r(long r_value,
                                           std::int64_t order) const {
  if (r_value != 1 && r_value != -1) {
    throw domain_error("exact substitution supports r = +1 or -1 only");
  }
  const std::int64_t n_max = std::min<std::int64_t>(order, order_q_);
  SeriesBuilder builder(1, 0, order);
  for (std::int64_t n = 0; n < n_max; ++n) {
    BigInt acc = 0;
    for (const auto& [r, c] : rows_[static_cast<std::size_t>(n)]) {
      if (r_value == -1 && (r % 2 == 1)) {
        acc -= c;
      } else {
        acc += c;
      }
    }
    if (acc != 0) builder.set(n, Rational(acc));
  }
  return builder.take();
}

bool BivariateSeries::operator==(const BivariateSeries& other) const {
  return order_q_ == other.order_q_ && order_r_ == other.order_r_ &&
         rows_ == other.rows_;
}

nlohmann::ordered_json BivariateSeries::to_json() const {
  nlohmann::ordered_json j;
  j["order_q"] = order_q_;
  j["order_r"] = order_r_;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (long n = 0; n < order_q_; ++n) {
    nlohmann::ordered_json row;
    row["N"] = n;
    long degree = -1;
    for (const auto& [r, c] : rows_[static_cast<std::size_t>(n)]) {
      degree = std::max(degree, r);
    }
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (long r = 0; r <= degree; ++r) {
      coeffs.push_back(coefficient(n, r).str());
    }
    row["coefficients"] = std::move(coeffs);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string BivariateSeries::to_csv() const {
  std::ostringstream os;
  os << "N,coefficients...\n";
  for (long n = 0; n < order_q_; ++n) {
    os << n;
    long degree = -1;
    for (const auto& [r, c] : rows_[static_cast<std::size_t>(n)]) {
      degree = std::max(degree, r);
    }
    for (long r = 0; r <= degree; ++r) {
      os << "," << coefficient(n, r).str();
    }
    os << "\n";
  }
  return os.str();
}

BivariateSeries goettsche_series(const BettiVector& betti, long order_q,
                                 long order_r) {
  betti.validate();
  if (order_q < 1) throw domain_error("order_q must be >= 1");
  if (order_r < 0) order_r = 4 * (order_q - 1) + 1;
  BivariateSeries series(order_q, order_r);
  for (long n = 1; n < order_q; ++n) {
    series.multiply_factor(n, 2 * n - 1, +1, betti.b1, false);
    series.multiply_factor(n, 2 * n + 1, +1, betti.b3, false);
    series.multiply_factor(n, 2 * n - 2, -1, betti.b0, true);
    series.multiply_factor(n, 2 * n, -1, betti.b2, true);
    series.multiply_factor(n, 2 * n + 2, -1, betti.b4, true);
  }
  return series;
}

std::map<long, BigInt> poincare_polynomial(const BettiVector& betti, long n) {
  if (n < 0) throw domain_error("N must be >= 0");
  return goettsche_series(betti, n + 1).q_slice(n);
}

FormalSeries euler_specialization(const BettiVector& betti,
                                  std::int64_t order) {
  betti.validate();
  if (order < 1) throw domain_error("order must be >= 1");
  const FormalSeries substituted =
      goettsche_series(betti, order).substitute_r(-1, order);
  QProductSpec euler;  // prod (1 - q^n)
  const FormalSeries direct =
      series_qproduct(euler, 1, Rational(order)).pow(-betti.euler());
  if (!(substituted == direct)) {
    throw std::logic_error(
        "r = -1 specialization disagrees with prod (1-q^n)^{-e}");
  }
  return direct;
}

ValueWithTail goettsche_product_numeric(const BettiVector& betti,
                                        const ModularParameter& tau,
                                        const TruncationPolicy& policy) {
  betti.validate();
  const double x = tau.q_abs();  // |r|^2 = x, factor moduli ~ x^{2n-1}
  const double total_betti = static_cast<double>(
      betti.b0 + betti.b1 + betti.b2 + betti.b3 + betti.b4);

  const auto log_tail = [&](long m) {
    const double head = std::pow(x, static_cast<double>(2 * m + 1));
    return total_betti * head / ((1.0 - x * x) * (1.0 - x));
  };
  long cutoff = 2;
  while (log_tail(cutoff) > policy.tolerance) {
    ++cutoff;
    if (cutoff > policy.max_series_terms) {
      throw budget_error("Goettsche product cutoff exceeded the term cap");
    }
  }

  const auto ipow = [](std::complex<double> base, long e) {
    std::complex<double> acc{1.0, 0.0};
    for (long i = 0; i < e; ++i) acc *= base;
    return acc;
  };
  std::complex<double> value{1.0, 0.0};
  for (long n = 1; n <= cutoff; ++n) {
    // r^a q^n = exp(2 pi i tau (n + a/2)); branch-fixed like every other
    // fractional power.
    const auto monomial = [&](long a) {
      return tau.q_pow(Rational(n) + Rational(a, 2));
    };
    value *= ipow(1.0 + monomial(2 * n - 1), betti.b1);
    value *= ipow(1.0 + monomial(2 * n + 1), betti.b3);
    value /= ipow(1.0 - monomial(2 * n - 2), betti.b0);
    value /= ipow(1.0 - monomial(2 * n), betti.b2);
    value /= ipow(1.0 - monomial(2 * n + 2), betti.b4);
  }
  return {value, std::abs(value) * std::expm1(log_tail(cutoff))};
}

}  // namespace spectra
