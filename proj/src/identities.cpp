#include "spectra/identities.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "spectra/errors.hpp"
#include "spectra/fock.hpp"
#include "spectra/qseries.hpp"

namespace spectra {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

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

double rel(const ValueWithTail& v) {
  const double mag = std::abs(v.value);
  return mag > 0.0 ? v.tail / mag : v.tail;
}

nlohmann::ordered_json tau_json(const ModularParameter& tau) {
  nlohmann::ordered_json j;
  j["re"] = tau.re();
  j["im"] = tau.im();
  return j;
}

nlohmann::ordered_json complex_json(std::complex<double> z) {
  nlohmann::ordered_json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

// JSON cannot hold infinities; they become the string "inf".
nlohmann::ordered_json number_json(double x) {
  if (std::isfinite(x)) return x;
  return x > 0 ? "inf" : "-inf";
}

// Series residual: sum over coefficients of |series - 1|, as a double.
double series_deviation(const FormalSeries& series) {
  const FormalSeries deviation =
      series - FormalSeries::one(series.grid(), series.order_units());
  double acc = 0.0;
  for (const auto& [k, c] : deviation.terms()) {
    acc += std::abs(to_double(c));
  }
  return acc;
}

}  // namespace

nlohmann::ordered_json Conventions::to_json() const {
  nlohmann::ordered_json j;
  j["m_base"] = m_base;
  j["eta_sign"] = eta_sign > 0 ? "+" : "-";
  j["r_reading"] = r_reading == RReading::ratio ? "ratio" : "triple";
  return j;
}

void IdentityReport::judge() { pass = residual <= tail_budget + tolerance; }

nlohmann::ordered_json IdentityReport::to_json() const {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["params"] = params;
  j["conventions"] = conventions.to_json();
  j["lhs"] = complex_json(lhs);
  j["rhs"] = complex_json(rhs);
  j["residual"] = number_json(residual);
  j["tail_budget"] = number_json(tail_budget);
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  j["audit"] = audit;
  j["pole"] = pole;
  j["note"] = note;
  return j;
}

std::vector<ModularParameter> standard_tau_grid() {
  return {{0.25, 1.0}, {0.3, 1.1}, {0.1, 1.5}};
}

std::vector<ModularParameter> crossz_tau_grid() {
  return {{0.25, 1.0}, {0.3, 1.1}, {0.0, 1.0}};
}

// ---------------------------------------------------------------------------
// Table of generating functions

namespace {

struct RowShape {
  int sign;        // product sign
  bool conjugate;  // uses conj(q) and the (1+it) direction
  bool eta;        // sign-flip shift on the spectral side
  bool weighted;   // exponent weight n
};

RowShape row_shape(int row) {
  if (row < 1 || row > 8) throw usage_error("table row must be in 1..8");
  const int base = (row - 1) % 4;  // 0: -q, 1: -conj q, 2: +q, 3: +conj q
  return {base < 2 ? -1 : +1, base % 2 == 1, base >= 2, row > 4};
}

RatioVariant row_variant(const RowShape& shape) {
  if (shape.eta) {
    return shape.conjugate ? RatioVariant::conjugate_eta_shifted
                           : RatioVariant::eta_shifted;
  }
  return shape.conjugate ? RatioVariant::conjugate : RatioVariant::plain;
}

// One spectral factor R(xi ...) of the table, under either reading.
ValueWithTail table_factor(double xi, const RowShape& shape,
                           const ModularParameter& tau,
                           const TruncationPolicy& policy,
                           const Conventions& conv) {
  if (conv.r_reading == Conventions::RReading::ratio) {
    return z_ratio_xi(xi, tau, row_variant(shape), policy, conv.eta_sign);
  }
  const std::complex<double> direction =
      shape.conjugate ? tau.one_plus_it() : tau.one_minus_it();
  std::complex<double> arg = xi * direction;
  if (shape.eta) arg += tau.eta_arg_shift(conv.eta_sign);
  return ruelle({arg}, tau, policy);
}

}  // namespace

IdentityReport verify_table_row(int row, long ell, const Rational& eps,
                                const ModularParameter& tau,
                                const TruncationPolicy& policy,
                                const Conventions& conv) {
  const RowShape shape = row_shape(row);
  IdentityReport report;
  report.id = "table1.row" + std::to_string(row);
  report.conventions = conv;
  report.params["tau"] = tau_json(tau);
  report.params["ell"] = ell;
  report.params["eps"] = rational_to_string(eps);
  report.tolerance = row <= 4 ? tolerances::table_rows_1_4
                              : tolerances::table_rows_5_8;
  report.audit = !(row <= 4 &&
                   conv.r_reading == Conventions::RReading::ratio &&
                   conv.eta_sign == +1);

  QProductSpec spec;
  spec.start = ell;
  spec.shift = eps;
  spec.sign = shape.sign;
  spec.weight = shape.weighted ? QProductSpec::Weight::index
                               : QProductSpec::Weight::one;
  const ValueWithTail product = numeric_qproduct(spec, tau, policy);
  report.lhs = shape.conjugate ? std::conj(product.value) : product.value;

  const double xi = static_cast<double>(ell) + to_double(eps);
  try {
    ValueWithTail rhs;
    if (!shape.weighted) {
      rhs = table_factor(xi, shape, tau, policy, conv);
    } else {
      // R(xi)^ell * prod_{n >= ell} R(n + eps + 1); remaining factors are
      // 1 + O(q^{n+eps+1}) and are truncated under the usual tail budget.
      const ValueWithTail head = table_factor(xi, shape, tau, policy, conv);
      rhs.value = ipow(head.value, ell);
      double rel_tail = static_cast<double>(ell) * rel(head);
      const double x = tau.q_abs();
      long n = ell;
      while (true) {
        const double exponent = static_cast<double>(n) + to_double(eps) + 1.0;
        const double deviation = std::pow(x, exponent) / (1.0 - x);
        if (deviation < policy.tolerance) {
          rel_tail += deviation;  // bound on the discarded factors
          break;
        }
        const ValueWithTail factor =
            table_factor(exponent, shape, tau, policy, conv);
        rhs.value *= factor.value;
        rel_tail += rel(factor);
        if (++n - ell > policy.max_series_terms) {
          throw budget_error("table row factor chain exceeded the term cap");
        }
      }
      rhs.tail = std::abs(rhs.value) * rel_tail;
    }
    report.rhs = rhs.value;
    report.residual = std::abs(report.lhs - report.rhs);
    report.tail_budget = product.tail + rhs.tail;
  } catch (const pole_error& e) {
    report.pole = true;
    report.residual = kInf;
    report.note = e.what();
  }
  report.judge();
  return report;
}

// ---------------------------------------------------------------------------
// f1 f2 f3 = 1

IdentityReport verify_f_triple_series(const Rational& order, int m_base) {
  IdentityReport report;
  report.id = "ftriple.series";
  report.conventions.m_base = m_base;
  report.params["order"] = rational_to_string(order);
  report.audit = m_base != 0;
  report.tolerance = 0.0;

  const std::int64_t grid = FormalSeries::kDefaultGrid;
  const FormalSeries product = weber_f_series(1, order, grid, m_base) *
                               weber_f_series(2, order, grid, m_base) *
                               weber_f_series(3, order, grid, m_base);
  report.lhs = {1.0, 0.0};
  report.rhs = {1.0, 0.0};
  report.residual = series_deviation(product);
  if (!product.is_one()) {
    report.params["product_series"] = product.to_json();
    report.note = "product deviates from 1; series attached";
  }
  report.judge();
  return report;
}

IdentityReport verify_f_triple_numeric(const ModularParameter& tau,
                                       int m_base) {
  IdentityReport report;
  report.id = "ftriple.numeric";
  report.conventions.m_base = m_base;
  report.params["tau"] = tau_json(tau);
  report.audit = m_base != 0;
  report.tolerance = tolerances::f_triple_numeric;

  const TruncationPolicy policy;
  const ValueWithTail f1 = weber_f(1, tau, policy, m_base);
  const ValueWithTail f2 = weber_f(2, tau, policy, m_base);
  const ValueWithTail f3 = weber_f(3, tau, policy, m_base);
  report.lhs = f1.value * f2.value * f3.value;
  report.rhs = {1.0, 0.0};
  report.residual = std::abs(report.lhs - report.rhs);
  report.tail_budget =
      std::abs(report.lhs) * (rel(f1) + rel(f2) + rel(f3));
  report.judge();
  return report;
}

// ---------------------------------------------------------------------------
// Ruelle triple product

IdentityReport verify_ruelle_triple(const ModularParameter& tau,
                                    const TruncationPolicy& policy,
                                    const Conventions& conv) {
  IdentityReport report;
  report.id = "ruelletriple";
  report.conventions = conv;
  report.params["tau"] = tau_json(tau);
  report.audit = true;
  report.tolerance = tolerances::ruelle_triple;

  try {
    ValueWithTail v1, v2, v3;
    if (conv.r_reading == Conventions::RReading::ratio) {
      v1 = z_ratio_xi(1.5, tau, RatioVariant::plain, policy, conv.eta_sign);
      v2 = z_ratio_xi(1.5, tau, RatioVariant::eta_shifted, policy,
                      conv.eta_sign);
      v3 = z_ratio_xi(2.0, tau, RatioVariant::eta_shifted, policy,
                      conv.eta_sign);
    } else {
      const std::complex<double> dir = tau.one_minus_it();
      const std::complex<double> shift = tau.eta_arg_shift(conv.eta_sign);
      v1 = ruelle({1.5 * dir}, tau, policy);
      v2 = ruelle({1.5 * dir + shift}, tau, policy);
      v3 = ruelle({2.0 * dir + shift}, tau, policy);
    }
    report.lhs = v1.value * v2.value * v3.value;
    report.rhs = {1.0, 0.0};
    report.residual = std::abs(report.lhs - report.rhs);
    report.tail_budget =
        std::abs(report.lhs) * (rel(v1) + rel(v2) + rel(v3));
  } catch (const pole_error& e) {
    report.pole = true;
    report.residual = kInf;
    report.note = e.what();
  }
  report.judge();
  return report;
}

std::vector<IdentityReport> verify_ruelle_triple_all(
    const ModularParameter& tau, const TruncationPolicy& policy) {
  std::vector<IdentityReport> out;
  for (const auto reading :
       {Conventions::RReading::ratio, Conventions::RReading::triple}) {
    for (const int sign : {+1, -1}) {
      Conventions conv;
      conv.r_reading = reading;
      conv.eta_sign = sign;
      out.push_back(verify_ruelle_triple(tau, policy, conv));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Euler bracket chain

namespace {

void check_euler_exponent(long e) {
  if (e < 0) throw domain_error("Euler bracket exponent must be >= 0");
}

FormalSeries bracket_series(const Rational& order, int m_base) {
  const std::int64_t grid = FormalSeries::kDefaultGrid;
  const std::int64_t units = to_grid_units(order, grid);
  // q^{-25/24} (q - 1) f3(q)
  const FormalSeries prefactor =
      FormalSeries::monomial(grid, Rational(-25, 24), 1, units);
  SeriesBuilder q_minus_one(grid, 0, units);
  q_minus_one.set(0, -1);
  if (units > grid) q_minus_one.set(grid, 1);
  return prefactor * q_minus_one.take() *
         weber_f_series(3, order, grid, m_base);
}

}  // namespace

IdentityReport audit_euler_bracket_series(long e, const Rational& order,
                                          int m_base) {
  check_euler_exponent(e);
  IdentityReport report;
  report.id = "eulerbracket.series";
  report.conventions.m_base = m_base;
  report.params["e"] = e;
  report.params["order"] = rational_to_string(order);
  report.audit = true;
  report.tolerance = 0.0;

  const std::int64_t grid = FormalSeries::kDefaultGrid;
  QProductSpec odd;  // prod (1 - q^{2n-1})
  odd.parity = QProductSpec::Parity::odd_index;
  const FormalSeries base = series_qproduct(odd, grid, order);
  const FormalSeries deviation =
      bracket_series(order, m_base).pow(e) * base.pow(e);  // rhs / lhs
  report.lhs = {1.0, 0.0};
  report.rhs = {1.0, 0.0};
  report.residual = series_deviation(deviation);
  if (!deviation.is_one()) {
    report.params["deviation_factor"] = deviation.to_json();
    report.note = "rhs/lhs deviation factor attached";
  }
  report.judge();
  return report;
}

IdentityReport audit_euler_bracket_numeric(long e, const ModularParameter& tau,
                                           int m_base) {
  check_euler_exponent(e);
  IdentityReport report;
  report.id = "eulerbracket.numeric";
  report.conventions.m_base = m_base;
  report.params["e"] = e;
  report.params["tau"] = tau_json(tau);
  report.audit = true;
  report.tolerance = tolerances::audit_generic;

  const TruncationPolicy policy;
  QProductSpec odd;
  odd.parity = QProductSpec::Parity::odd_index;
  const ValueWithTail base = numeric_qproduct(odd, tau, policy);
  report.lhs = ipow(base.value, -e);

  const ValueWithTail f3 = weber_f(3, tau, policy, m_base);
  const std::complex<double> bracket =
      tau.q_pow(Rational(-25, 24)) * (tau.q() - 1.0) * f3.value;
  report.rhs = ipow(bracket, e);
  report.residual = std::abs(report.lhs - report.rhs);
  report.tail_budget = std::abs(report.lhs) * (static_cast<double>(e) *
                                               (rel(base) + rel(f3)));
  report.judge();
  return report;
}

// ---------------------------------------------------------------------------
// Dual representation cross-check

IdentityReport cross_check_z(std::span<const std::complex<double>> s_grid,
                             const ModularParameter& tau,
                             const TruncationPolicy& policy, Exec exec) {
  IdentityReport report;
  report.id = "crossz";
  report.params["tau"] = tau_json(tau);
  report.params["points"] = s_grid.size();
  report.audit = false;
  report.tolerance = tolerances::cross_z;

  const std::size_t n = s_grid.size();
  std::vector<double> diff(n), budget(n);
  std::vector<std::complex<double>> lhs(n), rhs(n);
  for_each_index(n, exec, [&](std::size_t i) {
    const ValueWithTail product =
        z_gamma_product({s_grid[i]}, tau, policy, Exec::serial);
    const ValueWithTail log_series =
        z_gamma_logseries({s_grid[i]}, tau, policy, Exec::serial);
    const std::complex<double> exp_series = std::exp(log_series.value);
    lhs[i] = product.value;
    rhs[i] = exp_series;
    diff[i] = std::abs(product.value - exp_series);
    budget[i] =
        product.tail + std::abs(exp_series) * std::expm1(log_series.tail);
  });
  report.residual = 0.0;
  report.tail_budget = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (diff[i] >= report.residual) {
      report.residual = diff[i];
      report.lhs = lhs[i];
      report.rhs = rhs[i];
    }
    report.tail_budget = std::max(report.tail_budget, budget[i]);
  }
  report.judge();
  return report;
}

// ---------------------------------------------------------------------------
// Hilbert-scheme spectral line

IdentityReport goettsche_spectral_check(const BettiVector& betti,
                                        const ModularParameter& tau,
                                        const TruncationPolicy& policy,
                                        const Conventions& conv) {
  IdentityReport report;
  report.id = "goettsche.spectral";
  report.conventions = conv;
  report.params["tau"] = tau_json(tau);
  report.params["betti"] = {betti.b0, betti.b1, betti.b2, betti.b3, betti.b4};
  report.audit = true;
  report.tolerance = tolerances::audit_generic;

  const ValueWithTail lhs = goettsche_product_numeric(betti, tau, policy);
  report.lhs = lhs.value;

  try {
    const auto factor = [&](double xi, bool eta) -> ValueWithTail {
      if (conv.r_reading == Conventions::RReading::ratio) {
        return z_ratio_xi(
            xi, tau, eta ? RatioVariant::eta_shifted : RatioVariant::plain,
            policy, conv.eta_sign);
      }
      std::complex<double> arg = xi * tau.one_minus_it();
      if (eta) arg += tau.eta_arg_shift(conv.eta_sign);
      return ruelle({arg}, tau, policy);
    };
    // literal pairing: xi_{2j-1} = j - 1/2 over b1, b3; xi_{2j-2} = j - 1
    // over b0, b2, b4
    std::complex<double> numerator{1.0, 0.0};
    double num_rel = 0.0;
    const double xi_odd[2] = {0.5, 1.5};
    const long b_odd[2] = {betti.b1, betti.b3};
    for (int j = 0; j < 2; ++j) {
      if (b_odd[j] == 0) continue;
      const ValueWithTail f = factor(xi_odd[j], true);
      numerator *= ipow(f.value, b_odd[j]);
      num_rel += static_cast<double>(b_odd[j]) * rel(f);
    }
    std::complex<double> denominator{1.0, 0.0};
    double den_rel = 0.0;
    const double xi_even[3] = {0.0, 1.0, 2.0};
    const long b_even[3] = {betti.b0, betti.b2, betti.b4};
    for (int j = 0; j < 3; ++j) {
      if (b_even[j] == 0) continue;
      const ValueWithTail f = factor(xi_even[j], false);
      denominator *= ipow(f.value, b_even[j]);
      den_rel += static_cast<double>(b_even[j]) * rel(f);
    }
    if (std::abs(denominator) <
        1e-12 * std::max(1.0, std::abs(numerator))) {
      throw pole_error(
          "spectral denominator vanishes (a b_{2j-2} factor sits at a zero)");
    }
    report.rhs = numerator / denominator;
    report.residual = std::abs(report.lhs - report.rhs);
    report.tail_budget =
        lhs.tail + std::abs(report.rhs) * (num_rel + den_rel);
  } catch (const pole_error& e) {
    report.pole = true;
    report.residual = kInf;
    report.note = e.what();
  }
  report.judge();
  return report;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

struct Job {
  std::string id;
  Conventions conv;
  bool audit = true;
  std::function<IdentityReport()> fn;
};

std::vector<IdentityReport> run_jobs(const std::vector<Job>& jobs, Exec exec) {
  std::vector<IdentityReport> reports(jobs.size());
  for_each_index(jobs.size(), exec, [&](std::size_t i) {
    try {
      reports[i] = jobs[i].fn();
    } catch (const std::exception& e) {
      IdentityReport fallback;
      fallback.id = jobs[i].id;
      fallback.conventions = jobs[i].conv;
      fallback.audit = jobs[i].audit;
      fallback.residual = kInf;
      fallback.pass = false;
      fallback.note = e.what();
      reports[i] = fallback;
    }
  });
  return reports;
}

std::vector<std::pair<long, Rational>> standard_ell_eps() {
  return {{0, Rational(1, 2)},
          {1, Rational(0)},
          {1, Rational(1, 2)},
          {2, Rational(0)},
          {2, Rational(1, 2)}};
}

bool keep_reading(const SuiteOptions& options, Conventions::RReading r) {
  return !options.r_reading || *options.r_reading == r;
}

bool keep_eta(const SuiteOptions& options, int sign) {
  return !options.eta_sign || *options.eta_sign == sign;
}

bool keep_m_base(const SuiteOptions& options, int m) {
  return !options.m_base || *options.m_base == m;
}

std::vector<ModularParameter> taus_or(const SuiteOptions& options,
                                      std::vector<ModularParameter> fallback) {
  if (options.tau) return {*options.tau};
  return fallback;
}

std::vector<IdentityReport> suite_table1(const SuiteOptions& options) {
  std::vector<Job> jobs;
  const auto taus = taus_or(options, standard_tau_grid());
  const auto pairs = standard_ell_eps();
  const TruncationPolicy policy = options.policy;

  const auto push = [&](int row, long ell, Rational eps,
                        const ModularParameter& tau, Conventions conv) {
    Job job;
    job.id = "table1.row" + std::to_string(row);
    job.conv = conv;
    job.audit = !(row <= 4 &&
                  conv.r_reading == Conventions::RReading::ratio &&
                  conv.eta_sign == +1);
    job.fn = [=] { return verify_table_row(row, ell, eps, tau, policy, conv); };
    jobs.push_back(std::move(job));
  };

  // rows 1-4, ratio reading, default eta sign: the hard checks
  if (keep_reading(options, Conventions::RReading::ratio) &&
      keep_eta(options, +1)) {
    for (int row = 1; row <= 4; ++row) {
      for (const auto& tau : taus) {
        for (const auto& [ell, eps] : pairs) {
          push(row, ell, eps, tau, Conventions{});
        }
      }
    }
  }
  // rows 1-4 audits: triple reading, and the flipped eta sign on rows 3-4
  if (keep_reading(options, Conventions::RReading::triple) &&
      keep_eta(options, +1)) {
    for (int row = 1; row <= 4; ++row) {
      for (const auto& tau : taus) {
        Conventions conv;
        conv.r_reading = Conventions::RReading::triple;
        push(row, 1, Rational(0), tau, conv);
      }
    }
  }
  if (keep_reading(options, Conventions::RReading::ratio) &&
      keep_eta(options, -1)) {
    for (int row = 3; row <= 4; ++row) {
      for (const auto& tau : taus) {
        Conventions conv;
        conv.eta_sign = -1;
        push(row, 1, Rational(0), tau, conv);
      }
    }
  }
  // weight-index rows 5-8 under both readings (and both eta signs where the
  // shift enters)
  for (int row = 5; row <= 8; ++row) {
    const bool has_eta = row >= 7;
    for (const auto reading :
         {Conventions::RReading::ratio, Conventions::RReading::triple}) {
      if (!keep_reading(options, reading)) continue;
      for (const int sign : has_eta ? std::vector<int>{+1, -1}
                                    : std::vector<int>{+1}) {
        if (!keep_eta(options, sign)) continue;
        for (const auto& [ell, eps] :
             std::vector<std::pair<long, Rational>>{{1, Rational(0)},
                                                    {1, Rational(1, 2)}}) {
          for (const auto& tau : taus) {
            Conventions conv;
            conv.r_reading = reading;
            conv.eta_sign = sign;
            push(row, ell, eps, tau, conv);
          }
        }
      }
    }
  }
  return run_jobs(jobs, options.exec);
}

std::vector<IdentityReport> suite_ftriple(const SuiteOptions& options) {
  std::vector<IdentityReport> out;
  const ModularParameter tau =
      options.tau ? *options.tau : ModularParameter(0.0, 1.0);
  for (const int m_base : {0, 1}) {
    if (!keep_m_base(options, m_base)) continue;
    out.push_back(verify_f_triple_series(Rational(20), m_base));
    out.push_back(verify_f_triple_numeric(tau, m_base));
  }
  return out;
}

std::vector<IdentityReport> suite_ruelletriple(const SuiteOptions& options) {
  std::vector<IdentityReport> out;
  for (const auto& tau : taus_or(options, standard_tau_grid())) {
    for (const auto reading :
         {Conventions::RReading::ratio, Conventions::RReading::triple}) {
      if (!keep_reading(options, reading)) continue;
      for (const int sign : {+1, -1}) {
        if (!keep_eta(options, sign)) continue;
        Conventions conv;
        conv.r_reading = reading;
        conv.eta_sign = sign;
        out.push_back(verify_ruelle_triple(tau, options.policy, conv));
      }
    }
  }
  return out;
}

std::vector<IdentityReport> suite_eulerbracket(const SuiteOptions& options) {
  std::vector<IdentityReport> out;
  const ModularParameter tau =
      options.tau ? *options.tau : ModularParameter(0.0, 1.0);
  for (const long e : {0L, 1L, 2L}) {
    for (const int m_base : {0, 1}) {
      if (!keep_m_base(options, m_base)) continue;
      out.push_back(audit_euler_bracket_series(e, Rational(8), m_base));
      out.push_back(audit_euler_bracket_numeric(e, tau, m_base));
    }
  }
  return out;
}

std::vector<IdentityReport> suite_crossz(const SuiteOptions& options) {
  std::vector<IdentityReport> out;
  std::vector<std::complex<double>> grid;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      grid.emplace_back(0.5 + 4.5 * i / 4.0, -2.0 + 4.0 * j / 4.0);
    }
  }
  for (const auto& tau : taus_or(options, crossz_tau_grid())) {
    out.push_back(cross_check_z(grid, tau, options.policy, options.exec));
  }
  return out;
}

std::vector<IdentityReport> suite_zeros(const SuiteOptions& options) {
  const ModularParameter tau =
      options.tau ? *options.tau : ModularParameter(0.3, 1.1);
  std::vector<ZeroIndex> indices;
  if (options.zero_box) {
    for (const auto& [index, location] :
         zeros_predicted(tau, *options.zero_box)) {
      indices.push_back(index);
    }
  } else {
    for (long d = 0; d <= 3; ++d) {
      for (long k1 = 0; k1 <= d; ++k1) {
        for (long n = -3; n <= 3; ++n) {
          indices.push_back({n, k1, d - k1});
        }
      }
    }
  }
  std::vector<Job> jobs;
  for (const ZeroIndex& index : indices) {
    Job job;
    job.id = "zeros.residual";
    job.audit = false;
    job.fn = [=, policy = options.policy] {
      IdentityReport report;
      report.id = "zeros.residual";
      report.params["n"] = index.n;
      report.params["k1"] = index.k1;
      report.params["k2"] = index.k2;
      report.params["tau"] = tau_json(tau);
      report.audit = false;
      report.tolerance = tolerances::zero_residual;
      const ValueWithTail value = verify_zero(index, tau, policy, Exec::serial);
      report.lhs = value.value;
      report.rhs = {0.0, 0.0};
      report.residual = std::abs(value.value);
      report.tail_budget = value.tail;
      report.judge();
      return report;
    };
    jobs.push_back(std::move(job));
  }
  return run_jobs(jobs, options.exec);
}

std::vector<IdentityReport> suite_goettsche_spectral(
    const SuiteOptions& options) {
  std::vector<IdentityReport> out;
  const std::vector<BettiVector> bettis = {
      {0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}};
  for (const auto& tau : taus_or(options, {ModularParameter(0.3, 1.1)})) {
    for (const auto& betti : bettis) {
      for (const auto reading :
           {Conventions::RReading::ratio, Conventions::RReading::triple}) {
        if (!keep_reading(options, reading)) continue;
        Conventions conv;
        conv.r_reading = reading;
        out.push_back(
            goettsche_spectral_check(betti, tau, options.policy, conv));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"all",          "table1", "ftriple", "ruelletriple",
          "eulerbracket", "crossz", "zeros",   "goettsche-spectral"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  SuiteResult result;
  const auto append = [&](std::vector<IdentityReport> reports) {
    for (auto& r : reports) {
      if (!r.audit && !r.pass) result.hard_pass = false;
      result.reports.push_back(std::move(r));
    }
  };
  if (name == "table1") {
    append(suite_table1(options));
  } else if (name == "ftriple") {
    append(suite_ftriple(options));
  } else if (name == "ruelletriple") {
    append(suite_ruelletriple(options));
  } else if (name == "eulerbracket") {
    append(suite_eulerbracket(options));
  } else if (name == "crossz") {
    append(suite_crossz(options));
  } else if (name == "zeros") {
    append(suite_zeros(options));
  } else if (name == "goettsche-spectral") {
    append(suite_goettsche_spectral(options));
  } else if (name == "all") {
    append(suite_table1(options));
    append(suite_ftriple(options));
    append(suite_ruelletriple(options));
    append(suite_eulerbracket(options));
    append(suite_crossz(options));
    append(suite_zeros(options));
    append(suite_goettsche_spectral(options));
  } else {
    throw usage_error("unknown verification suite: " + name);
  }
  return result;
}

nlohmann::ordered_json SuiteResult::to_json() const {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& report : reports) array.push_back(report.to_json());
  return array;
}

}  // namespace spectra
