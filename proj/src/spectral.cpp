#include "spectra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "spectra/errors.hpp"
#include "spectra/kernels.hpp"

namespace spectra {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPoleRelTolerance = 1e-12;

double relative_tail(const ValueWithTail& v) {
  const double mag = std::abs(v.value);
  return mag > 0.0 ? v.tail / mag : v.tail;
}

}  // namespace

double lattice_tail_bound(double alpha, double re_s, int k) {
  const double kk = std::max(k, 1);
  return std::exp(-alpha * (static_cast<double>(k) + re_s)) * kk /
         (1.0 - std::exp(-alpha));
}

int choose_lattice_cutoff(double alpha, double re_s,
                          const TruncationPolicy& policy) {
  if (policy.mode == TruncationPolicy::Mode::fixed) {
    return policy.lattice_cutoff;
  }
  int k = std::max({policy.lattice_cutoff,
                    static_cast<int>(std::ceil(-re_s)) + 1, 1});
  while (lattice_tail_bound(alpha, re_s, k) > policy.tolerance) {
    ++k;
    if (k > policy.max_lattice_cutoff) {
      throw budget_error(
          "adaptive lattice cutoff exceeded max_lattice_cutoff before "
          "meeting the tolerance");
    }
  }
  return k;
}

std::complex<double> ZeroIndex::location(const ModularParameter& tau) const {
  const double alpha = tau.alpha();
  const double beta = tau.beta();
  return {-static_cast<double>(k1 + k2),
          static_cast<double>(k1 - k2) * beta / alpha +
              kTwoPi * static_cast<double>(n) / alpha};
}

ValueWithTail z_gamma_product(SpectralPoint s, const ModularParameter& tau,
                              const TruncationPolicy& policy, Exec exec) {
  const int k = choose_lattice_cutoff(tau.alpha(), s.s.real(), policy);
  std::vector<std::complex<double>> partial(static_cast<std::size_t>(k) + 1);
  std::vector<double> logabs(partial.size());
  kernels::zgamma_diagonals(s.s, tau.alpha(), tau.beta(), k, exec,
                            partial.data(), logabs.data());
  std::complex<double> value{1.0, 0.0};
  for (const auto& p : partial) value *= p;
  const double log_tail = lattice_tail_bound(tau.alpha(), s.s.real(), k);
  return {value, std::abs(value) * std::expm1(log_tail)};
}

ValueWithTail z_gamma_log_abs(SpectralPoint s, const ModularParameter& tau,
                              const TruncationPolicy& policy, Exec exec) {
  const int k = choose_lattice_cutoff(tau.alpha(), s.s.real(), policy);
  std::vector<std::complex<double>> partial(static_cast<std::size_t>(k) + 1);
  std::vector<double> logabs(partial.size());
  kernels::zgamma_diagonals(s.s, tau.alpha(), tau.beta(), k, exec,
                            partial.data(), logabs.data());
  double acc = 0.0;
  for (const double l : logabs) acc += l;
  return {std::complex<double>{acc, 0.0},
          lattice_tail_bound(tau.alpha(), s.s.real(), k)};
}

ValueWithTail z_gamma_logseries(SpectralPoint s, const ModularParameter& tau,
                                const TruncationPolicy& policy, Exec exec) {
  const double re_s = s.s.real();
  if (!(re_s > 0.0)) {
    throw domain_error(
        "the exponential series for log Z_Gamma requires Re s > 0");
  }
  const double alpha = tau.alpha();
  const double damp = 1.0 - std::exp(-alpha);
  // sinh^2(alpha n/2) >= e^{alpha n} damp^2 / 4, so each summand (with the
  // global 1/4) is bounded by e^{-n alpha Re s} / (n damp^2); geometric tail
  // beyond N.
  const auto tail_bound = [&](long n_used) {
    const double r = std::exp(-alpha * re_s);
    return std::pow(r, static_cast<double>(n_used + 1)) /
           (static_cast<double>(n_used + 1) * damp * damp * (1.0 - r));
  };
  long n = 4;
  while (tail_bound(n) > policy.tolerance) {
    ++n;
    if (n > policy.max_series_terms) {
      throw budget_error(
          "log-series term count exceeded max_series_terms before meeting "
          "the tolerance");
    }
  }
  std::vector<std::complex<double>> term(static_cast<std::size_t>(n));
  kernels::logseries_terms(s.s, alpha, tau.beta(), n, exec, term.data());
  std::complex<double> acc{0.0, 0.0};
  for (const auto& t : term) acc += t;
  return {-0.25 * acc, tail_bound(n)};
}

ValueWithTail ruelle(SpectralPoint s, const ModularParameter& tau,
                     const TruncationPolicy& policy, Exec exec) {
  const ValueWithTail z0 = z_gamma_product(s, tau, policy, exec);
  const ValueWithTail z2 = z_gamma_product({s.s + 2.0}, tau, policy, exec);
  const ValueWithTail z1 = z_gamma_product({s.s + 1.0}, tau, policy, exec);
  const double num_mag = std::abs(z0.value * z2.value);
  if (std::abs(z1.value) < kPoleRelTolerance * std::max(1.0, num_mag)) {
    throw pole_error("Ruelle denominator Z(1+s) vanishes within tolerance");
  }
  const std::complex<double> value = z0.value * z2.value / z1.value;
  const double tail =
      (z0.tail * std::abs(z2.value) + z2.tail * std::abs(z0.value)) /
          std::abs(z1.value) +
      std::abs(value) * relative_tail(z1);
  return {value, tail};
}

ValueWithTail z_ratio(SpectralPoint s, const ModularParameter& tau,
                      RatioVariant variant, const TruncationPolicy& policy,
                      int eta_sign, double eta_mult, Exec exec) {
  const bool conjugate = variant == RatioVariant::conjugate ||
                         variant == RatioVariant::conjugate_eta_shifted;
  const bool eta = variant == RatioVariant::eta_shifted ||
                   variant == RatioVariant::conjugate_eta_shifted;
  std::complex<double> arg = s.s;
  if (eta) arg += tau.eta_arg_shift(eta_sign, eta_mult);
  const std::complex<double> den_arg =
      arg + (conjugate ? tau.one_minus_it() : tau.one_plus_it());
  const ValueWithTail num = z_gamma_product({arg}, tau, policy, exec);
  const ValueWithTail den = z_gamma_product({den_arg}, tau, policy, exec);
  if (std::abs(den.value) <
      kPoleRelTolerance * std::max(1.0, std::abs(num.value))) {
    throw pole_error("ratio denominator vanishes within tolerance");
  }
  const std::complex<double> value = num.value / den.value;
  const double tail = num.tail / std::abs(den.value) +
                      std::abs(value) * relative_tail(den);
  return {value, tail};
}

ValueWithTail z_ratio_xi(double xi, const ModularParameter& tau,
                         RatioVariant variant, const TruncationPolicy& policy,
                         int eta_sign, double eta_mult, Exec exec) {
  const bool conjugate = variant == RatioVariant::conjugate ||
                         variant == RatioVariant::conjugate_eta_shifted;
  const std::complex<double> direction =
      conjugate ? tau.one_plus_it() : tau.one_minus_it();
  return z_ratio({xi * direction}, tau, variant, policy, eta_sign, eta_mult,
                 exec);
}

std::vector<std::pair<ZeroIndex, std::complex<double>>> zeros_predicted(
    const ModularParameter& tau, const Box& box) {
  std::vector<std::pair<ZeroIndex, std::complex<double>>> out;
  const double alpha = tau.alpha();
  const double beta = tau.beta();
  const long d_min = std::max<long>(0, static_cast<long>(std::ceil(-box.re_max)));
  if (box.re_min > box.re_max || box.im_min > box.im_max) return out;
  const long d_max = static_cast<long>(std::floor(-box.re_min));
  for (long d = d_min; d <= d_max; ++d) {
    for (long k1 = 0; k1 <= d; ++k1) {
      const long k2 = d - k1;
      const double base_im = static_cast<double>(k1 - k2) * beta / alpha;
      const long n_lo = static_cast<long>(
          std::ceil((box.im_min - base_im) * alpha / kTwoPi - 1e-12));
      const long n_hi = static_cast<long>(
          std::floor((box.im_max - base_im) * alpha / kTwoPi + 1e-12));
      for (long n = n_lo; n <= n_hi; ++n) {
        ZeroIndex index{n, k1, k2};
        out.emplace_back(index, index.location(tau));
      }
    }
  }
  return out;
}

ValueWithTail verify_zero(const ZeroIndex& index, const ModularParameter& tau,
                          const TruncationPolicy& policy, Exec exec) {
  if (index.k1 < 0 || index.k2 < 0) {
    throw domain_error("zero indices k1, k2 must be nonnegative");
  }
  const long d0 = index.k1 + index.k2;
  const int k = choose_lattice_cutoff(tau.alpha(),
                                      -static_cast<double>(d0), policy);
  if (d0 > k) {
    throw cutoff_error(
        "the factor producing the zero lies outside the product cutoff");
  }
  std::vector<std::complex<double>> partial(static_cast<std::size_t>(k) + 1);
  std::vector<double> logabs(partial.size());
  kernels::zgamma_diagonals_at_zero(d0, index.k1 - index.k2, tau.alpha(),
                                    tau.beta(), k, exec, partial.data(),
                                    logabs.data());
  std::complex<double> value{1.0, 0.0};
  for (const auto& p : partial) value *= p;
  const double log_tail =
      lattice_tail_bound(tau.alpha(), -static_cast<double>(d0), k);
  return {value, std::abs(value) * std::expm1(log_tail)};
}

GrowthFit growth_check(const ModularParameter& tau,
                       std::span<const std::complex<double>> samples,
                       const TruncationPolicy& policy, Exec exec) {
  GrowthFit fit;
  const std::size_t n = samples.size();
  if (n == 0) {
    fit.pass = true;
    return fit;
  }
  std::vector<double> x(n), y(n);
  for_each_index(n, exec, [&](std::size_t i) {
    const double mag = std::abs(samples[i]);
    x[i] = mag * mag * mag;
    y[i] = z_gamma_log_abs({samples[i]}, tau, policy, Exec::serial)
               .value.real();
  });

  // Least squares y ~ a + b x, then lift a so the bound holds everywhere.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(y[i])) return fit;  // pass stays false
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double nn = static_cast<double>(n);
  const double det = nn * sxx - sx * sx;
  double b = det != 0.0 ? (nn * sxy - sx * sy) / det : 0.0;
  double a = (sy - b * sx) / nn;
  if (b < 0.0) {
    // the cubic growth term cannot have a negative constant
    b = 0.0;
    a = sy / nn;
  }

  double sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (a + b * x[i]);
    sq += r * r;
  }
  const double sigma = std::sqrt(sq / nn);
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i] - (a + b * x[i]) > 3.0 * sigma) fit.outliers.push_back(i);
  }

  double lift = a;
  for (std::size_t i = 0; i < n; ++i) lift = std::max(lift, y[i] - b * x[i]);
  fit.log_c1 = lift;
  fit.c2 = b;
  fit.max_log_abs = *std::max_element(y.begin(), y.end());
  fit.violations = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i] > fit.log_c1 + fit.c2 * x[i] + 1e-9) ++fit.violations;
  }
  fit.pass = std::isfinite(fit.log_c1) && std::isfinite(fit.c2) &&
             fit.violations == 0;
  return fit;
}

std::vector<std::complex<double>> growth_sample_grid(
    const ModularParameter& tau, int count, double margin) {
  const int side = std::max(2, static_cast<int>(std::round(std::sqrt(
                                   static_cast<double>(count)))));
  const double lo = -5.0, hi = 5.0;
  const Box search{lo - 1.0, hi + 1.0, lo - 1.0, hi + 1.0};
  const auto zeros = zeros_predicted(tau, search);
  const auto clear_of_zeros = [&](std::complex<double> p) {
    for (const auto& [index, zeta] : zeros) {
      if (std::abs(p - zeta) < margin) return false;
    }
    return true;
  };
  std::vector<std::complex<double>> samples;
  samples.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < side && static_cast<int>(samples.size()) < count; ++i) {
    for (int j = 0; j < side && static_cast<int>(samples.size()) < count;
         ++j) {
      std::complex<double> p{
          lo + (hi - lo) * static_cast<double>(i) / (side - 1),
          lo + (hi - lo) * static_cast<double>(j) / (side - 1)};
      // deterministic nudge off any nearby predicted zero
      int guard = 0;
      while (!clear_of_zeros(p) && guard++ < 64) {
        p += std::complex<double>(1.7 * margin, 1.3 * margin);
      }
      samples.push_back(p);
    }
  }
  return samples;
}

H3Point hyperbolic_action(const Moebius& g, const H3Point& p) {
  const std::complex<double> det = g.a * g.d - g.b * g.c;
  if (std::abs(det - 1.0) > 1e-9) {
    throw domain_error("hyperbolic_action requires det g = 1");
  }
  if (!(p.z > 0.0)) {
    throw domain_error("hyperbolic_action requires a point with z > 0");
  }
  const std::complex<double> r{p.x, p.y};
  const std::complex<double> cr_d = g.c * r + g.d;
  const double denom =
      std::norm(cr_d) + std::norm(g.c) * p.z * p.z;
  if (denom == 0.0) {
    throw domain_error("degenerate hyperbolic action denominator");
  }
  const std::complex<double> uv =
      ((g.a * r + g.b) * std::conj(cr_d) + g.a * std::conj(g.c) * p.z * p.z) /
      denom;
  return {uv.real(), uv.imag(), p.z / denom};
}

Moebius loxodromic_generator(const ModularParameter& tau) {
  const std::complex<double> half_exponent{tau.alpha() / 2.0,
                                           tau.beta() / 2.0};
  return {std::exp(half_exponent), 0.0, 0.0, std::exp(-half_exponent)};
}

}  // namespace spectra
