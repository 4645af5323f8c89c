#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "spectra/exec.hpp"
#include "spectra/modular.hpp"
#include "spectra/policy.hpp"
#include "spectra/qseries.hpp"

namespace spectra {

// Argument of Z_Gamma.  No intrinsic restriction: the defining lattice
// product is entire in s.
struct SpectralPoint {
  std::complex<double> s;
  SpectralPoint(std::complex<double> v) : s(v) {}  // NOLINT(runtime/explicit)
  SpectralPoint(double re, double im = 0.0) : s(re, im) {}
};

// Index of a predicted zero
//   zeta_{n,k1,k2} = -(k1+k2) + i (k1-k2) beta/alpha + 2 pi i n / alpha.
struct ZeroIndex {
  long n = 0;
  long k1 = 0;
  long k2 = 0;

  std::complex<double> location(const ModularParameter& tau) const;
};

struct Box {
  double re_min, re_max, im_min, im_max;
};

// Z_Gamma(s) by the defining lattice product
//   prod_{k1,k2 >= 0} [1 - e^{i beta k1} e^{-i beta k2} e^{-(k1+k2+s) alpha}],
// truncated at diagonals k1 + k2 <= K (the factor modulus depends on k1+k2
// only, giving a clean geometric tail).  Entire in s; for Re s <= 0 the
// cutoff must reach past -Re s, which adaptive mode ensures.
ValueWithTail z_gamma_product(SpectralPoint s, const ModularParameter& tau,
                              const TruncationPolicy& policy,
                              Exec exec = Exec::parallel);

// log Z_Gamma(s) by the exponential series
//   -(1/4) sum_{n>=1} e^{-n alpha (s-1)} / (n [sinh^2(alpha n/2) + sin^2(beta n/2)]),
// valid for Re s > 0 (domain_error otherwise).  Cross-check route for the
// product representation.
ValueWithTail z_gamma_logseries(SpectralPoint s, const ModularParameter& tau,
                                const TruncationPolicy& policy,
                                Exec exec = Exec::parallel);

// log |Z_Gamma(s)| accumulated diagonal-by-diagonal; never overflows even
// where |Z| is astronomically large (deep left half plane).
ValueWithTail z_gamma_log_abs(SpectralPoint s, const ModularParameter& tau,
                              const TruncationPolicy& policy,
                              Exec exec = Exec::parallel);

// Three-factor Ruelle function for a closed hyperbolic three-manifold:
//   R(s) = Z(s) Z(2+s) / Z(1+s).
// pole_error if Z(1+s) vanishes within tolerance (relative to numerator).
ValueWithTail ruelle(SpectralPoint s, const ModularParameter& tau,
                     const TruncationPolicy& policy,
                     Exec exec = Exec::parallel);

// The four two-factor ratio variants of the generating-function table:
//   plain:                Z(s) / Z(s + 1 + i t)
//   conjugate:            Z(s) / Z(s + 1 - i t)
//   eta_shifted:          Z(s + sh) / Z(s + sh + 1 + i t)
//   conjugate_eta_shifted Z(s + sh) / Z(s + sh + 1 - i t)
// with sh = eta_mult * eta(tau) (1 - i t) = -eta_sign * eta_mult * i/(2 Im tau).
enum class RatioVariant { plain, conjugate, eta_shifted, conjugate_eta_shifted };

ValueWithTail z_ratio(SpectralPoint s, const ModularParameter& tau,
                      RatioVariant variant, const TruncationPolicy& policy,
                      int eta_sign = +1, double eta_mult = 1.0,
                      Exec exec = Exec::parallel);

// Builds s = xi (1 -+ i t) for the variant and forwards to z_ratio.  This is
// the ratio attached to the product family with xi = start + shift.
ValueWithTail z_ratio_xi(double xi, const ModularParameter& tau,
                         RatioVariant variant, const TruncationPolicy& policy,
                         int eta_sign = +1, double eta_mult = 1.0,
                         Exec exec = Exec::parallel);

// All predicted zeros inside the box, ordered by (k1+k2, k1-k2, n).
std::vector<std::pair<ZeroIndex, std::complex<double>>> zeros_predicted(
    const ModularParameter& tau, const Box& box);

// Truncated product evaluated at the predicted zero.  The zero's lattice
// decomposition is substituted analytically: the 2 pi i n / alpha component
// is dropped (Z is exactly periodic with that period) and the diagonal
// offsets cancel as integers, so the vanishing factor evaluates to exact
// zero instead of being destroyed by catastrophic cancellation.
// cutoff_error if k1 + k2 exceeds the product cutoff.
ValueWithTail verify_zero(const ZeroIndex& index, const ModularParameter& tau,
                          const TruncationPolicy& policy,
                          Exec exec = Exec::parallel);

// Least-squares fit of log|Z(s)| <= log C1 + C2 |s|^3 over the samples,
// with log C1 lifted so no sample violates the bound; pass iff finite
// constants exist (C2 clamped >= 0) and no violation remains.
struct GrowthFit {
  double log_c1 = 0.0;
  double c2 = 0.0;
  bool pass = false;
  int violations = 0;
  std::vector<std::size_t> outliers;  // samples > 3 sigma above the LS fit
  double max_log_abs = 0.0;
};

GrowthFit growth_check(const ModularParameter& tau,
                       std::span<const std::complex<double>> samples,
                       const TruncationPolicy& policy,
                       Exec exec = Exec::parallel);

// Deterministic sample grid over Re s, Im s in [-5, 5], nudged so every
// point keeps at least `margin` distance from every predicted zero.
std::vector<std::complex<double>> growth_sample_grid(
    const ModularParameter& tau, int count, double margin);

// Upper half-space model point, z > 0.
struct H3Point {
  double x, y, z;
};

// Element of SL(2, C); det a d - b c must be 1 within tolerance.
struct Moebius {
  std::complex<double> a, b, c, d;
};

// Isometric action on H^3: with r = x + i y,
//   u + i v = [(a r + b) conj(c r + d) + a conj(c) z^2] / D,
//   w       = z / D,   D = |c r + d|^2 + |c|^2 z^2.
// Preserves w > 0; domain_error if det deviates from 1 by more than 1e-9.
H3Point hyperbolic_action(const Moebius& g, const H3Point& p);

// The loxodromic generator diag(e^{(alpha+i beta)/2}, e^{-(alpha+i beta)/2}):
// a rotation by beta composed with a dilation by e^{alpha}.
Moebius loxodromic_generator(const ModularParameter& tau);

// Geometric tail bound e^{-alpha (K + Re s)} K / (1 - e^{-alpha}) for the
// lattice product truncated at diagonal K.
double lattice_tail_bound(double alpha, double re_s, int k);

// Smallest cutoff meeting the policy (budget_error if none within bounds).
int choose_lattice_cutoff(double alpha, double re_s,
                          const TruncationPolicy& policy);

}  // namespace spectra
