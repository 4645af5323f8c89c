#include "spectra/fock.hpp"

#include <cmath>

#include "spectra/errors.hpp"
#include "spectra/spectral.hpp"

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

double rel(const ValueWithTail& v) {
  const double mag = std::abs(v.value);
  return mag > 0.0 ? v.tail / mag : v.tail;
}

QProductSpec bosonic() { return {}; }  // prod (1 - q^n)

QProductSpec fermionic() {
  QProductSpec s;
  s.sign = +1;  // prod (1 + q^n)
  return s;
}

QProductSpec odd_minus() {
  QProductSpec s;
  s.parity = QProductSpec::Parity::odd_index;  // prod (1 - q^{2n-1})
  return s;
}

QProductSpec odd_plus() {
  QProductSpec s;
  s.sign = +1;
  s.parity = QProductSpec::Parity::odd_index;  // prod (1 + q^{2n-1})
  return s;
}

void check_dims(const CharacterSpec& spec) {
  if (spec.dim_even < 0 || spec.dim_odd < 0) {
    throw domain_error("graded dimensions must be nonnegative");
  }
}

}  // namespace

FormalSeries heisenberg_character(std::int64_t order) {
  return partition_gf(order);
}

FormalSeries super_character_series(const CharacterSpec& spec,
                                    std::int64_t order) {
  check_dims(spec);
  const Rational ord{order};
  return series_qproduct(fermionic(), 1, ord).pow(spec.dim_odd) *
         series_qproduct(bosonic(), 1, ord).pow(-spec.dim_even);
}

SpectralComparison super_character_numeric(const CharacterSpec& spec,
                                           const ModularParameter& tau,
                                           const TruncationPolicy& policy,
                                           int eta_sign) {
  check_dims(spec);
  const ValueWithTail plus = numeric_qproduct(fermionic(), tau, policy);
  const ValueWithTail minus = numeric_qproduct(bosonic(), tau, policy);
  SpectralComparison out;
  out.direct.value =
      ipow(plus.value, spec.dim_odd) * ipow(minus.value, -spec.dim_even);
  out.direct.tail =
      std::abs(out.direct.value) *
      (spec.dim_odd * rel(plus) + spec.dim_even * rel(minus));

  const ValueWithTail odd = z_ratio_xi(1.0, tau, RatioVariant::eta_shifted,
                                       policy, eta_sign);
  const ValueWithTail even =
      z_ratio_xi(1.0, tau, RatioVariant::plain, policy);
  out.spectral.value =
      ipow(odd.value, spec.dim_odd) * ipow(even.value, -spec.dim_even);
  out.spectral.tail =
      std::abs(out.spectral.value) *
      (spec.dim_odd * rel(odd) + spec.dim_even * rel(even));
  out.residual = std::abs(out.direct.value - out.spectral.value);
  return out;
}

FormalSeries super_supertrace(const CharacterSpec& spec, std::int64_t order) {
  check_dims(spec);
  return series_qproduct(bosonic(), 1, Rational(order))
      .pow(spec.dim_odd - spec.dim_even);
}

FormalSeries ktheory_euler_series(const WreathSpec& spec, std::int64_t order) {
  return series_qproduct(odd_minus(), 1, Rational(order))
      .pow(-spec.euler_number);
}

SpectralComparison ktheory_euler_numeric(const WreathSpec& spec,
                                         const ModularParameter& tau,
                                         const TruncationPolicy& policy) {
  SpectralComparison out;
  const ValueWithTail base = numeric_qproduct(odd_minus(), tau, policy);
  out.direct.value = ipow(base.value, -spec.euler_number);
  out.direct.tail = std::abs(out.direct.value) *
                    std::abs(static_cast<double>(spec.euler_number)) *
                    rel(base);
  const ValueWithTail spectral_base =
      z_ratio_xi(0.5, tau, RatioVariant::plain, policy);
  out.spectral.value = ipow(spectral_base.value, -spec.euler_number);
  out.spectral.tail = std::abs(out.spectral.value) *
                      std::abs(static_cast<double>(spec.euler_number)) *
                      rel(spectral_base);
  out.residual = std::abs(out.direct.value - out.spectral.value);
  return out;
}

FormalSeries fock_graded_dim_series(const CharacterSpec& spec,
                                    std::int64_t order) {
  check_dims(spec);
  const Rational ord{order};
  return series_qproduct(odd_plus(), 1, ord).pow(spec.dim_odd) *
         series_qproduct(odd_minus(), 1, ord).pow(-spec.dim_even);
}

FockSpectral fock_graded_dim_numeric(const CharacterSpec& spec,
                                     const ModularParameter& tau,
                                     const TruncationPolicy& policy,
                                     int eta_sign) {
  check_dims(spec);
  FockSpectral out;
  const ValueWithTail plus = numeric_qproduct(odd_plus(), tau, policy);
  const ValueWithTail minus = numeric_qproduct(odd_minus(), tau, policy);
  out.direct.value =
      ipow(plus.value, spec.dim_odd) * ipow(minus.value, -spec.dim_even);
  out.direct.tail =
      std::abs(out.direct.value) *
      (spec.dim_odd * rel(plus) + spec.dim_even * rel(minus));

  const ValueWithTail even =
      z_ratio_xi(0.5, tau, RatioVariant::plain, policy);
  const auto assemble = [&](double mult, ValueWithTail& slot) {
    const ValueWithTail odd = z_ratio_xi(
        0.5, tau, RatioVariant::eta_shifted, policy, eta_sign, mult);
    slot.value =
        ipow(odd.value, spec.dim_odd) * ipow(even.value, -spec.dim_even);
    slot.tail = std::abs(slot.value) *
                (spec.dim_odd * rel(odd) + spec.dim_even * rel(even));
  };
  assemble(0.5, out.spectral_half_shift);
  assemble(1.0, out.spectral_full_shift);
  out.residual_half =
      std::abs(out.direct.value - out.spectral_half_shift.value);
  out.residual_full =
      std::abs(out.direct.value - out.spectral_full_shift.value);
  return out;
}

FormalSeries point_case_series(long conjugacy_class_count,
                               std::int64_t order) {
  if (conjugacy_class_count < 1) {
    throw domain_error("the conjugacy class count must be >= 1");
  }
  WreathSpec spec;
  spec.euler_number = conjugacy_class_count;
  return ktheory_euler_series(spec, order);
}

}  // namespace spectra
