#pragma once

#include "spectra/formal_series.hpp"
#include "spectra/modular.hpp"
#include "spectra/policy.hpp"
#include "spectra/qseries.hpp"

namespace spectra {

// Graded dimensions entering the character formulas.  The same pair serves
// the super-Heisenberg module (dim V_even / dim V_odd) and the equivariant
// K-groups (dim K^0 / dim K^1): the formulas depend on nothing else.
struct CharacterSpec {
  long dim_even = 0;
  long dim_odd = 0;
};

// Wreath-product data reduced to its computational surface: the orbifold
// Euler number and the number of conjugacy classes.
struct WreathSpec {
  long euler_number = 0;
  long conjugacy_class_count = 1;
};

// Side-by-side numeric evaluation of a character product and its spectral
// form.  The residual is reported, never silently asserted to vanish.
struct SpectralComparison {
  ValueWithTail direct;
  ValueWithTail spectral;
  double residual = 0.0;
};

// prod (1 - q^n)^{-1}: the bosonic Fock character; coefficient of q^N counts
// the monomials p_1^{m_1} p_2^{m_2} ... with sum i m_i = N.
FormalSeries heisenberg_character(std::int64_t order);

// Tr q^D = prod (1 + q^n)^{dim_odd} / (1 - q^n)^{dim_even}.
FormalSeries super_character_series(const CharacterSpec& spec,
                                    std::int64_t order);
// Numeric value plus its spectral form
//   R(sigma = 1 - i t + i eta)^{dim_odd} / R(s = 1 - i t)^{dim_even}
// evaluated through the two-factor ratio.
SpectralComparison super_character_numeric(const CharacterSpec& spec,
                                           const ModularParameter& tau,
                                           const TruncationPolicy& policy,
                                           int eta_sign = +1);

// STr q^D = prod (1 - q^n)^{dim_odd - dim_even}.
FormalSeries super_supertrace(const CharacterSpec& spec, std::int64_t order);

// prod (1 - q^{2n-1})^{-e}: Euler numbers of the generalized symmetric
// products.
FormalSeries ktheory_euler_series(const WreathSpec& spec, std::int64_t order);
// Spectral form R(s = 1/2 - (1/2) i t)^{-e}; the residual against the direct
// product is informational (the arguments live on a doubled lattice).
SpectralComparison ktheory_euler_numeric(const WreathSpec& spec,
                                         const ModularParameter& tau,
                                         const TruncationPolicy& policy);

// dim_q F^- = prod (1 + q^{2n-1})^{dim K^1} / (1 - q^{2n-1})^{dim K^0}.
FormalSeries fock_graded_dim_series(const CharacterSpec& spec,
                                    std::int64_t order);

// The displayed spectral form carries the shift (1/2) i eta on the odd
// factor; the table rows suggest the full shift instead.  Both placements
// are evaluated and both residuals reported.
struct FockSpectral {
  ValueWithTail direct;
  ValueWithTail spectral_half_shift;
  ValueWithTail spectral_full_shift;
  double residual_half = 0.0;
  double residual_full = 0.0;
};

FockSpectral fock_graded_dim_numeric(const CharacterSpec& spec,
                                     const ModularParameter& tau,
                                     const TruncationPolicy& policy,
                                     int eta_sign = +1);

// Point case: prod (1 - q^{2n-1})^{-|Gamma_*|}.
FormalSeries point_case_series(long conjugacy_class_count, std::int64_t order);

}  // namespace spectra
