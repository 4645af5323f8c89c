#pragma once

#include <complex>

#include "spectra/exec.hpp"

namespace spectra::kernels {

// Lattice product kernel.  For each diagonal d in [0, kmax]:
//   partial[d] = prod_{k1+k2=d} (1 - e^{i beta (k1-k2)} e^{-(d+s) alpha})
//   logabs[d]  = sum_{k1+k2=d} log|factor|
// Diagonals are independent; the parallel variant distributes them across
// OpenMP threads and writes by index, so both variants are bit-identical.
void zgamma_diagonals(std::complex<double> s, double alpha, double beta,
                      int kmax, Exec exec, std::complex<double>* partial,
                      double* logabs);

// Same product evaluated at the predicted zero indexed by (d0, delta0, n):
// the 2 pi i n / alpha component is dropped (the product is exactly periodic
// with that period) and the remaining exponents are formed from integer
// differences, so the vanishing factor comes out as exact zero instead of
// being lost to cancellation.
void zgamma_diagonals_at_zero(long d0, long delta0, double alpha, double beta,
                              int kmax, Exec exec,
                              std::complex<double>* partial, double* logabs);

// Exponential-series kernel:
//   term[n-1] = e^{-n alpha (s-1)} / (n [sinh^2(alpha n/2) + sin^2(beta n/2)])
void logseries_terms(std::complex<double> s, double alpha, double beta,
                     long nterms, Exec exec, std::complex<double>* term);

}  // namespace spectra::kernels
