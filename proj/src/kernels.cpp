#include "spectra/kernels.hpp"

#include <cmath>

namespace spectra::kernels {

namespace {

// One diagonal of the lattice product: the dilation part e^{-(d+s) alpha}
// is shared by the whole diagonal, only the rotation phase varies.
void diagonal(std::complex<double> s, double alpha, double beta, long d,
              std::complex<double>& partial, double& logabs) {
  const std::complex<double> dilation =
      std::exp(-(static_cast<double>(d) + s) * alpha);
  std::complex<double> prod{1.0, 0.0};
  double log_acc = 0.0;
  for (long k1 = 0; k1 <= d; ++k1) {
    const double delta = static_cast<double>(2 * k1 - d);
    const std::complex<double> phase{std::cos(beta * delta),
                                     std::sin(beta * delta)};
    const std::complex<double> factor = 1.0 - phase * dilation;
    prod *= factor;
    log_acc += std::log(std::abs(factor));
  }
  partial = prod;
  logabs = log_acc;
}

void diagonal_at_zero(long d0, long delta0, double alpha, double beta, long d,
                      std::complex<double>& partial, double& logabs) {
  // e^{-(d+zeta) alpha + i beta delta} reduces to
  // e^{-(d-d0) alpha + i beta (delta-delta0)} with integer differences.
  const double mag = std::exp(-static_cast<double>(d - d0) * alpha);
  std::complex<double> prod{1.0, 0.0};
  double log_acc = 0.0;
  for (long k1 = 0; k1 <= d; ++k1) {
    // rel = 0 at (d0, delta0): cos(0) = 1 and exp(0) = 1 are exact, so the
    // predicted vanishing factor is exact zero.
    const double rel = static_cast<double>(2 * k1 - d - delta0);
    const std::complex<double> phase{std::cos(beta * rel),
                                     std::sin(beta * rel)};
    const std::complex<double> factor = 1.0 - phase * mag;
    prod *= factor;
    log_acc += std::log(std::abs(factor));
  }
  partial = prod;
  logabs = log_acc;
}

}  // namespace

void zgamma_diagonals(std::complex<double> s, double alpha, double beta,
                      int kmax, Exec exec, std::complex<double>* partial,
                      double* logabs) {
  for_each_index(static_cast<std::size_t>(kmax) + 1, exec, [&](std::size_t d) {
    diagonal(s, alpha, beta, static_cast<long>(d), partial[d], logabs[d]);
  });
}

void zgamma_diagonals_at_zero(long d0, long delta0, double alpha, double beta,
                              int kmax, Exec exec,
                              std::complex<double>* partial, double* logabs) {
  for_each_index(static_cast<std::size_t>(kmax) + 1, exec, [&](std::size_t d) {
    diagonal_at_zero(d0, delta0, alpha, beta, static_cast<long>(d), partial[d],
                     logabs[d]);
  });
}

void logseries_terms(std::complex<double> s, double alpha, double beta,
                     long nterms, Exec exec, std::complex<double>* term) {
  for_each_index(static_cast<std::size_t>(nterms), exec, [&](std::size_t i) {
    const double n = static_cast<double>(i + 1);
    const double sh = std::sinh(0.5 * alpha * n);
    const double sn = std::sin(0.5 * beta * n);
    const std::complex<double> numer = std::exp(-n * alpha * (s - 1.0));
    term[i] = numer / (n * (sh * sh + sn * sn));
  });
}

}  // namespace spectra::kernels
