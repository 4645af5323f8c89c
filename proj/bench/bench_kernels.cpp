// Benchmark: serial reference kernels versus the OpenMP variants.
//
// The workloads are sized so the lattice truncation actually bites: a small
// Im tau makes |q| approach 1, which pushes the adaptive cutoff into the
// hundreds of diagonals, and the grid sweeps mirror what the verification
// suites do at scale.

#include <chrono>
#include <complex>
#include <cstdio>
#include <vector>

#include "spectra/exec.hpp"
#include "spectra/kernels.hpp"
#include "spectra/modular.hpp"
#include "spectra/policy.hpp"
#include "spectra/spectral.hpp"

using spectra::Exec;
using spectra::ModularParameter;
using spectra::TruncationPolicy;

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(
             clock::now().time_since_epoch())
      .count();
}

template <class F>
double time_ms(F&& body, int repeats) {
  // one warmup, then best-of-repeats
  body();
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const double t0 = now_ms();
    body();
    best = std::min(best, now_ms() - t0);
  }
  return best;
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s serial %9.2f ms   openmp %9.2f ms   speedup %.2fx\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms);
}

std::complex<double> checksum{0.0, 0.0};

void bench_diagonals() {
  const ModularParameter tau(0.02, 0.02);  // alpha ~ 0.126, slow decay
  const int kmax = 1200;
  std::vector<std::complex<double>> partial(kmax + 1);
  std::vector<double> logabs(kmax + 1);
  const auto run = [&](Exec exec) {
    spectra::kernels::zgamma_diagonals({2.0, 0.5}, tau.alpha(), tau.beta(),
                                       kmax, exec, partial.data(),
                                       logabs.data());
    checksum += partial[kmax / 2];
  };
  const double serial = time_ms([&] { run(Exec::serial); }, 3);
  const double parallel = time_ms([&] { run(Exec::parallel); }, 3);
  report("zgamma diagonals K=1200", serial, parallel);
}

void bench_logseries() {
  const ModularParameter tau(0.02, 0.02);
  const long terms = 400000;
  std::vector<std::complex<double>> term(terms);
  const auto run = [&](Exec exec) {
    spectra::kernels::logseries_terms({1.5, 0.25}, tau.alpha(), tau.beta(),
                                      terms, exec, term.data());
    checksum += term[terms / 2];
  };
  const double serial = time_ms([&] { run(Exec::serial); }, 3);
  const double parallel = time_ms([&] { run(Exec::parallel); }, 3);
  report("log-series terms N=4e5", serial, parallel);
}

void bench_grid_sweep() {
  const ModularParameter tau(0.05, 0.12);
  TruncationPolicy policy;
  policy.tolerance = 1e-10;
  std::vector<std::complex<double>> grid;
  for (int i = 0; i < 48; ++i) {
    for (int j = 0; j < 48; ++j) {
      grid.emplace_back(0.5 + 0.1 * i, -2.0 + 0.085 * j);
    }
  }
  std::vector<std::complex<double>> values(grid.size());
  const auto run = [&](Exec exec) {
    spectra::for_each_index(grid.size(), exec, [&](std::size_t i) {
      values[i] =
          spectra::z_gamma_product({grid[i]}, tau, policy, Exec::serial).value;
    });
    checksum += values[grid.size() / 2];
  };
  const double serial = time_ms([&] { run(Exec::serial); }, 3);
  const double parallel = time_ms([&] { run(Exec::parallel); }, 3);
  report("Z_Gamma sweep 48x48", serial, parallel);
}

}  // namespace

int main() {
  std::printf("kernel benchmark (serial reference vs OpenMP)\n");
  bench_diagonals();
  bench_logseries();
  bench_grid_sweep();
  // keep the optimizer honest
  std::printf("checksum %.3e %.3e\n", checksum.real(), checksum.imag());
  return 0;
}
