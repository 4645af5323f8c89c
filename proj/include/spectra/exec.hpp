#pragma once

#include <cstddef>

namespace spectra {

// Execution mode for the data-parallel kernels.  Parallel runs use OpenMP;
// results are written by index and merged in input order, so serial and
// parallel runs produce bit-identical output.
enum class Exec { serial, parallel };

template <class F>
void for_each_index(std::size_t n, Exec mode, F&& body) {
  if (mode == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      body(static_cast<std::size_t>(i));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      body(i);
    }
  }
}

}  // namespace spectra
