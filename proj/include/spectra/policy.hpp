#pragma once

namespace spectra {

// Truncation control for infinite products and series.  Every numeric answer
// carries a tail bound derived from the cutoff actually used, so callers can
// see the error budget instead of trusting a bare double.
struct TruncationPolicy {
  enum class Mode { adaptive, fixed };

  Mode mode = Mode::adaptive;

  // Lattice cutoff K: product factors with k1 + k2 <= K.  In adaptive mode
  // this is the starting value; the cutoff grows until the geometric tail
  // bound drops below `tolerance` (or `max_lattice_cutoff` is hit).
  int lattice_cutoff = 8;
  int max_lattice_cutoff = 4096;

  // Series term cap for the log-representation and q-product evaluations.
  long max_series_terms = 200000;

  double tolerance = default_tolerance();

  // 1e-12 unless overridden by the SPECTRA_QKIT_EPS environment variable.
  static double default_tolerance();

  static TruncationPolicy adaptive(double tol) {
    TruncationPolicy p;
    p.tolerance = tol;
    return p;
  }

  static TruncationPolicy fixed_cutoff(int k) {
    TruncationPolicy p;
    p.mode = Mode::fixed;
    p.lattice_cutoff = k;
    return p;
  }
};

}  // namespace spectra
