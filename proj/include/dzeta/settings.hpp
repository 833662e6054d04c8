#pragma once

#include <complex>
#include <string_view>

namespace dzeta {

using Complex = std::complex<double>;

/// Free parameters of the evaluators: truncation cutoffs, contour extent,
/// tolerances and exclusion radii.
struct EvalSettings {
  /// Minimum number of directly summed m-terms in the m-series of the
  /// continuation routes; the tails beyond are handled analytically.
  int m_cutoff = 64;
  /// Default Euler-Maclaurin split N (also the Mellin-Barnes cutoff x).
  int n_cutoff = 50;
  /// Minimum number of directly summed k-terms in the k-series.
  int k_cutoff = 64;
  /// How far the Re z = 1/2 contour extends beyond the band between
  /// Im z = 0 and Im z = -t where the gamma factors do not decay.
  double contour_half_height = 40.0;
  double tol = 1e-10;
  /// Exclusion radius around s = 1 and the locus s0 + s = 2, 1, 0, -1, ...
  double singular_radius = 1e-6;
  /// Disk |s0 - 1| < s0_one_radius in which the Mellin-Barnes route uses the
  /// digamma form of R1 + R2.
  double s0_one_radius = 1e-4;
  /// Worker threads for panel-parallel work; 0 means hardware concurrency.
  unsigned threads = 0;

  /// Throws DomainError when an invariant is violated.
  void validate() const;
};

enum class Route { Direct, EulerMaclaurin, MellinBarnes };

std::string_view to_string(Route r);

struct EvalResult {
  Complex value;
  double est_error = 0.0;
  Route route = Route::Direct;
  long terms_used = 0;
};

struct ArgumentPair {
  Complex s0;
  Complex s;
};

}  // namespace dzeta
