#pragma once

#include "dzeta/settings.hpp"

namespace dzeta {

struct Gamma2Result {
  Complex via_limit;
  Complex via_pole;
  Complex via_closed;
  double spread = 0.0;  // max pairwise |difference|
};

/// lim_N sum_m m^{-s0} (sum_{n<=N} (m+n)^{-1} - log(m+N)), from the values
/// at N = N_max/16, ..., N_max extrapolated polynomially in 1/N. Requires
/// Re s0 > 1 and N_max >= 1000. Throws ConvergenceError when dropping the
/// coarsest level moves the result by more than settings.tol.
Complex gamma2_limit(Complex s0, long N_max, const EvalSettings& settings);

/// lim_{s->1} (zeta_2(s0, s) - zeta(s0)/(s-1)) from s = 1 + delta with
/// delta = delta_max * 10^{-i/2}, i = 0..4. Requires Re s0 > 1.
Complex gamma2_pole(Complex s0, const EvalSettings& settings, double delta_max = 0.1);

/// zeta(s0) gamma - zeta_2(1, s0) - zeta(s0 + 1). Requires Re s0 > 1.
Complex gamma2_closed(Complex s0, const EvalSettings& settings);

/// All three routes and their spread.
Gamma2Result gamma2_all(Complex s0, long N_max, const EvalSettings& settings);

}  // namespace dzeta
