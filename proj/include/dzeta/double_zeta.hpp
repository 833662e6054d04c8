#pragma once

#include "dzeta/settings.hpp"

namespace dzeta {

/// True when Re s > 1 and Re(s0 + s) > 2, where the double series converges
/// absolutely.
bool absolutely_convergent(const ArgumentPair& p);

/// zeta_2(s0, s) = sum_{k >= 2} (sum_{m < k} m^{-s0}) k^{-s} in the region
/// of absolute convergence. The first K terms (K >= settings.k_cutoff) are
/// summed with an incrementally updated prefix; the remaining tail uses the
/// large-k expansion of the prefix and Hurwitz sums. est_error is the
/// certified truncation bound (floating-point rounding excluded).
///
/// Throws DomainError outside the region and ConvergenceError when the
/// bound exceeds settings.tol.
EvalResult zeta2_direct(const ArgumentPair& p, const EvalSettings& settings);

/// Mean-square coefficient sum_{k >= 2} |sum_{m < k} m^{-s0}|^2 k^{-w}.
/// Requires (Re s0 >= 1 and Re w > 1) or (Re s0 < 1 and 2 Re s0 + Re w > 3).
/// For real w the result is real and positive.
EvalResult zeta2_sq(Complex s0, Complex w, const EvalSettings& settings);

/// |zeta(s0) zeta(s) - zeta_2(s0, s) - zeta_2(s, s0) - zeta(s0 + s)|.
/// Both orderings must lie in the region of absolute convergence.
double stuffle_residual(Complex s0, Complex s, const EvalSettings& settings);

}  // namespace dzeta
