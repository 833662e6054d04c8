#pragma once

#include <span>

#include "dzeta/settings.hpp"

namespace dzeta {

/// Error order x^exponent (log x)^log_power.
struct PredictedOrder {
  double exponent = 0.0;
  int log_power = 0;
};

struct ApproxReport {
  Complex approximant;
  Complex reference;
  double abs_error = 0.0;  // |approximant - reference|
  PredictedOrder predicted_order;
  double x_or_t = 0.0;
};

/// Error order of the truncated approximants, by the sign of Re s0 - 1:
/// x^{-sigma} (Re s0 > 1), x^{-sigma} log x (Re s0 = 1),
/// x^{1 - sigma - sigma0} (Re s0 < 1).
PredictedOrder approximation_order(Complex s0, Complex s);

/// sum_m sum_{n <= x} m^{-s0} (m+n)^{-s} - (1-s)^{-1} sum_m m^{-s0} (m+x)^{1-s}
/// against zeta2_eval. Requires Re s > max(0, 2 - Re s0), C > 1,
/// |Im s| <= 2 pi x / C and s != 1.
ApproxReport approx_split_sum(const ArgumentPair& p, double x, double C,
                              const EvalSettings& settings);

/// sum_m sum_{n <= t} m^{-s0} (m+n)^{-s} with t = Im s, against zeta2_eval.
/// Requires 0 < Re s0 < 3/2, Re s > 1/2, Re(s0 + s) > 1, t >= 2, off the
/// singular locus.
ApproxReport approx_truncated_sum(const ArgumentPair& p, const EvalSettings& settings);

/// Least-squares slope of log(abs_error / (log x)^log_power) against log x.
/// Needs at least 5 reports, strictly increasing x_or_t, spanning 1.5 decades.
double error_exponent_fit(std::span<const ApproxReport> reports);

}  // namespace dzeta
