#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dzeta/settings.hpp"

namespace dzeta {

/// Which main term the cumulative integral is compared with.
enum class MainTerm {
  Linear,    // coefficient * (t - 2)
  TLogT,     // coefficient * t log t
};

struct MeanSquareRun {
  std::string evaluator;  // "zeta2" or "riemann"
  Complex s0;
  double sigma = 0.0;
  double T = 0.0;
  MainTerm main_term = MainTerm::Linear;
  std::vector<double> t_grid;               // checkpoints, increasing
  std::vector<Complex> values;              // integrand's function at the checkpoints
  std::vector<double> cumulative_integral;  // int_2^t |f|^2
  std::vector<double> cumulative_error;     // quadrature error estimate up to t
  double coefficient_target = 0.0;
  double fitted_coefficient = 0.0;
  std::vector<double> residuals;            // I(t) - target * main(t)
  /// Evaluations by route (Direct, EulerMaclaurin, MellinBarnes).
  std::array<long, 3> route_counts{};
  long evaluations = 0;
  double panel_width = 0.0;
  EvalSettings settings;
};

/// Number of checkpoints: t_k = 2 + (T - 2) k / 20, k = 1..20.
inline constexpr int kCheckpoints = 20;

/// Deterministic panel integration of |f(t)|^2 over [2, T] with panels no
/// wider than pi / log(T + 3) (or max_width if smaller), evaluated on
/// settings.threads workers and reduced in panel order.
struct SquareIntegral {
  std::vector<double> cumulative;  // at the checkpoints
  std::vector<double> error;
  long evaluations = 0;
  double panel_width = 0.0;
};
SquareIntegral integrate_square(const std::function<double(double)>& abs2, double T,
                                const EvalSettings& settings, double max_width = 0.0);

/// Integrates |zeta_2(s0, sigma + it)|^2 over t in [2, T]. Throws
/// SingularPathError when the segment meets the singular locus (including
/// Re(s0 + s) = 2 anywhere) and DomainError when it leaves every
/// continuation region. Requires T >= 10.
MeanSquareRun integrate_sq(Complex s0, double sigma, double T, const EvalSettings& settings,
                           double max_width = 0.0);

/// Least-squares slope of I(t) against the main-term shape (t or t log t)
/// over the upper half of the checkpoints. Needs at least 10 checkpoints.
double coefficient_fit(const MeanSquareRun& run);

/// Exponent and log power of the error term predicted for the mean square
/// for (Re s0, sigma): the larger of the sigma-dependent term and T^{1/2}.
struct ResidualOrder {
  double exponent = 0.0;
  int log_power = 0;
};
ResidualOrder predicted_residual_order(Complex s0, double sigma);

/// Growth exponent of the residuals: slope of log of the running maximum of
/// |residual| / (log t)^log_power against log t over the checkpoints.
/// Needs at least 10 checkpoints spanning a decade.
double residual_exponent(const MeanSquareRun& run);

/// Slope of log(envelope(|r|) / (log t)^log_power) against log t for
/// arbitrary samples; the envelope is the running maximum.
double envelope_exponent(const std::vector<double>& t, const std::vector<double>& r,
                         int log_power);

/// The same pipeline on |zeta(sigma + it)|^2, target zeta(2 sigma) (t - 2)
/// for sigma > 1/2 and t log t at sigma = 1/2. Requires sigma >= 1/2, T >= 50.
MeanSquareRun riemann_sanity(double sigma, double T, const EvalSettings& settings);

struct SupWindow {
  double t_lo = 0.0, t_hi = 0.0;
  double t_max = 0.0;     // where the maximum was found
  double max_abs = 0.0;
};

struct SupScan {
  std::vector<SupWindow> windows;
  /// Slope of log max against log t_max; NaN with fewer than two windows.
  double fitted_exponent = 0.0;
};

/// Window maxima of |zeta_2(s0, sigma + it)| over [2, T], sampled every
/// `step` in windows of width `window`.
SupScan sup_scan(Complex s0, double sigma, double T, const EvalSettings& settings,
                 double window = 10.0, double step = 0.1);

/// CSV with header t,re,im,abs2,cumulative; 17 significant digits.
void write_csv(const MeanSquareRun& run, std::ostream& out);

/// Full run metadata, schema "dzeta/1".
nlohmann::ordered_json to_json(const MeanSquareRun& run);
nlohmann::ordered_json to_json(const EvalSettings& settings);

/// Resolves settings.threads (0 means hardware concurrency, at least 1).
unsigned worker_count(const EvalSettings& settings);

}  // namespace dzeta
