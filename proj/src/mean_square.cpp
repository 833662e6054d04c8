#include "dzeta/mean_square.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include "dzeta/continuation.hpp"
#include "dzeta/double_zeta.hpp"
#include "dzeta/errors.hpp"
#include "dzeta/fit.hpp"
#include "dzeta/parallel.hpp"
#include "dzeta/quadrature.hpp"
#include "dzeta/special_functions.hpp"

namespace dzeta {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kT0 = 2.0;

double main_shape(MainTerm m, double t) {
  return m == MainTerm::Linear ? t - kT0 : t * std::log(t);
}

std::vector<double> checkpoints(double T) {
  std::vector<double> t(kCheckpoints);
  for (int k = 1; k <= kCheckpoints; ++k) t[k - 1] = kT0 + (T - kT0) * k / kCheckpoints;
  t.back() = T;
  return t;
}

void finish_run(MeanSquareRun& run) {
  run.residuals.resize(run.t_grid.size());
  for (std::size_t i = 0; i < run.t_grid.size(); ++i) {
    run.residuals[i] = run.cumulative_integral[i] -
                       run.coefficient_target * main_shape(run.main_term, run.t_grid[i]);
  }
  run.fitted_coefficient = coefficient_fit(run);
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

unsigned worker_count(const EvalSettings& settings) {
  if (settings.threads > 0) return settings.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

SquareIntegral integrate_square(const std::function<double(double)>& abs2, double T,
                                const EvalSettings& settings, double max_width) {
  const double segment = (T - kT0) / kCheckpoints;
  double width = kPi / std::log(T + 3.0);
  if (max_width > 0.0) width = std::min(width, max_width);
  const long per_segment = std::max<long>(1, long(std::ceil(segment / width)));
  const double h = segment / double(per_segment);
  const long panels = per_segment * kCheckpoints;

  std::vector<quad::QuadResult<double>> results(panels);
  parallel_for(panels, worker_count(settings), [&](long i) {
    const long seg = i / per_segment;
    const long j = i % per_segment;
    const double seg_lo = kT0 + (T - kT0) * double(seg) / kCheckpoints;
    const double a = seg_lo + h * double(j);
    const double b = (j + 1 == per_segment) ? kT0 + (T - kT0) * double(seg + 1) / kCheckpoints
                                            : seg_lo + h * double(j + 1);
    results[i] = quad::integrate_adaptive<double>(abs2, a, b, 1e-9 * h, 20);
  });

  SquareIntegral out;
  out.panel_width = h;
  double sum = 0.0, comp = 0.0, err = 0.0;
  for (long i = 0; i < panels; ++i) {
    const double y = results[i].value - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    err += results[i].error;
    out.evaluations += results[i].evaluations;
    if ((i + 1) % per_segment == 0) {
      out.cumulative.push_back(sum);
      out.error.push_back(err);
    }
  }
  return out;
}

MeanSquareRun integrate_sq(Complex s0, double sigma, double T, const EvalSettings& settings,
                           double max_width) {
  settings.validate();
  if (!(T >= 10.0)) throw DomainError("integrate_sq: requires T >= 10");
  const double r = settings.singular_radius;
  const double re_sum = s0.real() + sigma;
  if (std::abs(re_sum - 2.0) < r) {
    throw SingularPathError("integrate_sq: segment lies in Re(s0+s)=2 and meets the singular locus s0+s=2");
  }
  const double n = std::round(re_sum);
  if (n <= 1.0 && std::abs(re_sum - n) < r && -s0.imag() >= kT0 - r && -s0.imag() <= T + r) {
    std::ostringstream msg;
    msg << "integrate_sq: segment meets the singular locus s0+s=" << long(n);
    throw SingularPathError(msg.str());
  }
  if (classify_region({s0, Complex(sigma, kT0)}, settings) == RegionClass::OutOfDomain) {
    throw DomainError("integrate_sq: segment outside every continuation region");
  }

  std::array<std::atomic<long>, 3> counts{};
  const auto abs2 = [&](double t) {
    const EvalResult e = zeta2_eval({s0, Complex(sigma, t)}, settings);
    counts[static_cast<int>(e.route)].fetch_add(1, std::memory_order_relaxed);
    return std::norm(e.value);
  };
  const SquareIntegral q = integrate_square(abs2, T, settings, max_width);

  MeanSquareRun run;
  run.evaluator = "zeta2";
  run.s0 = s0;
  run.sigma = sigma;
  run.T = T;
  run.settings = settings;
  run.t_grid = checkpoints(T);
  run.cumulative_integral = q.cumulative;
  run.cumulative_error = q.error;
  run.evaluations = q.evaluations;
  run.panel_width = q.panel_width;
  run.values.resize(run.t_grid.size());
  parallel_for(long(run.t_grid.size()), worker_count(settings), [&](long i) {
    run.values[i] = zeta2_eval({s0, Complex(sigma, run.t_grid[i])}, settings).value;
  });
  for (int i = 0; i < 3; ++i) run.route_counts[i] = counts[i].load();
  try {
    run.coefficient_target = zeta2_sq(s0, 2.0 * sigma, settings).value.real();
  } catch (const DomainError&) {
    run.coefficient_target = std::numeric_limits<double>::quiet_NaN();
  }
  finish_run(run);
  return run;
}

double coefficient_fit(const MeanSquareRun& run) {
  const std::size_t n = run.t_grid.size();
  if (n < 10 || run.cumulative_integral.size() != n) {
    throw InsufficientDataError("coefficient_fit: need at least 10 checkpoints");
  }
  std::vector<double> x, y;
  for (std::size_t i = n / 2; i < n; ++i) {
    x.push_back(main_shape(run.main_term, run.t_grid[i]));
    y.push_back(run.cumulative_integral[i]);
  }
  return fit::least_squares(x, y).slope;
}

ResidualOrder predicted_residual_order(Complex s0, double sigma) {
  const double sig0 = s0.real();
  constexpr double eps = 1e-12;
  const bool sig_one = std::abs(sigma - 1.0) < eps;
  const bool sig0_one = std::abs(sig0 - 1.0) < eps;
  ResidualOrder cand{0.0, 0};
  if (sig0 > 1.0 && !sig0_one) {
    if (sigma > 1.0 && !sig_one) return {0.0, 0};
    cand = {2.0 - 2.0 * sigma, 1};
  } else if (sig0_one) {
    cand = sig_one ? ResidualOrder{0.0, 0} : ResidualOrder{2.0 - 2.0 * sigma, 3};
  } else {
    cand = (sigma >= 1.0 - eps) ? ResidualOrder{2.0 - 2.0 * sig0, 2}
                                : ResidualOrder{4.0 - 2.0 * sig0 - 2.0 * sigma, 1};
  }
  if (cand.exponent >= 0.5) return cand;
  return {0.5, 0};
}

double envelope_exponent(const std::vector<double>& t, const std::vector<double>& r,
                         int log_power) {
  if (t.size() != r.size() || t.size() < 2) {
    throw InsufficientDataError("envelope_exponent: need matching samples");
  }
  std::vector<double> lx, ly;
  double env = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double scaled = std::abs(r[i]) / std::pow(std::log(t[i]), log_power);
    env = std::max(env, scaled);
    if (env > 0.0) {
      lx.push_back(std::log(t[i]));
      ly.push_back(std::log(env));
    }
  }
  if (lx.size() < 2) throw InsufficientDataError("envelope_exponent: residuals vanish");
  return fit::least_squares(lx, ly).slope;
}

double residual_exponent(const MeanSquareRun& run) {
  const std::size_t n = run.t_grid.size();
  if (n < 10 || run.residuals.size() != n) {
    throw InsufficientDataError("residual_exponent: need at least 10 checkpoints");
  }
  if (std::log10(run.t_grid.back() / run.t_grid.front()) < 1.0) {
    throw InsufficientDataError("residual_exponent: checkpoints must span a decade");
  }
  const int lp =
      run.evaluator == "zeta2" ? predicted_residual_order(run.s0, run.sigma).log_power : 0;
  return envelope_exponent(run.t_grid, run.residuals, lp);
}

MeanSquareRun riemann_sanity(double sigma, double T, const EvalSettings& settings) {
  settings.validate();
  if (!(sigma >= 0.5)) throw DomainError("riemann_sanity: requires sigma >= 1/2");
  if (!(T >= 50.0)) throw DomainError("riemann_sanity: requires T >= 50");
  const auto abs2 = [&](double t) { return std::norm(riemann_zeta({sigma, t}, settings)); };
  const SquareIntegral q = integrate_square(abs2, T, settings);
  MeanSquareRun run;
  run.evaluator = "riemann";
  run.s0 = 0.0;
  run.sigma = sigma;
  run.T = T;
  run.settings = settings;
  run.t_grid = checkpoints(T);
  run.cumulative_integral = q.cumulative;
  run.cumulative_error = q.error;
  run.evaluations = q.evaluations;
  run.panel_width = q.panel_width;
  for (double t : run.t_grid) run.values.push_back(riemann_zeta({sigma, t}, settings));
  if (sigma == 0.5) {
    run.main_term = MainTerm::TLogT;
    run.coefficient_target = 1.0;
  } else {
    run.coefficient_target = riemann_zeta(2.0 * sigma, settings).real();
  }
  finish_run(run);
  return run;
}

SupScan sup_scan(Complex s0, double sigma, double T, const EvalSettings& settings,
                 double window, double step) {
  settings.validate();
  if (!(window > 0.0 && step > 0.0 && T > kT0)) {
    throw DomainError("sup_scan: requires window > 0, step > 0 and T > 2");
  }
  const double re_sum = s0.real() + sigma;
  if (std::abs(re_sum - 2.0) < settings.singular_radius) {
    throw SingularPathError("sup_scan: segment lies in Re(s0+s)=2 and meets the singular locus s0+s=2");
  }
  const long samples = long(std::floor((T - kT0) / step + 1e-9)) + 1;
  std::vector<double> t(samples), mag(samples);
  parallel_for(samples, worker_count(settings), [&](long i) {
    t[i] = std::min(T, kT0 + step * double(i));
    mag[i] = std::abs(zeta2_eval({s0, Complex(sigma, t[i])}, settings).value);
  });
  SupScan out;
  const long nwin = std::max<long>(1, long(std::ceil((T - kT0) / window - 1e-9)));
  for (long w = 0; w < nwin; ++w) {
    SupWindow win;
    win.t_lo = kT0 + window * double(w);
    win.t_hi = (w + 1 == nwin) ? T : kT0 + window * double(w + 1);
    bool any = false;
    for (long i = 0; i < samples; ++i) {
      const bool inside = t[i] >= win.t_lo && (t[i] < win.t_hi || (w + 1 == nwin && t[i] <= T));
      if (inside && (!any || mag[i] > win.max_abs)) {
        win.max_abs = mag[i];
        win.t_max = t[i];
        any = true;
      }
    }
    if (any) out.windows.push_back(win);
  }
  if (out.windows.size() >= 2) {
    std::vector<double> lx, ly;
    for (const auto& w : out.windows) {
      lx.push_back(std::log(w.t_max));
      ly.push_back(std::log(w.max_abs));
    }
    out.fitted_exponent = fit::least_squares(lx, ly).slope;
  } else {
    out.fitted_exponent = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

void write_csv(const MeanSquareRun& run, std::ostream& out) {
  out << "t,re,im,abs2,cumulative\n";
  for (std::size_t i = 0; i < run.t_grid.size(); ++i) {
    const Complex v = run.values[i];
    out << fmt17(run.t_grid[i]) << ',' << fmt17(v.real()) << ',' << fmt17(v.imag()) << ','
        << fmt17(std::norm(v)) << ',' << fmt17(run.cumulative_integral[i]) << '\n';
  }
}

nlohmann::ordered_json to_json(const EvalSettings& s) {
  nlohmann::ordered_json j;
  j["m_cutoff"] = s.m_cutoff;
  j["n_cutoff"] = s.n_cutoff;
  j["k_cutoff"] = s.k_cutoff;
  j["contour_half_height"] = s.contour_half_height;
  j["tol"] = s.tol;
  j["singular_radius"] = s.singular_radius;
  j["s0_one_radius"] = s.s0_one_radius;
  return j;
}

nlohmann::ordered_json to_json(const MeanSquareRun& run) {
  nlohmann::ordered_json j;
  j["schema"] = "dzeta/1";
  j["kind"] = "mean-square";
  j["evaluator"] = run.evaluator;
  j["s0"] = {{"re", run.s0.real()}, {"im", run.s0.imag()}};
  j["sigma"] = run.sigma;
  j["T"] = run.T;
  j["main_term"] = run.main_term == MainTerm::Linear ? "linear" : "t_log_t";
  j["settings"] = to_json(run.settings);
  j["panel_width"] = run.panel_width;
  j["evaluations"] = run.evaluations;
  j["route_counts"] = {{"Direct", run.route_counts[0]},
                       {"EulerMaclaurin", run.route_counts[1]},
                       {"MellinBarnes", run.route_counts[2]}};
  j["coefficient_target"] = run.coefficient_target;
  j["fitted_coefficient"] = run.fitted_coefficient;
  j["coefficient_ratio"] = run.fitted_coefficient / run.coefficient_target;
  if (run.evaluator == "zeta2") {
    const ResidualOrder ord = predicted_residual_order(run.s0, run.sigma);
    j["predicted_residual_exponent"] = ord.exponent;
    j["predicted_residual_log_power"] = ord.log_power;
  }
  try {
    j["residual_exponent"] = residual_exponent(run);
  } catch (const InsufficientDataError&) {
    j["residual_exponent"] = nullptr;
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < run.t_grid.size(); ++i) {
    rows.push_back({{"t", run.t_grid[i]},
                    {"re", run.values[i].real()},
                    {"im", run.values[i].imag()},
                    {"abs2", std::norm(run.values[i])},
                    {"cumulative", run.cumulative_integral[i]},
                    {"error", run.cumulative_error[i]},
                    {"residual", run.residuals[i]}});
  }
  j["checkpoints"] = rows;
  return j;
}

}  // namespace dzeta
