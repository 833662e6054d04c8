#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "dzeta/approximation.hpp"
#include "dzeta/continuation.hpp"
#include "dzeta/double_zeta.hpp"
#include "dzeta/euler_constant2.hpp"
#include "dzeta/mean_square.hpp"
#include "dzeta/run_config.hpp"

namespace dzeta {
namespace {

using Json = nlohmann::ordered_json;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string complex_text(Complex z) {
  const double im = z.imag();
  const bool neg = std::signbit(im) && im != 0.0;
  return g17(z.real()) + (neg ? " - " : " + ") + g17(std::abs(im)) + "i";
}

Json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Json header(const RunConfig& c) {
  Json j;
  j["schema"] = "dzeta/1";
  j["kind"] = to_string(c.command);
  return j;
}

struct Summary {
  std::string route = "-";
  double est_error = 0.0;
};

Summary run_eval(const RunConfig& c, std::ostream& out) {
  const EvalResult r = zeta2_eval({c.s0, c.s}, c.settings);
  switch (c.format) {
    case Format::Text:
      out << complex_text(r.value) << " (route=" << to_string(r.route) << ")\n";
      break;
    case Format::Csv:
      out << "re,im,est_error,route,terms_used\n"
          << g17(r.value.real()) << ',' << g17(r.value.imag()) << ',' << g17(r.est_error)
          << ',' << to_string(r.route) << ',' << r.terms_used << '\n';
      break;
    case Format::Json: {
      Json j = header(c);
      j["s0"] = complex_json(c.s0);
      j["s"] = complex_json(c.s);
      j["value"] = complex_json(r.value);
      j["est_error"] = r.est_error;
      j["route"] = to_string(r.route);
      j["terms_used"] = r.terms_used;
      j["settings"] = to_json(c.settings);
      out << j.dump(2) << '\n';
      break;
    }
  }
  return {std::string(to_string(r.route)), r.est_error};
}

Summary run_zeta2sq(const RunConfig& c, std::ostream& out) {
  const EvalResult r = zeta2_sq(c.s0, c.w, c.settings);
  switch (c.format) {
    case Format::Text: out << complex_text(r.value) << '\n'; break;
    case Format::Csv:
      out << "re,im,est_error,terms_used\n"
          << g17(r.value.real()) << ',' << g17(r.value.imag()) << ',' << g17(r.est_error)
          << ',' << r.terms_used << '\n';
      break;
    case Format::Json: {
      Json j = header(c);
      j["s0"] = complex_json(c.s0);
      j["w"] = complex_json(c.w);
      j["value"] = complex_json(r.value);
      j["est_error"] = r.est_error;
      j["terms_used"] = r.terms_used;
      j["settings"] = to_json(c.settings);
      out << j.dump(2) << '\n';
      break;
    }
  }
  return {std::string(to_string(r.route)), r.est_error};
}

Summary run_gamma2(const RunConfig& c, std::ostream& out) {
  const Gamma2Result g = gamma2_all(c.s0, c.n_max, c.settings);
  switch (c.format) {
    case Format::Text:
      out << "limit  " << complex_text(g.via_limit) << '\n'
          << "pole   " << complex_text(g.via_pole) << '\n'
          << "closed " << complex_text(g.via_closed) << '\n'
          << "spread " << g17(g.spread) << '\n';
      break;
    case Format::Csv:
      out << "route,re,im\n"
          << "limit," << g17(g.via_limit.real()) << ',' << g17(g.via_limit.imag()) << '\n'
          << "pole," << g17(g.via_pole.real()) << ',' << g17(g.via_pole.imag()) << '\n'
          << "closed," << g17(g.via_closed.real()) << ',' << g17(g.via_closed.imag()) << '\n';
      break;
    case Format::Json: {
      Json j = header(c);
      j["s0"] = complex_json(c.s0);
      j["n_max"] = c.n_max;
      j["limit_extrapolation"] = "polynomial in 1/N over N_max/16 .. N_max";
      j["via_limit"] = complex_json(g.via_limit);
      j["via_pole"] = complex_json(g.via_pole);
      j["via_closed"] = complex_json(g.via_closed);
      j["spread"] = g.spread;
      j["settings"] = to_json(c.settings);
      out << j.dump(2) << '\n';
      break;
    }
  }
  return {"limit/pole/closed", g.spread};
}

Summary run_mean_square(const RunConfig& c, std::ostream& out) {
  const MeanSquareRun run = c.evaluator == "riemann"
                                ? riemann_sanity(c.sigma, c.T, c.settings)
                                : integrate_sq(c.s0, c.sigma, c.T, c.settings);
  switch (c.format) {
    case Format::Csv: write_csv(run, out); break;
    case Format::Json: out << to_json(run).dump(2) << '\n'; break;
    case Format::Text: {
      out << "t cumulative residual\n";
      for (std::size_t i = 0; i < run.t_grid.size(); ++i) {
        out << g17(run.t_grid[i]) << ' ' << g17(run.cumulative_integral[i]) << ' '
            << g17(run.residuals[i]) << '\n';
      }
      out << "target " << g17(run.coefficient_target) << '\n'
          << "fitted " << g17(run.fitted_coefficient) << '\n'
          << "ratio " << g17(run.fitted_coefficient / run.coefficient_target) << '\n'
          << "residual_exponent " << g17(residual_exponent(run)) << '\n';
      break;
    }
  }
  std::string route = run.evaluator;
  if (run.evaluator == "zeta2") {
    const char* names[] = {"Direct", "EulerMaclaurin", "MellinBarnes"};
    route.clear();
    for (int i = 0; i < 3; ++i) {
      if (run.route_counts[i] > 0) route += (route.empty() ? "" : "+") + std::string(names[i]);
    }
  }
  return {route, run.cumulative_error.back()};
}

Summary run_approx(const RunConfig& c, std::ostream& out) {
  if (c.grid_points < 2 || !(c.grid_max > c.grid_min) || !(c.grid_min > 0.0)) {
    throw ConfigError("approx-check needs grid_points >= 2 and 0 < grid_min < grid_max");
  }
  std::vector<ApproxReport> reports;
  for (int i = 0; i < c.grid_points; ++i) {
    const double v =
        c.grid_min * std::pow(c.grid_max / c.grid_min, double(i) / (c.grid_points - 1));
    const double g = std::round(v);
    if (c.mode == "split") {
      reports.push_back(approx_split_sum({c.s0, c.s}, g, c.C, c.settings));
    } else {
      reports.push_back(approx_truncated_sum({c.s0, Complex(c.sigma, g)}, c.settings));
    }
  }
  const double slope = error_exponent_fit(reports);
  const PredictedOrder ord = reports.front().predicted_order;
  switch (c.format) {
    case Format::Text:
      out << "x_or_t abs_error\n";
      for (const auto& r : reports) out << g17(r.x_or_t) << ' ' << g17(r.abs_error) << '\n';
      out << "slope " << g17(slope) << '\n'
          << "predicted " << g17(ord.exponent) << " log_power " << ord.log_power << '\n';
      break;
    case Format::Csv:
      out << "x_or_t,approx_re,approx_im,ref_re,ref_im,abs_error\n";
      for (const auto& r : reports) {
        out << g17(r.x_or_t) << ',' << g17(r.approximant.real()) << ','
            << g17(r.approximant.imag()) << ',' << g17(r.reference.real()) << ','
            << g17(r.reference.imag()) << ',' << g17(r.abs_error) << '\n';
      }
      break;
    case Format::Json: {
      Json j = header(c);
      j["mode"] = c.mode;
      j["s0"] = complex_json(c.s0);
      if (c.mode == "split") {
        j["s"] = complex_json(c.s);
        j["C"] = c.C;
      } else {
        j["sigma"] = c.sigma;
      }
      Json rows = Json::array();
      for (const auto& r : reports) {
        rows.push_back({{"x_or_t", r.x_or_t},
                        {"approximant", complex_json(r.approximant)},
                        {"reference", complex_json(r.reference)},
                        {"abs_error", r.abs_error}});
      }
      j["reports"] = rows;
      j["fitted_slope"] = slope;
      j["predicted_exponent"] = ord.exponent;
      j["predicted_log_power"] = ord.log_power;
      j["settings"] = to_json(c.settings);
      out << j.dump(2) << '\n';
      break;
    }
  }
  return {c.mode, 0.0};
}

Summary run_mb_verify(const RunConfig& c, std::ostream& out) {
  const ArgumentPair p{c.s0, c.s};
  std::vector<double> xs = {c.x, 2.0 * c.x, 4.0 * c.x};
  std::vector<EvalResult> mb;
  for (double x : xs) mb.push_back(zeta2_mb(p, x, c.settings));
  double spread = 0.0;
  for (std::size_t i = 1; i < mb.size(); ++i) {
    spread = std::max(spread, std::abs(mb[i].value - mb[0].value));
  }
  const RegionClass rc = classify_region(p, c.settings);
  const bool have_em = rc == RegionClass::AbsolutelyConvergent || rc == RegionClass::EMStrip;
  EvalResult em{};
  if (have_em) em = zeta2_em(p, long(std::floor(c.x)), c.settings);
  double est = 0.0;
  for (const auto& r : mb) est = std::max(est, r.est_error);
  switch (c.format) {
    case Format::Text:
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out << "mb x=" << g17(xs[i]) << ' ' << complex_text(mb[i].value) << '\n';
      }
      out << "x_spread " << g17(spread) << '\n';
      if (have_em) {
        out << "em N=" << long(std::floor(c.x)) << ' ' << complex_text(em.value) << '\n'
            << "em_mb_difference " << g17(std::abs(em.value - mb[0].value)) << '\n';
      }
      break;
    case Format::Csv:
      out << "route,x,re,im,est_error\n";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out << "MellinBarnes," << g17(xs[i]) << ',' << g17(mb[i].value.real()) << ','
            << g17(mb[i].value.imag()) << ',' << g17(mb[i].est_error) << '\n';
      }
      if (have_em) {
        out << "EulerMaclaurin," << g17(std::floor(c.x)) << ',' << g17(em.value.real()) << ','
            << g17(em.value.imag()) << ',' << g17(em.est_error) << '\n';
      }
      break;
    case Format::Json: {
      Json j = header(c);
      j["s0"] = complex_json(c.s0);
      j["s"] = complex_json(c.s);
      j["region"] = to_string(rc);
      Json rows = Json::array();
      for (std::size_t i = 0; i < xs.size(); ++i) {
        rows.push_back({{"x", xs[i]}, {"value", complex_json(mb[i].value)},
                        {"est_error", mb[i].est_error}});
      }
      j["mellin_barnes"] = rows;
      j["x_spread"] = spread;
      if (have_em) {
        j["euler_maclaurin"] = {{"N", long(std::floor(c.x))}, {"value", complex_json(em.value)},
                                {"est_error", em.est_error}};
        j["em_mb_difference"] = std::abs(em.value - mb[0].value);
      }
      j["settings"] = to_json(c.settings);
      out << j.dump(2) << '\n';
      break;
    }
  }
  return {"MellinBarnes", est};
}

Summary run_sup_scan(const RunConfig& c, std::ostream& out) {
  const SupScan scan = sup_scan(c.s0, c.sigma, c.T, c.settings, c.window, c.step);
  switch (c.format) {
    case Format::Text:
      out << "t_lo t_hi t_max max_abs\n";
      for (const auto& w : scan.windows) {
        out << g17(w.t_lo) << ' ' << g17(w.t_hi) << ' ' << g17(w.t_max) << ' '
            << g17(w.max_abs) << '\n';
      }
      out << "fitted_exponent " << g17(scan.fitted_exponent) << '\n';
      break;
    case Format::Csv:
      out << "t_lo,t_hi,t_max,max_abs\n";
      for (const auto& w : scan.windows) {
        out << g17(w.t_lo) << ',' << g17(w.t_hi) << ',' << g17(w.t_max) << ','
            << g17(w.max_abs) << '\n';
      }
      break;
    case Format::Json: {
      Json j = header(c);
      j["s0"] = complex_json(c.s0);
      j["sigma"] = c.sigma;
      j["T"] = c.T;
      j["window"] = c.window;
      j["step"] = c.step;
      Json rows = Json::array();
      for (const auto& w : scan.windows) {
        rows.push_back({{"t_lo", w.t_lo}, {"t_hi", w.t_hi}, {"t_max", w.t_max},
                        {"max_abs", w.max_abs}});
      }
      j["windows"] = rows;
      if (std::isfinite(scan.fitted_exponent)) {
        j["fitted_exponent"] = scan.fitted_exponent;
      } else {
        j["fitted_exponent"] = nullptr;
      }
      j["settings"] = to_json(c.settings);
      out << j.dump(2) << '\n';
      break;
    }
  }
  return {"-", 0.0};
}

Summary dispatch(const RunConfig& c, std::ostream& out) {
  switch (c.command) {
    case Command::Eval: return run_eval(c, out);
    case Command::Zeta2Sq: return run_zeta2sq(c, out);
    case Command::Gamma2: return run_gamma2(c, out);
    case Command::MeanSquare: return run_mean_square(c, out);
    case Command::ApproxCheck: return run_approx(c, out);
    case Command::MbVerify: return run_mb_verify(c, out);
    case Command::SupScan: return run_sup_scan(c, out);
  }
  return {};
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  int status = 0;
  Summary summary;
  std::ostringstream buffer;
  try {
    config.settings.validate();
  } catch (const Error& e) {
    log << "usage error: " << e.what() << '\n';
    return 1;
  }
  try {
    summary = dispatch(config, buffer);
  } catch (const SingularError& e) {
    log << "rejected: " << e.what() << '\n';
    status = 2;
  } catch (const PoleError& e) {
    log << "rejected: " << e.what() << '\n';
    status = 2;
  } catch (const DomainError& e) {
    log << "rejected: " << e.what() << '\n';
    status = 2;
  } catch (const ConvergenceError& e) {
    log << "convergence failure: " << e.what() << '\n';
    status = 3;
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
    status = 1;
  }
  if (status != 0) return status;

  if (config.output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
      log << "error: cannot open " << config.output_path << '\n';
      return 1;
    }
    file << buffer.str();
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char line[256];
  std::snprintf(line, sizeof line, "%s route=%s est_error=%.3g wall=%.3fs",
                std::string(to_string(config.command)).c_str(), summary.route.c_str(),
                summary.est_error, wall);
  log << line << '\n';
  return 0;
}

}  // namespace dzeta
