#include "dzeta/approximation.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "dzeta/continuation.hpp"
#include "dzeta/errors.hpp"
#include "dzeta/fit.hpp"

namespace dzeta {

PredictedOrder approximation_order(Complex s0, Complex s) {
  const double sig0 = s0.real();
  const double sig = s.real();
  if (std::abs(sig0 - 1.0) < 1e-12) return {-sig, 1};
  if (sig0 > 1.0) return {-sig, 0};
  return {1.0 - sig - sig0, 0};
}

ApproxReport approx_split_sum(const ArgumentPair& p, double x, double C,
                              const EvalSettings& settings) {
  const double sig = p.s.real();
  if (!(sig > std::max(0.0, 2.0 - p.s0.real()))) {
    throw DomainError("approx_split_sum: requires Re s > max(0, 2 - Re s0)");
  }
  if (!(C > 1.0)) throw DomainError("approx_split_sum: requires C > 1");
  if (!(x >= 1.0)) throw DomainError("approx_split_sum: requires x >= 1");
  if (std::abs(p.s.imag()) > 2.0 * std::numbers::pi * x / C) {
    throw DomainError("approx_split_sum: requires |t| <= 2 pi x / C");
  }
  if (p.s == Complex(1.0, 0.0)) throw DomainError("approx_split_sum: requires s != 1");
  ApproxReport r;
  r.x_or_t = x;
  r.approximant = truncated_double_sum(p.s0, p.s, long(std::floor(x)), settings) -
                  shifted_power_sum(p.s0, p.s, x, settings);
  r.reference = zeta2_eval(p, settings).value;
  r.abs_error = std::abs(r.approximant - r.reference);
  r.predicted_order = approximation_order(p.s0, p.s);
  return r;
}

ApproxReport approx_truncated_sum(const ArgumentPair& p, const EvalSettings& settings) {
  const double sig0 = p.s0.real();
  const double sig = p.s.real();
  const double t = p.s.imag();
  if (!(sig0 > 0.0 && sig0 < 1.5 && sig > 0.5 && sig0 + sig > 1.0)) {
    throw DomainError(
        "approx_truncated_sum: requires 0 < Re s0 < 3/2, Re s > 1/2, Re(s0 + s) > 1");
  }
  if (!(t >= 2.0)) throw DomainError("approx_truncated_sum: requires Im s >= 2");
  const std::string why = singular_reason(p, settings);
  if (!why.empty()) throw SingularError(why);
  ApproxReport r;
  r.x_or_t = t;
  r.approximant = truncated_double_sum(p.s0, p.s, long(std::floor(t)), settings);
  r.reference = zeta2_eval(p, settings).value;
  r.abs_error = std::abs(r.approximant - r.reference);
  r.predicted_order = approximation_order(p.s0, p.s);
  return r;
}

double error_exponent_fit(std::span<const ApproxReport> reports) {
  if (reports.size() < 5) {
    throw InsufficientDataError("error_exponent_fit: need at least 5 reports");
  }
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const ApproxReport& r = reports[i];
    if (i > 0 && !(r.x_or_t > reports[i - 1].x_or_t)) {
      throw InsufficientDataError("error_exponent_fit: x_or_t must increase strictly");
    }
    if (!(r.x_or_t > 1.0) || !(r.abs_error > 0.0)) {
      throw InsufficientDataError("error_exponent_fit: needs x > 1 and nonzero errors");
    }
    const double l = std::log(r.x_or_t);
    lx.push_back(l);
    ly.push_back(std::log(r.abs_error) - r.predicted_order.log_power * std::log(l));
  }
  if (std::log10(reports.back().x_or_t / reports.front().x_or_t) < 1.5) {
    throw InsufficientDataError("error_exponent_fit: range must span 1.5 decades");
  }
  return fit::least_squares(lx, ly).slope;
}

}  // namespace dzeta
