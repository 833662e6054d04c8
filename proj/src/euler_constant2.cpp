#include "dzeta/euler_constant2.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "dzeta/continuation.hpp"
#include "dzeta/double_zeta.hpp"
#include "dzeta/errors.hpp"
#include "dzeta/extrapolation.hpp"
#include "dzeta/series.hpp"
#include "dzeta/special_functions.hpp"

namespace dzeta {
namespace {

constexpr int kLevels = 5;
constexpr int kHarmonicTerms = 4;

void require_half_plane(Complex s0, const char* who) {
  if (!(s0.real() > 1.0)) {
    throw DomainError(std::string(who) + ": requires Re s0 > 1");
  }
}

// m > M part of sum_m m^{-s0} (H_{m+N} - H_m - log(m+N)) using
// H_k = log k + gamma + 1/(2k) - sum_p B_{2p}/(2p) k^{-2p}.
Complex limit_tail(Complex s0, long N, long M) {
  series::CompensatedSum sum;
  const double Nd = double(N);
  const double b = double(M + 1);
  sum.add(0.5 * series::shifted_power_tail(s0, 1.0, Nd, M).value);
  sum.add(-series::hurwitz_log_moment(s0, b, 1).value);
  sum.add(-0.5 * series::hurwitz_zeta(s0 + 1.0, b).value);
  for (int p = 1; p <= kHarmonicTerms; ++p) {
    const double c = series::bernoulli(p) / (2.0 * p);
    sum.add(-c * series::shifted_power_tail(s0, double(2 * p), Nd, M).value);
    sum.add(c * series::hurwitz_zeta(s0 + double(2 * p), b).value);
  }
  return sum.value();
}

}  // namespace

Complex gamma2_limit(Complex s0, long N_max, const EvalSettings& settings) {
  require_half_plane(s0, "gamma2_limit");
  if (N_max < 1000) throw DomainError("gamma2_limit: requires N_max >= 1000");
  const long N_min = N_max >> (kLevels - 1);
  const long top = 5 * N_max;
  std::vector<long double> harmonic(top + 1);
  harmonic[0] = 0.0L;
  for (long k = 1; k <= top; ++k) harmonic[k] = harmonic[k - 1] + 1.0L / (long double)k;
  std::vector<Complex> pw(4 * N_max + 1);
  for (long m = 1; m <= 4 * N_max; ++m) {
    pw[m] = series::pow_from_log(std::log(double(m)), -s0);
  }

  std::array<double, kLevels> h{};
  std::array<Complex, kLevels> f{};
  for (int level = 0; level < kLevels; ++level) {
    const long N = N_min << level;
    const long M = 4 * N;
    series::CompensatedSum sum;
    for (long m = 1; m <= M; ++m) {
      const long double inner =
          harmonic[m + N] - harmonic[m] - std::log((long double)(m + N));
      sum.add(pw[m] * double(inner));
    }
    sum.add(limit_tail(s0, N, M));
    h[level] = 1.0 / double(N);
    f[level] = sum.value();
  }
  const Extrapolated e = extrapolate_to_zero(h, f);
  if (e.residual > settings.tol) {
    std::ostringstream msg;
    msg << "gamma2_limit: extrapolation residual " << e.residual << " exceeds tol";
    throw ConvergenceError(msg.str());
  }
  return e.value;
}

Complex gamma2_pole(Complex s0, const EvalSettings& settings, double delta_max) {
  require_half_plane(s0, "gamma2_pole");
  if (!(delta_max > 0.0 && delta_max <= 0.5)) {
    throw DomainError("gamma2_pole: requires 0 < delta_max <= 1/2");
  }
  const Complex zeta_s0 = riemann_zeta(s0, settings);
  std::array<double, kLevels> h{};
  std::array<Complex, kLevels> f{};
  for (int i = 0; i < kLevels; ++i) {
    h[i] = delta_max * std::pow(10.0, -0.5 * i);
    if (h[i] <= settings.singular_radius) {
      throw DomainError("gamma2_pole: delta inside the exclusion radius");
    }
    f[i] = zeta2_eval({s0, 1.0 + h[i]}, settings).value - zeta_s0 / h[i];
  }
  const Extrapolated e = extrapolate_to_zero(h, f);
  if (e.residual > 1e-6) {
    std::ostringstream msg;
    msg << "gamma2_pole: extrapolation residual " << e.residual;
    throw ConvergenceError(msg.str());
  }
  return e.value;
}

Complex gamma2_closed(Complex s0, const EvalSettings& settings) {
  require_half_plane(s0, "gamma2_closed");
  return riemann_zeta(s0, settings) * euler_gamma() -
         zeta2_direct({1.0, s0}, settings).value - riemann_zeta(s0 + 1.0, settings);
}

Gamma2Result gamma2_all(Complex s0, long N_max, const EvalSettings& settings) {
  Gamma2Result r;
  r.via_limit = gamma2_limit(s0, N_max, settings);
  r.via_pole = gamma2_pole(s0, settings);
  r.via_closed = gamma2_closed(s0, settings);
  r.spread = std::max({std::abs(r.via_limit - r.via_pole), std::abs(r.via_limit - r.via_closed),
                       std::abs(r.via_pole - r.via_closed)});
  return r;
}

}  // namespace dzeta
