#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace dzeta::quad {

template <typename T>
struct QuadResult {
  T value{};
  double error = 0.0;
  long evaluations = 0;
  bool rounding_limited = false;  // error is the floating-point floor, bisecting won't help
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point rule by Newton iteration on P_n. Cached per n.
const GaussLegendreRule& gauss_legendre(int n);

namespace detail {

// 7-point Gauss / 15-point Kronrod pair (QUADPACK qk15).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

}  // namespace detail

/// One Gauss-Kronrod 15 panel with the QUADPACK error heuristic.
template <typename T, typename F>
QuadResult<T> gauss_kronrod15(F&& f, double a, double b) {
  using detail::kWg;
  using detail::kWgk;
  using detail::kXgk;
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<T, 15> fv;
  fv[7] = f(center);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv[j] = f(center - dx);
    fv[14 - j] = f(center + dx);
  }
  T resk = fv[7] * kWgk[7];
  T resg = fv[7] * kWg[3];
  double resabs = std::abs(fv[7]) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const T pair = fv[j] + fv[14 - j];
    resk += kWgk[j] * pair;
    resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
    if (j % 2 == 1) resg += kWg[j / 2] * pair;
  }
  const T mean = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fv[7] - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  }
  resk *= half;
  resg *= half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs(resk - resg);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double floor = 50.0 * eps * resabs;
  return {resk, std::max(err, floor), 15, err <= floor};
}

/// Recursive bisection until each panel's error estimate is below its share
/// of abs_tol. Evaluation order is fixed, so results are reproducible.
template <typename T, typename F>
QuadResult<T> integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                 int max_depth = 30) {
  QuadResult<T> whole = gauss_kronrod15<T>(f, a, b);
  if (whole.error <= abs_tol || max_depth == 0 || whole.rounding_limited) return whole;
  const double mid = 0.5 * (a + b);
  QuadResult<T> left = integrate_adaptive<T>(f, a, mid, 0.5 * abs_tol, max_depth - 1);
  QuadResult<T> right = integrate_adaptive<T>(f, mid, b, 0.5 * abs_tol, max_depth - 1);
  return {left.value + right.value, left.error + right.error,
          whole.evaluations + left.evaluations + right.evaluations};
}

/// Splits [a, b] into equal panels no wider than max_width and integrates
/// each adaptively with a tolerance proportional to its width.
template <typename T, typename F>
QuadResult<T> integrate_panels(F&& f, double a, double b, double max_width,
                               double abs_tol) {
  QuadResult<T> out;
  if (b == a) return out;
  const long panels = std::max<long>(1, long(std::ceil((b - a) / max_width)));
  const double h = (b - a) / double(panels);
  const double panel_tol = abs_tol / double(panels);
  // Compensated accumulation of the panel values.
  T sum{};
  T comp{};
  for (long i = 0; i < panels; ++i) {
    const double lo = a + h * double(i);
    const double hi = (i + 1 == panels) ? b : a + h * double(i + 1);
    const QuadResult<T> r = integrate_adaptive<T>(f, lo, hi, panel_tol);
    const T y = r.value - comp;
    const T t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    out.error += r.error;
    out.evaluations += r.evaluations;
  }
  out.value = sum;
  return out;
}

}  // namespace dzeta::quad
