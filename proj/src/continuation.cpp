#include "dzeta/continuation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "dzeta/double_zeta.hpp"
#include "dzeta/errors.hpp"
#include "dzeta/extrapolation.hpp"
#include "dzeta/quadrature.hpp"
#include "dzeta/series.hpp"
#include "dzeta/special_functions.hpp"

namespace dzeta {
namespace {

using series::CompensatedSum;
using series::pow_from_log;
using LComplex = std::complex<long double>;

constexpr double kPi = std::numbers::pi;

// Nearest point of {2, 1, 0, -1, ...} to s0 + s, or NaN if it is too far.
double nearest_locus_point(Complex u, double radius) {
  double n = std::round(u.real());
  if (n > 2.0) n = 2.0;
  if (std::abs(u - Complex(n, 0.0)) < radius) return n;
  return std::nan("");
}

// (exp(p l) - 1) / p, with the p -> 0 limit l.
Complex expm1_ratio(Complex p, double l) {
  const Complex z = p * l;
  if (std::abs(z) < 1e-3) {
    return l * (1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0 + z * z * z * z / 120.0);
  }
  return series::expm1(z) / p;
}

// int_lo^hi (y - k - 1/2) y^{-s-1} dy with k = floor(lo) and hi <= k + 1.
Complex sawtooth_piece(double lo, double hi, double k, Complex s) {
  const double l = std::log1p((hi - lo) / lo);
  const Complex lo_ms = pow_from_log(std::log(lo), -s);
  return lo_ms * (lo * expm1_ratio(1.0 - s, l) - (k + 0.5) * expm1_ratio(-s, l));
}

// -sum_p B_{2p}/(2p)! (s+1)_{2p-2} b^{-s-2p+1}, the large-b expansion of the
// sawtooth integral. Returns the value and a bound on the omitted terms.
series::TailValue sawtooth_tail(double b, Complex s) {
  const Complex E = pow_from_log(std::log(b), -s);
  CompensatedSum sum;
  Complex poch = 1.0;  // (s+1)_{2p-2}
  double bp = 1.0 / b;  // b^{1-2p}
  double last = 0.0;
  for (int p = 1; p <= series::kBernoulliTerms; ++p) {
    const Complex term = -series::bernoulli_ratio(p) * poch * E * bp;
    sum.add(term);
    last = std::abs(term);
    poch *= (s + 2.0 * p - 1.0) * (s + 2.0 * p);
    bp /= b * b;
  }
  return {sum.value(), 2.0 * last};
}

double real_power_tail(double x, double b) {
  if (x <= 1.0) return HUGE_VAL;
  return std::pow(b, 1.0 - x) / (x - 1.0) + std::pow(b, -x);
}

// Split and cutoff choices shared by the Euler-Maclaurin pieces.
struct Cutoffs {
  long K;  // direct k-range for A1
  long M;  // direct m-range for A2, A3, A4
};

Cutoffs em_cutoffs(Complex s0, Complex s, long N, const EvalSettings& settings) {
  const double ua = std::abs(s0 + s);
  Cutoffs c{};
  c.K = std::max<long>({long(settings.k_cutoff), 4 * N + 4,
                        long(std::ceil(series::em_base(ua) + series::kBinomialTerms))});
  c.M = std::max<long>(
      {long(settings.m_cutoff), 3 * N,
       long(std::ceil(series::em_base(ua + 2.0 * series::kBernoulliTerms) +
                      series::kBinomialTerms - double(N)))});
  return c;
}

std::vector<Complex> powers(Complex s0, long top) {
  std::vector<Complex> pw(top + 1);
  for (long m = 1; m <= top; ++m) pw[m] = pow_from_log(std::log(double(m)), -s0);
  return pw;
}

struct A1Value {
  Complex value;
  double bound;
  long K;
};

A1Value a1_sum(Complex s0, Complex s, long N, long K, const std::vector<Complex>& pw) {
  // k-form: sum_k k^{-s} sum_{max(1,k-N) <= m < k} m^{-s0}.
  std::vector<LComplex> prefix(K + 1);
  prefix[0] = 0.0L;
  for (long m = 1; m <= K; ++m) prefix[m] = prefix[m - 1] + LComplex(pw[m]);
  CompensatedSum sum;
  for (long k = 2; k <= K; ++k) {
    const LComplex W = prefix[k - 1] - prefix[std::max<long>(0, k - N - 1)];
    sum.add(Complex(W) * pow_from_log(std::log(double(k)), -s));
  }
  const double b = double(K + 1);
  std::array<double, series::kBinomialTerms> mu{};
  for (long n = 1; n <= N; ++n) {
    const double r = double(n) / b;
    double rp = 1.0;
    for (int j = 0; j < series::kBinomialTerms; ++j) {
      mu[j] += rp;
      rp *= r;
    }
  }
  const series::TailValue tail = series::binomial_tail(s0, s0 + s, b, mu);
  sum.add(tail.value);
  return {sum.value(), tail.bound, K};
}

// sum_m m^{-s0} (m+a)^{-w} with m <= M direct.
series::TailValue shifted_sum(Complex s0, Complex w, double a, long M,
                              const std::vector<Complex>& pw) {
  CompensatedSum sum;
  for (long m = 1; m <= M; ++m) {
    sum.add(pw[m] * pow_from_log(std::log(double(m) + a), -w));
  }
  const series::TailValue tail = series::shifted_power_tail(s0, w, a, M);
  sum.add(tail.value);
  return {sum.value(), tail.bound};
}

struct A34Value {
  Complex a3, a4;
  double bound;
};

A34Value a3_a4(Complex s0, Complex s, long N, long M, const std::vector<Complex>& pw) {
  const double Nd = double(N);
  const series::TailValue s4 = shifted_sum(s0, s, Nd, M, pw);

  // I(m+N) for m = M .. 1 by backward recurrence from I(M+N+1).
  CompensatedSum direct;
  Complex I = em_sawtooth_integral(double(M + N + 1), s);
  for (long m = M; m >= 1; --m) {
    const double a = double(m + N);
    I += sawtooth_piece(a, a + 1.0, a, s);
    direct.add(pw[m] * I);
  }
  // m > M: the large-argument expansion of I turns the tail into shifted
  // power sums.
  double bound = s4.bound;
  Complex poch = 1.0;  // (s+1)_{2p-2}
  for (int p = 1; p <= series::kBernoulliTerms; ++p) {
    const Complex d = -series::bernoulli_ratio(p) * poch;
    const series::TailValue t =
        series::shifted_power_tail(s0, s + double(2 * p - 1), Nd, M);
    direct.add(d * t.value);
    bound += std::abs(d) * t.bound;
    poch *= (s + 2.0 * p - 1.0) * (s + 2.0 * p);
  }
  const double x = s0.real() + s.real() + 2.0 * series::kBernoulliTerms + 1.0;
  bound += 2.0 * std::abs(series::bernoulli_ratio(series::kBernoulliTerms + 1)) *
           std::abs(poch) * real_power_tail(x, double(M + 1));
  const Complex a3 = s * direct.value();
  return {a3, 0.5 * s4.value, std::abs(s) * bound + 0.5 * s4.bound};
}

void check_locus(const ArgumentPair& p, const EvalSettings& settings) {
  const std::string why = singular_reason(p, settings);
  if (!why.empty()) throw SingularError(why);
}

// Contour Re z = c for the r3 integral: c in (max(0, 1 - Re s), 1), kept away
// from the pole at z = s0 - 1.
double choose_contour(Complex s0, Complex s) {
  const double lo = std::max(0.0, 1.0 - s.real()) + 0.02;
  const double pole = s0.real() - 1.0;
  for (double c : {0.5, 0.35, 0.65, 0.25, 0.75, 0.15, 0.85, 0.95}) {
    if (c > lo && std::abs(c - pole) >= 0.05) return c;
  }
  return std::max(0.5, lo + 0.01);
}

// psi''(w) by a central difference of psi'.
Complex tetragamma(Complex w) {
  const double h = std::min(1e-3, 0.1 * std::abs(w));
  return (trigamma(w + h) - trigamma(w - h)) / (2.0 * h);
}

GDecomposition g_impl(Complex s0, Complex s, double x, double c,
                      const EvalSettings& settings) {
  GDecomposition out;
  out.x = x;
  out.contour = c;
  const double logx = std::log(x);
  const Complex one_minus_s = 1.0 - s;
  const Complex pref = pow_from_log(logx, one_minus_s) / one_minus_s;
  const Complex sm1 = s - 1.0;
  const Complex lg_sm1 = log_gamma(sm1);
  const Complex delta = s0 - 1.0;

  if (std::abs(delta) < settings.s0_one_radius) {
    // (1 - h(delta)) / delta with
    // log h = lgamma(1 - delta) + lgamma(s - 1 + delta) - lgamma(s - 1) - delta log x.
    const double g = euler_gamma();
    const double z2 = kPi * kPi / 6.0;
    const double z3 = 1.2020569031595942854;
    const Complex c1 = g + digamma(sm1) - logx;
    const Complex c2 = (z2 + trigamma(sm1)) / 2.0;
    const Complex c3 = z3 / 3.0 + tetragamma(sm1) / 6.0;
    Complex bracket;
    if (delta == Complex(0.0, 0.0)) {
      bracket = -c1;
    } else {
      const Complex L = delta * (c1 + delta * (c2 + delta * c3));
      bracket = -series::expm1(L) / delta;
    }
    out.r1 = pref * bracket;
    out.r2 = 0.0;
    out.digamma_branch = true;
  } else {
    out.r1 = pref / delta;
    if (delta.real() < c) {
      out.r2 = pref * std::exp(log_gamma(s + s0 - 2.0) + log_gamma(1.0 - s0) - lg_sm1 -
                               delta * logx);
    }
  }

  const auto integrand = [&](double y) -> Complex {
    const Complex z(c, y);
    return std::exp(log_gamma(sm1 + z) + log_gamma(-z) - lg_sm1 - z * logx) / (delta - z);
  };
  const double t = s.imag();
  const double H = settings.contour_half_height;
  const double ylo = std::min(0.0, -t) - H;
  const double yhi = std::max(0.0, -t) + H;
  const double omega = 2.0 * std::log(std::abs(t) + H + 2.0) + logx + 1.0;
  const double width = std::min(2.0, 3.0 / omega);
  const double scale = std::abs(pref) / (2.0 * kPi);
  const double abs_tol = 0.02 * settings.tol / std::max(scale, 1e-300);
  const auto q = quad::integrate_panels<Complex>(integrand, ylo, yhi, width, abs_tol);
  out.r3 = pref * q.value / (2.0 * kPi);
  out.r3_quadrature_error = scale * q.error;
  // Beyond the ends the integrand decays at least like exp(-pi |y| / 2).
  out.r3_truncation_bound =
      scale * (std::abs(integrand(ylo)) + std::abs(integrand(yhi))) * (2.0 / kPi) * 2.0;
  return out;
}

struct Y23Value {
  Complex value;
  double bound;
};

Y23Value y23_impl(Complex s0, Complex s, double x) {
  const Complex one_minus_s = 1.0 - s;
  const Complex y3 = pow_from_log(std::log1p(x), one_minus_s) / (2.0 * one_minus_s);

  constexpr int P = 10;
  const double L = std::max({64.0, std::ceil(series::em_base(std::abs(s)) - x),
                             std::ceil(4.0 * (std::abs(s0) + 2.0 * P))});
  const quad::GaussLegendreRule& gl = quad::gauss_legendre(16);
  // d/dy [y^{-s0} (y+x)^{1-s}] = y^{-s0-1} (y+x)^{-s} ((1-s) y - s0 (y+x)).
  const auto dG = [&](double y) -> Complex {
    const double ly = std::log(y);
    const double lyx = std::log(y + x);
    return std::exp(-(s0 + 1.0) * ly - s * lyx) * (one_minus_s * y - s0 * (y + x));
  };
  CompensatedSum sum;
  const long Ln = long(L);
  for (long k = 1; k < Ln; ++k) {
    const double kd = double(k);
    const double omega = std::abs(s0) / kd + std::abs(s) / (kd + x);
    const int q = 1 + int(omega / 4.0);
    const double h = 1.0 / q;
    for (int j = 0; j < q; ++j) {
      const double a = kd + h * j;
      const double mid = a + 0.5 * h;
      Complex panel = 0.0;
      for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        const double y = mid + 0.5 * h * gl.nodes[i];
        panel += gl.weights[i] * (y - kd - 0.5) * dG(y);
      }
      sum.add(0.5 * h * panel);
    }
  }
  // int_L^inf saw(y) G'(y) dy ~ -sum_p B_{2p}/(2p)! G^{(2p-1)}(L), with the
  // derivatives of G by Leibniz' rule.
  const double Lx = L + x;
  const Complex base = std::exp(-s0 * std::log(L) + one_minus_s * std::log(Lx));
  std::vector<Complex> a(2 * P + 2), b(2 * P + 2);  // (s0)_i / L^i, (s-1)_j / (L+x)^j
  a[0] = b[0] = 1.0;
  for (int i = 1; i < 2 * P + 2; ++i) {
    a[i] = a[i - 1] * (s0 + double(i - 1)) / L;
    b[i] = b[i - 1] * (s - 1.0 + double(i - 1)) / Lx;
  }
  const auto deriv = [&](int r) {
    Complex acc = 0.0;
    double binom = 1.0;
    for (int i = 0; i <= r; ++i) {
      acc += binom * a[i] * b[r - i];
      binom = binom * double(r - i) / double(i + 1);
    }
    return (r % 2 == 0 ? 1.0 : -1.0) * base * acc;
  };
  double last = 0.0;
  for (int p = 1; p <= P; ++p) {
    const Complex term = -series::bernoulli_ratio(p) * deriv(2 * p - 1);
    sum.add(term);
    last = std::abs(term);
  }
  const Complex y2 = sum.value() / one_minus_s;
  // Per-panel Gauss-Legendre error is far below double precision at these
  // panel widths; the Bernoulli truncation dominates.
  const double bound = 2.0 * last / std::abs(one_minus_s) +
                       1e-15 * std::abs(y2);
  return {y2 + y3, bound};
}

}  // namespace

std::string_view to_string(RegionClass r) {
  switch (r) {
    case RegionClass::AbsolutelyConvergent: return "AbsolutelyConvergent";
    case RegionClass::EMStrip: return "EMStrip";
    case RegionClass::MBStrip: return "MBStrip";
    case RegionClass::Singular: return "Singular";
    case RegionClass::OutOfDomain: return "OutOfDomain";
  }
  return "?";
}

std::string singular_reason(const ArgumentPair& p, const EvalSettings& settings) {
  const double r = settings.singular_radius;
  if (std::abs(p.s - 1.0) < r) return "pole s=1";
  const double n = nearest_locus_point(p.s0 + p.s, r);
  if (!std::isnan(n)) {
    std::ostringstream msg;
    msg << "singular locus s0+s=" << long(n);
    return msg.str();
  }
  return {};
}

RegionClass classify_region(const ArgumentPair& p, const EvalSettings& settings) {
  if (!singular_reason(p, settings).empty()) return RegionClass::Singular;
  const double sig0 = p.s0.real();
  const double sig = p.s.real();
  const double sum = sig0 + sig;
  if (sig > 1.0 && sum > 2.0) return RegionClass::AbsolutelyConvergent;
  if (sig > 0.0 && sum > 2.0) return RegionClass::EMStrip;
  if (sig0 > 0.0 && sig0 < 1.5 && sig > 0.5 && sum > 1.0) return RegionClass::MBStrip;
  return RegionClass::OutOfDomain;
}

Complex em_sawtooth_integral(double a, Complex s) {
  if (!(s.real() > 0.0)) throw DomainError("em_sawtooth_integral: requires Re s > 0");
  if (!(a >= 1.0)) throw DomainError("em_sawtooth_integral: requires a >= 1");
  const double k0 = std::floor(a);
  const double L = std::max(200.0, std::ceil(2.0 * std::abs(s)));
  const double top = k0 + 1.0 + L;
  CompensatedSum sum;
  double k = k0;
  if (a > k0) {
    sum.add(sawtooth_piece(a, k0 + 1.0, k0, s));
    k += 1.0;
  }
  for (; k < top; k += 1.0) sum.add(sawtooth_piece(k, k + 1.0, k, s));
  sum.add(sawtooth_tail(top, s).value);
  return sum.value();
}

EMParts em_parts(Complex s0, Complex s, long N, const EvalSettings& settings,
                 bool with_a2) {
  if (N < 1) throw DomainError("em_parts: requires N >= 1");
  if (!((s0 + s).real() > 1.0)) throw DomainError("em_parts: requires Re(s0 + s) > 1");
  if (!(s.real() > 0.0)) throw DomainError("em_parts: requires Re s > 0");
  const Cutoffs c = em_cutoffs(s0, s, N, settings);
  const std::vector<Complex> pw = powers(s0, std::max(c.K, c.M));
  EMParts out;
  const A1Value a1 = a1_sum(s0, s, N, c.K, pw);
  out.a1 = a1.value;
  out.bound += a1.bound;
  if (with_a2) {
    if (s == Complex(1.0, 0.0)) throw PoleError("em_parts: A2 has a pole at s = 1");
    if (!((s0 + s).real() > 2.0)) throw DomainError("em_parts: A2 requires Re(s0 + s) > 2");
    const series::TailValue s2 = shifted_sum(s0, s - 1.0, double(N), c.M, pw);
    out.a2 = s2.value / (1.0 - s);
    out.bound += s2.bound / std::abs(1.0 - s);
  }
  const A34Value a34 = a3_a4(s0, s, N, c.M, pw);
  out.a3 = a34.a3;
  out.a4 = a34.a4;
  out.bound += a34.bound;
  out.terms = c.K + c.M;
  return out;
}

Complex truncated_double_sum(Complex s0, Complex s, long N, const EvalSettings& settings,
                             double* bound) {
  if (N < 1) throw DomainError("truncated_double_sum: requires N >= 1");
  if (!((s0 + s).real() > 1.0)) {
    throw DomainError("truncated_double_sum: requires Re(s0 + s) > 1");
  }
  const Cutoffs c = em_cutoffs(s0, s, N, settings);
  const std::vector<Complex> pw = powers(s0, c.K);
  const A1Value a1 = a1_sum(s0, s, N, c.K, pw);
  if (bound) *bound = a1.bound;
  return a1.value;
}

Complex shifted_power_sum(Complex s0, Complex s, double x, const EvalSettings& settings,
                          double* bound) {
  if (!(x >= 0.0)) throw DomainError("shifted_power_sum: requires x >= 0");
  if (!((s0 + s).real() > 2.0)) throw DomainError("shifted_power_sum: requires Re(s0 + s) > 2");
  if (s == Complex(1.0, 0.0)) throw PoleError("shifted_power_sum: pole at s = 1");
  const long M = std::max<long>(settings.m_cutoff, long(std::ceil(3.0 * x)));
  const std::vector<Complex> pw = powers(s0, M);
  const series::TailValue v = shifted_sum(s0, s - 1.0, x, M, pw);
  if (bound) *bound = v.bound / std::abs(1.0 - s);
  return v.value / (1.0 - s);
}

EvalResult zeta2_em(const ArgumentPair& p, long N, const EvalSettings& settings) {
  settings.validate();
  if (std::abs(p.s - 1.0) < settings.singular_radius) {
    throw PoleError("zeta2_em: pole s=1");
  }
  check_locus(p, settings);
  const RegionClass rc = classify_region(p, settings);
  if (rc != RegionClass::AbsolutelyConvergent && rc != RegionClass::EMStrip) {
    throw DomainError("zeta2_em: requires Re s > 0 and Re(s0 + s) > 2");
  }
  if (N < 1) throw DomainError("zeta2_em: requires N >= 1");
  const EMParts parts = em_parts(p.s0, p.s, N, settings);
  if (parts.bound > settings.tol) {
    std::ostringstream msg;
    msg << "zeta2_em: truncation bound " << parts.bound << " exceeds tol";
    throw ConvergenceError(msg.str());
  }
  return {parts.a1 - parts.a2 - parts.a3 - parts.a4, parts.bound, Route::EulerMaclaurin,
          parts.terms};
}

Complex mellin_barnes_pow(Complex lambda, Complex s, double c, const EvalSettings& settings) {
  settings.validate();
  if (!(s.real() > 0.0)) throw DomainError("mellin_barnes_pow: requires Re s > 0");
  if (lambda == Complex(0.0, 0.0)) throw DomainError("mellin_barnes_pow: lambda = 0");
  const double arg = std::arg(lambda);
  if (!(std::abs(arg) < kPi) || (lambda.imag() == 0.0 && lambda.real() < 0.0)) {
    throw DomainError("mellin_barnes_pow: requires |arg lambda| < pi");
  }
  if (!(c > -s.real() && c < 0.0)) {
    throw DomainError("mellin_barnes_pow: requires -Re s < c < 0");
  }
  const Complex log_lambda = std::log(lambda);
  const Complex lg_s = log_gamma(s);
  const auto integrand = [&](double y) -> Complex {
    const Complex z(c, y);
    return std::exp(log_gamma(s + z) + log_gamma(-z) - lg_s + z * log_lambda);
  };
  const double t = s.imag();
  const double margin =
      std::min(1e4, std::max(settings.contour_half_height, 45.0 / (kPi - std::abs(arg))));
  const double ylo = std::min(0.0, -t) - margin;
  const double yhi = std::max(0.0, -t) + margin;
  const double omega =
      2.0 * std::log(std::abs(t) + margin + 2.0) + std::abs(std::log(std::abs(lambda))) + 1.0;
  const double width = std::min(2.0, 3.0 / omega);
  const auto q = quad::integrate_panels<Complex>(integrand, ylo, yhi, width,
                                                 0.02 * settings.tol * 2.0 * kPi);
  return q.value / (2.0 * kPi);
}

GDecomposition g_function(Complex s0, Complex s, double x, const EvalSettings& settings) {
  settings.validate();
  if (!(s0.real() > 0.0 && s0.real() < 1.5)) {
    throw DomainError("g_function: requires 0 < Re s0 < 3/2");
  }
  if (!(s.real() > 0.5)) throw DomainError("g_function: requires Re s > 1/2");
  if (!(x >= 1.0)) throw DomainError("g_function: requires x >= 1");
  check_locus({s0, s}, settings);
  return g_impl(s0, s, x, 0.5, settings);
}

Complex y23_terms(Complex s0, Complex s, double x, const EvalSettings& settings) {
  settings.validate();
  if (!(s0.real() > 0.0)) throw DomainError("y23_terms: requires Re s0 > 0");
  if (!((s0 + s).real() > 1.0)) throw DomainError("y23_terms: requires Re(s0 + s) > 1");
  if (s == Complex(1.0, 0.0)) throw PoleError("y23_terms: pole at s = 1");
  if (!(x >= 1.0)) throw DomainError("y23_terms: requires x >= 1");
  return y23_impl(s0, s, x).value;
}

EvalResult zeta2_mb(const ArgumentPair& p, double x, const EvalSettings& settings) {
  settings.validate();
  check_locus(p, settings);
  if (!(x >= 1.0)) throw DomainError("zeta2_mb: requires x >= 1");
  if (!(p.s.real() > 0.5 && (p.s0 + p.s).real() > 1.0)) {
    throw DomainError("zeta2_mb: requires Re s > 1/2 and Re(s0 + s) > 1");
  }
  const long N = long(std::floor(x));
  const double xn = double(N);
  const EMParts parts = em_parts(p.s0, p.s, N, settings, false);
  const GDecomposition g = g_impl(p.s0, p.s, xn, choose_contour(p.s0, p.s), settings);
  const Y23Value y = y23_impl(p.s0, p.s, xn);
  const double bound =
      parts.bound + g.r3_quadrature_error + g.r3_truncation_bound + y.bound;
  if (bound > settings.tol) {
    std::ostringstream msg;
    msg << "zeta2_mb: error bound " << bound << " exceeds tol";
    throw ConvergenceError(msg.str());
  }
  const Complex value = parts.a1 - (g.value() + y.value) - parts.a3 - parts.a4;
  return {value, bound, Route::MellinBarnes, parts.terms};
}

EvalResult zeta2_eval(const ArgumentPair& p, const EvalSettings& settings) {
  switch (classify_region(p, settings)) {
    case RegionClass::AbsolutelyConvergent: return zeta2_direct(p, settings);
    case RegionClass::EMStrip: return zeta2_em(p, settings.n_cutoff, settings);
    case RegionClass::MBStrip: return zeta2_mb(p, double(settings.n_cutoff), settings);
    case RegionClass::Singular: throw SingularError(singular_reason(p, settings));
    case RegionClass::OutOfDomain: break;
  }
  throw DomainError("zeta2_eval: outside every continuation region");
}

Complex residue_at_s1(Complex s0, const EvalSettings& settings) {
  if (!(s0.real() > 1.0)) throw DomainError("residue_at_s1: requires Re s0 > 1");
  constexpr int kPoints = 7;
  std::array<double, kPoints> h{};
  std::array<Complex, kPoints> f{};
  for (int i = 0; i < kPoints; ++i) {
    h[i] = std::pow(10.0, -1.0 - 0.5 * i);
    f[i] = h[i] * zeta2_eval({s0, 1.0 + h[i]}, settings).value;
  }
  const Extrapolated e = extrapolate_to_zero(h, f);
  if (e.residual > 1e-6) {
    std::ostringstream msg;
    msg << "residue_at_s1: extrapolation residual " << e.residual;
    throw ConvergenceError(msg.str());
  }
  return e.value;
}

}  // namespace dzeta
