#include "dzeta/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "dzeta/errors.hpp"

namespace dzeta::series {
namespace {

constexpr std::array<double, 15> kBernoulli = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

std::array<double, 15> make_ratios() {
  std::array<double, 15> out{};
  double fact = 1.0;
  for (int p = 1; p <= 15; ++p) {
    fact *= (2.0 * p - 1.0) * (2.0 * p);
    out[p - 1] = kBernoulli[p - 1] / fact;
  }
  return out;
}

const std::array<double, 15> kRatios = make_ratios();

// 2 zeta(2P+1) / (2 pi)^(2P+1): sup of |periodic B_{2P+1}| / (2P+1)!.
double periodic_bernoulli_sup(int P) {
  return 2.0 * (1.0 + std::pow(2.0, -(2.0 * P + 1.0))) /
         std::pow(2.0 * std::numbers::pi, 2.0 * P + 1.0);
}

// Bound on the Euler-Maclaurin remainder for sum_{k >= b} k^{-u} truncated
// after P Bernoulli terms.
double em_remainder(Complex u, double b, int P) {
  Complex poch = 1.0;
  for (int r = 0; r < 2 * P + 1; ++r) poch *= (u + double(r));
  const double expo = u.real() + 2.0 * P;
  if (expo <= 0.0) return HUGE_VAL;
  return periodic_bernoulli_sup(P) * std::abs(poch) * std::pow(b, -expo) / expo;
}

// em_remainder(u, b, P) * b^j, without forming b^j separately.
double em_remainder_scaled(Complex u, double b, int P, int j) {
  Complex poch = 1.0;
  for (int r = 0; r < 2 * P + 1; ++r) poch *= (u + double(r));
  const double expo = u.real() + 2.0 * P;
  if (expo <= 0.0) return HUGE_VAL;
  return periodic_bernoulli_sup(P) * std::abs(poch) *
         std::pow(b, -(expo - double(j))) / expo;
}

}  // namespace

double bernoulli_ratio(int p) { return kRatios.at(p - 1); }
double bernoulli(int p) { return kBernoulli.at(p - 1); }

Complex expm1(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  if (std::abs(x) > 0.5 || std::abs(y) > 0.5) return std::exp(z) - 1.0;
  const double half_sin = std::sin(0.5 * y);
  const double re = std::expm1(x) * std::cos(y) - 2.0 * half_sin * half_sin;
  const double im = std::exp(x) * std::sin(y);
  return {re, im};
}

double em_base(double u_abs) { return u_abs + 2.0 * kBernoulliTerms + 10.0; }

TailValue hurwitz_log_moment(Complex u, double a, int l) {
  if (l < 0 || l > 2) throw DomainError("hurwitz_log_moment: l must be 0, 1 or 2");
  if (!(a > 0.0)) throw DomainError("hurwitz_log_moment: requires a > 0");
  const Complex v = u - 1.0;
  if (v == Complex(0.0, 0.0)) throw PoleError("hurwitz_log_moment: pole at u = 1");

  CompensatedSum sum;
  double b = a;
  const double base = em_base(std::abs(u));
  while (b < base) {
    const double lb = std::log(b);
    sum.add(std::pow(lb, l) * pow_from_log(lb, -u));
    b += 1.0;
  }

  const double L = std::log(b);
  const Complex E = pow_from_log(L, -u);
  const Complex iv = 1.0 / v;
  Complex integral;
  switch (l) {
    case 0: integral = b * E * iv; break;
    case 1: integral = b * E * (L * iv + iv * iv); break;
    default: integral = b * E * (L * L * iv + 2.0 * L * iv * iv + 2.0 * iv * iv * iv); break;
  }
  sum.add(integral);
  sum.add(0.5 * std::pow(L, l) * E);

  // Pochhammer (u)_r and its first two u-derivatives.
  Complex P0 = 1.0, P1 = 0.0, P2 = 0.0;
  double bpow = 1.0 / b;  // b^{-r}
  for (int r = 0; r < 2 * kBernoulliTerms; ++r) {
    const Complex f = u + double(r);
    P2 = P2 * f + 2.0 * P1;
    P1 = P1 * f + P0;
    P0 = P0 * f;
    // now Pochhammer index r + 1
    if ((r + 1) % 2 == 1) {
      const int p = (r + 2) / 2;
      Complex Q;
      switch (l) {
        case 0: Q = P0; break;
        case 1: Q = P0 * L - P1; break;
        default: Q = P0 * L * L - 2.0 * P1 * L + P2; break;
      }
      sum.add(bernoulli_ratio(p) * E * bpow * Q);
    }
    bpow /= b;
  }
  const double log_factor = std::pow(L + 2.0, l);
  return {sum.value(), 2.0 * log_factor * em_remainder(u, b, kBernoulliTerms)};
}

TailValue binomial_tail(Complex s0, Complex u, double b,
                        std::span<const double> moments) {
  const Complex E = std::pow(b, -u);
  CompensatedSum sum;
  Complex coef = 1.0;  // (s0)_j / j!
  double bound = 0.0;
  double last = 0.0;
  int small_run = 0;
  const int jmax = std::min<int>(kBinomialTerms, int(moments.size()));
  int j = 0;
  for (; j < jmax; ++j) {
    if (j > 0) coef *= (s0 + double(j - 1)) / double(j);
    const double mu = moments[j];
    if (mu == 0.0) {
      if (j > 0) break;
      continue;
    }
    const Complex uj = u + double(j);
    const Complex den = uj - 1.0;
    if (den == Complex(0.0, 0.0)) throw PoleError("binomial_tail: pole at u + j = 1");
    Complex bracket = b / den + 0.5;
    Complex poch = uj;  // (u+j)_{2p-1}
    double bp = 1.0 / b;  // b^{1-2p}
    for (int p = 1; p <= kBernoulliTerms; ++p) {
      bracket += bernoulli_ratio(p) * poch * bp;
      poch *= (uj + 2.0 * p - 1.0) * (uj + 2.0 * p);
      bp /= b * b;
    }
    const Complex term = coef * mu * E * bracket;
    sum.add(term);
    bound += std::abs(coef) * mu * em_remainder_scaled(uj, b, kBernoulliTerms, j);
    last = std::abs(term);
    const double scale = std::abs(sum.value());
    if (j >= 4 && last <= 1e-18 * std::max(scale, 1e-300)) {
      if (++small_run >= 2) break;
    } else {
      small_run = 0;
    }
  }
  // Terms decay at least geometrically (ratio <= 1/4 up to polynomial
  // factors) beyond this point.
  bound += 2.0 * last;
  return {sum.value(), bound};
}

TailValue shifted_power_tail(Complex s0, Complex w, double a, long M) {
  if (a < 0.0) throw DomainError("shifted_power_tail: requires a >= 0");
  const Complex u = s0 + w;
  if (a == 0.0) return hurwitz_zeta(u, double(M + 1));

  const double need_base = em_base(std::abs(u)) + kBinomialTerms;
  long Mp = M;
  Mp = std::max<long>(Mp, long(std::ceil(3.0 * a)));
  Mp = std::max<long>(Mp, long(std::ceil(need_base - a)));

  CompensatedSum sum;
  for (long m = M + 1; m <= Mp; ++m) {
    const double lm = std::log(double(m));
    const double lma = std::log(double(m) + a);
    sum.add(std::exp(-s0 * lm - w * lma));
  }
  const double b = double(Mp + 1) + a;
  std::array<double, kBinomialTerms> mu{};
  const double r = a / b;
  double rp = 1.0;
  for (int j = 0; j < kBinomialTerms; ++j) {
    mu[j] = rp;
    rp *= r;
  }
  const TailValue tail = binomial_tail(s0, u, b, mu);
  sum.add(tail.value);
  return {sum.value(), tail.bound};
}

PrefixExpansion prefix_expansion(Complex s0, int P, const EvalSettings&) {
  PrefixExpansion out;
  const bool at_one = std::abs(s0 - 1.0) < 1e-13;
  if (at_one) {
    out.terms.push_back({1.0, 0.0, 1});
    out.terms.push_back({std::numbers::egamma, 0.0, 0});
    out.terms.push_back({-0.5, 1.0, 0});
    for (int p = 1; p <= P; ++p) {
      out.terms.push_back({-bernoulli(p) / (2.0 * p), double(2 * p), 0});
    }
  } else {
    const Complex zeta_s0 = hurwitz_zeta(s0, 1.0).value;
    out.terms.push_back({zeta_s0, 0.0, 0});
    out.terms.push_back({-1.0 / (s0 - 1.0), s0 - 1.0, 0});
    out.terms.push_back({-0.5, s0, 0});
    Complex poch = s0;  // (s0)_{2p-1}
    for (int p = 1; p <= P; ++p) {
      out.terms.push_back({-bernoulli_ratio(p) * poch, s0 + double(2 * p - 1), 0});
      poch *= (s0 + 2.0 * p - 1.0) * (s0 + 2.0 * p);
    }
  }
  const Complex s0_eff = at_one ? Complex(1.0) : s0;
  Complex poch = 1.0;
  for (int r = 0; r < 2 * P + 1; ++r) poch *= (s0_eff + double(r));
  const double expo = s0_eff.real() + 2.0 * P;
  out.remainder_coef = periodic_bernoulli_sup(P) * std::abs(poch) / expo;
  out.remainder_exp = expo;
  return out;
}

}  // namespace dzeta::series
