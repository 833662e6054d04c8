#include "dzeta/special_functions.hpp"

#include <cmath>
#include <numbers>

#include "dzeta/errors.hpp"
#include "dzeta/series.hpp"

namespace dzeta {
namespace {

constexpr int kStirlingTerms = 10;
constexpr double kStirlingRadius = 10.0;

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Stirling's series needs Re w >= 0 and |w| >= 10 for double precision; the
// error factor sec(arg w / 2)^(2K) stays below 2^K in that half plane.
bool needs_shift(Complex w) {
  return w.real() < 0.0 || std::abs(w) < kStirlingRadius;
}

}  // namespace

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("log_gamma: pole at non-positive integer");
  }
  series::CompensatedSum shift;
  Complex w = z;
  while (needs_shift(w)) {
    shift.add(std::log(w));
    w += 1.0;
  }
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex corr = 0.0;
  Complex pw = inv;
  for (int k = 1; k <= kStirlingTerms; ++k) {
    corr += series::bernoulli(k) / (2.0 * k * (2.0 * k - 1.0)) * pw;
    pw *= inv2;
  }
  const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (w - 0.5) * std::log(w) - w + half_log_2pi + corr - shift.value();
}

Complex digamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("digamma: pole at non-positive integer");
  }
  series::CompensatedSum shift;
  Complex w = z;
  while (needs_shift(w)) {
    shift.add(1.0 / w);
    w += 1.0;
  }
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex corr = 0.0;
  Complex pw = inv2;
  for (int k = 1; k <= kStirlingTerms; ++k) {
    corr += series::bernoulli(k) / (2.0 * k) * pw;
    pw *= inv2;
  }
  return std::log(w) - 0.5 * inv - corr - shift.value();
}

Complex trigamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("trigamma: pole at non-positive integer");
  }
  series::CompensatedSum shift;
  Complex w = z;
  while (needs_shift(w)) {
    shift.add(1.0 / (w * w));
    w += 1.0;
  }
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex corr = 0.0;
  Complex pw = inv2 * inv;
  for (int k = 1; k <= kStirlingTerms; ++k) {
    corr += series::bernoulli(k) * pw;
    pw *= inv2;
  }
  return inv + 0.5 * inv2 + corr + shift.value();
}

Complex riemann_zeta(Complex s, const EvalSettings& settings) {
  (void)settings;
  if (s == Complex(1.0, 0.0)) {
    throw PoleError("riemann_zeta: pole at s = 1");
  }
  if (s.real() <= 0.0) {
    throw DomainError("riemann_zeta: requires Re s > 0");
  }
  return series::hurwitz_zeta(s, 1.0).value;
}

double euler_gamma() { return std::numbers::egamma; }

}  // namespace dzeta
