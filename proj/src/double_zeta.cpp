#include "dzeta/double_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "dzeta/errors.hpp"
#include "dzeta/series.hpp"
#include "dzeta/special_functions.hpp"

namespace dzeta {
namespace {

constexpr int kPrefixTerms = 8;

// Direct k-range large enough for the prefix expansion and for the Hurwitz
// tails to start at their Euler-Maclaurin base without extra direct terms.
long direct_cutoff(const EvalSettings& settings, double tail_arg_abs, Complex s0) {
  long K = std::max<long>(settings.k_cutoff, 64);
  K = std::max<long>(K, long(std::ceil(4.0 * (std::abs(s0) + 2.0 * kPrefixTerms))));
  K = std::max<long>(K, long(std::ceil(series::em_base(tail_arg_abs))));
  return K;
}

// sum_{k > K} k^{-x} for real x > 1.
double real_power_tail(double x, long K) {
  const double b = double(K) + 1.0;
  return std::pow(b, 1.0 - x) / (x - 1.0) + std::pow(b, -x);
}

}  // namespace

bool absolutely_convergent(const ArgumentPair& p) {
  return p.s.real() > 1.0 && (p.s0 + p.s).real() > 2.0;
}

EvalResult zeta2_direct(const ArgumentPair& p, const EvalSettings& settings) {
  settings.validate();
  if (!absolutely_convergent(p)) {
    throw DomainError("zeta2_direct: requires Re s > 1 and Re(s0 + s) > 2");
  }
  const Complex s0 = p.s0;
  const Complex s = p.s;
  const long K = direct_cutoff(settings, std::abs(s) + std::abs(s0) + 2.0 * kPrefixTerms + 1.0, s0);

  series::CompensatedSum prefix;
  series::CompensatedSum total;
  for (long k = 2; k <= K; ++k) {
    const double lkm1 = std::log(double(k - 1));
    prefix.add(series::pow_from_log(lkm1, -s0));
    total.add(prefix.value() * series::pow_from_log(std::log(double(k)), -s));
  }

  const series::PrefixExpansion ex = series::prefix_expansion(s0, kPrefixTerms, settings);
  double bound = 0.0;
  for (const auto& term : ex.terms) {
    const series::TailValue t =
        series::hurwitz_log_moment(s + term.exponent, double(K + 1), term.log_power);
    total.add(term.coef * t.value);
    bound += std::abs(term.coef) * t.bound;
  }
  bound += ex.remainder_coef * real_power_tail(s.real() + ex.remainder_exp, K);

  if (bound > settings.tol) {
    std::ostringstream msg;
    msg << "zeta2_direct: truncation bound " << bound << " exceeds tol at K=" << K;
    throw ConvergenceError(msg.str());
  }
  return {total.value(), bound, Route::Direct, K};
}

EvalResult zeta2_sq(Complex s0, Complex w, const EvalSettings& settings) {
  settings.validate();
  const double sig0 = s0.real();
  const double wr = w.real();
  const bool ok = (sig0 >= 1.0 && wr > 1.0) || (sig0 < 1.0 && 2.0 * sig0 + wr > 3.0);
  if (!ok) {
    throw DomainError(
        "zeta2_sq: requires Re s0 >= 1, Re w > 1 or Re s0 < 1, 2 Re s0 + Re w > 3");
  }
  const long K = direct_cutoff(
      settings, std::abs(w) + 2.0 * std::abs(s0) + 4.0 * kPrefixTerms + 2.0, s0);
  const bool real_w = w.imag() == 0.0;

  series::CompensatedSum prefix;
  series::CompensatedSum total;
  for (long k = 2; k <= K; ++k) {
    prefix.add(series::pow_from_log(std::log(double(k - 1)), -s0));
    const double mag2 = std::norm(prefix.value());
    const double lk = std::log(double(k));
    if (real_w) {
      total.add(mag2 * std::exp(-wr * lk));
    } else {
      total.add(mag2 * series::pow_from_log(lk, -w));
    }
  }

  const series::PrefixExpansion ex = series::prefix_expansion(s0, kPrefixTerms, settings);
  const auto& terms = ex.terms;
  double bound = 0.0;
  const double b = double(K + 1);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i; j < terms.size(); ++j) {
      const auto& ti = terms[i];
      const auto& tj = terms[j];
      const int lp = ti.log_power + tj.log_power;
      const series::TailValue a = series::hurwitz_log_moment(
          w + ti.exponent + std::conj(tj.exponent), b, lp);
      const Complex va = ti.coef * std::conj(tj.coef) * a.value;
      double bnd = std::abs(ti.coef * tj.coef) * a.bound;
      if (i == j) {
        total.add(real_w ? Complex(va.real(), 0.0) : va);
      } else if (real_w) {
        total.add(2.0 * va.real());
        bnd *= 2.0;
      } else {
        const series::TailValue c = series::hurwitz_log_moment(
            w + tj.exponent + std::conj(ti.exponent), b, lp);
        total.add(va + tj.coef * std::conj(ti.coef) * c.value);
        bnd += std::abs(ti.coef * tj.coef) * c.bound;
      }
      bound += bnd;
    }
  }
  // |H|^2 - |H_hat|^2 <= 2 |H_hat| R + R^2 with R = remainder_coef k^{-remainder_exp};
  // |H_hat| grows at most like k^{max(0, 1 - sig0)} log k.
  const double growth = std::max(0.0, 1.0 - sig0);
  double hmax = 0.0;
  for (const auto& t : terms) {
    hmax += std::abs(t.coef) * std::pow(b, growth - t.exponent.real()) *
            std::pow(std::log(b) + 1.0, t.log_power);
  }
  bound += 3.0 * (hmax + 1.0) * (std::log(b) + 1.0) * ex.remainder_coef *
           real_power_tail(wr + ex.remainder_exp - growth, K);

  if (bound > settings.tol) {
    std::ostringstream msg;
    msg << "zeta2_sq: truncation bound " << bound << " exceeds tol at K=" << K;
    throw ConvergenceError(msg.str());
  }
  Complex value = total.value();
  return {value, bound, Route::Direct, K};
}

double stuffle_residual(Complex s0, Complex s, const EvalSettings& settings) {
  const ArgumentPair forward{s0, s};
  const ArgumentPair backward{s, s0};
  if (!absolutely_convergent(forward) || !absolutely_convergent(backward)) {
    throw DomainError("stuffle_residual: both orderings must converge absolutely");
  }
  const Complex lhs = riemann_zeta(s0, settings) * riemann_zeta(s, settings);
  const Complex rhs = zeta2_direct(forward, settings).value +
                      zeta2_direct(backward, settings).value +
                      riemann_zeta(s0 + s, settings);
  return std::abs(lhs - rhs);
}

}  // namespace dzeta
