#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "dzeta/settings.hpp"

// Building blocks shared by the evaluators: compensated accumulation, the
// Euler-Maclaurin Hurwitz sums with logarithmic weights, and the binomial
// re-expansion that turns power tails into Hurwitz sums.

namespace dzeta::series {

/// Number of Bernoulli terms used in Euler-Maclaurin tails.
inline constexpr int kBernoulliTerms = 12;

/// B_{2p} / (2p)! for p = 1 .. 15 (index p - 1).
double bernoulli_ratio(int p);

/// B_{2p} for p = 1 .. 15.
double bernoulli(int p);

/// Neumaier-compensated complex sum.
class CompensatedSum {
 public:
  void add(Complex x) {
    add_part(re_, cre_, x.real());
    add_part(im_, cim_, x.imag());
  }
  CompensatedSum& operator+=(Complex x) {
    add(x);
    return *this;
  }
  Complex value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double re_ = 0.0, cre_ = 0.0, im_ = 0.0, cim_ = 0.0;
};

/// exp(z) - 1 without cancellation for small |z|.
Complex expm1(Complex z);

/// b^w for real b > 0 given log b.
inline Complex pow_from_log(double log_b, Complex w) {
  return std::exp(w * log_b);
}

struct TailValue {
  Complex value;
  double bound = 0.0;  // bound on the truncation error, >= 0
};

/// Sum_{k >= 0} (log(a + k))^l (a + k)^{-u} for l in {0, 1, 2}, continued
/// analytically in u by Euler-Maclaurin. Direct terms are added until the
/// Euler-Maclaurin base exceeds |u| + const, so any a > 0 is accepted.
/// Throws PoleError at u = 1.
TailValue hurwitz_log_moment(Complex u, double a, int l);

inline TailValue hurwitz_zeta(Complex u, double a) {
  return hurwitz_log_moment(u, a, 0);
}

/// Smallest Euler-Maclaurin base for which the tails in this namespace meet
/// double precision at exponent magnitude `u_abs`.
double em_base(double u_abs);

/// Sum_{k >= b} k^{-u} Sum_i (1 - d_i/k)^{-s0}, with the shifts supplied as
/// power moments mu_j = Sum_i (d_i / b)^j (requires every d_i <= b/4 and
/// b >= em_base(|u|) + kBinomialTerms). Used for both the window tail of
/// A1-type double sums and the shifted power tails below.
TailValue binomial_tail(Complex s0, Complex u, double b,
                        std::span<const double> moments);

/// Max number of binomial terms used by binomial_tail.
inline constexpr int kBinomialTerms = 64;

/// Sum_{m > M} m^{-s0} (m + a)^{-w} for a >= 0. M is raised internally (with
/// direct summation) until the binomial re-expansion converges quickly.
TailValue shifted_power_tail(Complex s0, Complex w, double a, long M);

/// Coefficients of the large-k expansion of H_{k-1}(s0) = Sum_{m<k} m^{-s0}:
///   H_{k-1}(s0) ~ Sum_i coef_i k^{-exponent_i} (log k)^{log_power_i}.
struct PowerLogTerm {
  Complex coef;
  Complex exponent;
  int log_power = 0;
};

struct PrefixExpansion {
  std::vector<PowerLogTerm> terms;
  /// Remainder |H_{k-1} - expansion| <= remainder_coef * k^{-remainder_exp}.
  double remainder_coef = 0.0;
  double remainder_exp = 0.0;
};

/// Valid for k >= 64 and k >= 4 (|s0| + 2 * terms). s0 == 1 uses the
/// log k + gamma expansion.
PrefixExpansion prefix_expansion(Complex s0, int bernoulli_terms,
                                 const EvalSettings& settings);

}  // namespace dzeta::series
