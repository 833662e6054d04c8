#pragma once

#include <string>

#include "dzeta/settings.hpp"

namespace dzeta {

enum class RegionClass { AbsolutelyConvergent, EMStrip, MBStrip, Singular, OutOfDomain };

std::string_view to_string(RegionClass r);

/// Singular points are checked first: within settings.singular_radius of
/// s = 1 or of s0 + s in {2, 1, 0, -1, ...}. Otherwise the first matching
/// region among
///   AbsolutelyConvergent  Re s > 1, Re(s0 + s) > 2
///   EMStrip               Re s > 0, Re(s0 + s) > 2
///   MBStrip               0 < Re s0 < 3/2, Re s > 1/2, Re(s0 + s) > 1
RegionClass classify_region(const ArgumentPair& p, const EvalSettings& settings);

/// Machine-readable reason for a Singular classification, e.g.
/// "singular locus s0+s=2" or "pole s=1"; empty when not singular.
std::string singular_reason(const ArgumentPair& p, const EvalSettings& settings);

/// int_a^inf (y - [y] - 1/2) y^{-s-1} dy for a >= 1, Re s > 0. Exact
/// antiderivatives on each unit interval up to a + max(200, 2|s|), then the
/// periodic-Bernoulli tail.
Complex em_sawtooth_integral(double a, Complex s);

/// The four pieces of zeta_2 = A1 - A2 - A3 - A4 at split N:
///   A1 = sum_m m^{-s0} sum_{n<=N} (m+n)^{-s}
///   A2 = (1-s)^{-1} sum_m m^{-s0} (m+N)^{1-s}
///   A3 = s sum_m m^{-s0} int_{m+N}^inf (y-[y]-1/2) y^{-s-1} dy
///   A4 = 1/2 sum_m m^{-s0} (m+N)^{-s}
/// bound is the sum of the certified truncation bounds of the four pieces.
/// A2 requires Re(s0 + s) > 2; pass with_a2 = false to skip it.
struct EMParts {
  Complex a1, a2, a3, a4;
  double bound = 0.0;
  long terms = 0;
};
EMParts em_parts(Complex s0, Complex s, long N, const EvalSettings& settings,
                 bool with_a2 = true);

/// sum_m m^{-s0} sum_{n<=N} (m+n)^{-s}; requires Re(s0 + s) > 1.
Complex truncated_double_sum(Complex s0, Complex s, long N, const EvalSettings& settings,
                             double* bound = nullptr);

/// (1-s)^{-1} sum_m m^{-s0} (m+x)^{1-s} for real x >= 0; requires
/// Re(s0 + s) > 2.
Complex shifted_power_sum(Complex s0, Complex s, double x, const EvalSettings& settings,
                          double* bound = nullptr);

/// zeta_2 by A1 - A2 - A3 - A4. Valid on AbsolutelyConvergent and EMStrip.
EvalResult zeta2_em(const ArgumentPair& p, long N, const EvalSettings& settings);

/// (2 pi i)^{-1} int_{(c)} Gamma(s+z) Gamma(-z) / Gamma(s) lambda^z dz, which
/// equals (1 + lambda)^{-s}. Requires Re s > 0, lambda != 0,
/// |arg lambda| < pi and -Re s < c < 0.
Complex mellin_barnes_pow(Complex lambda, Complex s, double c, const EvalSettings& settings);

struct GDecomposition {
  Complex r1, r2, r3;
  double x = 0.0;
  /// Real part of the integration line for r3 (1/2 unless the pole at
  /// z = s0 - 1 is too close to it).
  double contour = 0.5;
  double r3_truncation_bound = 0.0;
  double r3_quadrature_error = 0.0;
  /// True when r1 + r2 came from the digamma formula near s0 = 1.
  bool digamma_branch = false;

  Complex value() const { return r1 + r2 + r3; }
};

/// g(s0, s; x) = (1-s)^{-1} int_1^inf y^{-s0} (y+x)^{1-s} dy continued by
/// the Mellin-Barnes integral on Re z = 1/2:
///   r1 = x^{1-s} / ((1-s)(s0-1))
///   r2 = x^{1-s} Gamma(s+s0-2) Gamma(1-s0) / ((1-s) Gamma(s-1) x^{s0-1})
///   r3 = x^{1-s} / ((1-s) 2 pi i) int Gamma(s-1+z) Gamma(-z) x^{-z}
///        / (Gamma(s-1) (s0-1-z)) dz
/// Inside |s0 - 1| < settings.s0_one_radius, r1 + r2 is taken from
/// x^{1-s} (1-s)^{-1} (log x - gamma - psi(s-1)) continued in s0 - 1, and
/// r2 = 0. Requires 0 < Re s0 < 3/2, Re s > 1/2, x >= 1.
GDecomposition g_function(Complex s0, Complex s, double x, const EvalSettings& settings);

/// Y2 + Y3 with
///   Y2 = (1-s)^{-1} int_1^inf (y-[y]-1/2) d/dy[y^{-s0} (y+x)^{1-s}] dy
///   Y3 = (1+x)^{1-s} / (2 (1-s))
/// so that g + Y2 + Y3 = (1-s)^{-1} sum_m m^{-s0} (m+x)^{1-s} wherever the
/// sum converges.
Complex y23_terms(Complex s0, Complex s, double x, const EvalSettings& settings);

/// zeta_2 by A1 - (g + Y2 + Y3) - A3 - A4 at split N = floor(x), with g, Y2
/// and Y3 taken at x = N. Valid for Re s > 1/2, Re(s0 + s) > 1 off the
/// singular locus; this covers MBStrip and the parts of the other regions
/// with Re s > 1/2.
EvalResult zeta2_mb(const ArgumentPair& p, double x, const EvalSettings& settings);

/// Dispatch on classify_region: Direct, EulerMaclaurin with N = n_cutoff,
/// or MellinBarnes with x = n_cutoff.
EvalResult zeta2_eval(const ArgumentPair& p, const EvalSettings& settings);

/// lim_{s -> 1} (s - 1) zeta_2(s0, s), extrapolated from s = 1 + delta,
/// delta = 10^{-1}, ..., 10^{-4}. Requires Re s0 > 1.
Complex residue_at_s1(Complex s0, const EvalSettings& settings);

}  // namespace dzeta
