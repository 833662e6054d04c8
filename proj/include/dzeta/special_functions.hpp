#pragma once

#include "dzeta/settings.hpp"

namespace dzeta {

/// Analytic continuation of log Gamma, with the branch cut along the negative
/// real axis (the branch obtained by continuing from the positive axis, as in
/// the usual `loggamma`). exp(log_gamma(z)) == Gamma(z).
/// Throws PoleError at z = 0, -1, -2, ...
Complex log_gamma(Complex z);

/// psi(z) = Gamma'(z) / Gamma(z). Throws PoleError at non-positive integers.
Complex digamma(Complex z);

/// psi'(z). Throws PoleError at non-positive integers.
Complex trigamma(Complex z);

/// Riemann zeta on Re s > 0 by Euler-Maclaurin summation. The result is
/// accurate to well below settings.tol.
/// Throws PoleError at s = 1 and DomainError for Re s <= 0.
Complex riemann_zeta(Complex s, const EvalSettings& settings = {});

/// Euler's constant.
double euler_gamma();

}  // namespace dzeta
