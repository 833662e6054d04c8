#pragma once

#include <span>

#include "dzeta/settings.hpp"

namespace dzeta {

struct Extrapolated {
  Complex value;
  /// |P_all(0) - P_without_first(0)|: how much the coarsest sample still
  /// moves the extrapolant.
  double residual = 0.0;
};

/// Value at h = 0 of the interpolating polynomial through (h_i, f_i), by
/// Neville's scheme. Points should be ordered coarsest first.
Extrapolated extrapolate_to_zero(std::span<const double> h, std::span<const Complex> f);

}  // namespace dzeta
