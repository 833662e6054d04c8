#pragma once

#include <span>

namespace dzeta::fit {

struct Line {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares y = slope * x + intercept. Throws
/// InsufficientDataError for fewer than two distinct x.
Line least_squares(std::span<const double> x, std::span<const double> y);

}  // namespace dzeta::fit
