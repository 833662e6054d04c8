#include "dzeta/fit.hpp"

#include "dzeta/errors.hpp"

namespace dzeta::fit {

Line least_squares(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw InsufficientDataError("least_squares: need two points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= double(n);
  my /= double(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw InsufficientDataError("least_squares: x values coincide");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

}  // namespace dzeta::fit
