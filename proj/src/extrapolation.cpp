#include "dzeta/extrapolation.hpp"

#include <vector>

#include "dzeta/errors.hpp"

namespace dzeta {
namespace {

Complex neville(std::span<const double> h, std::span<const Complex> f) {
  std::vector<Complex> p(f.begin(), f.end());
  const std::size_t n = p.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      const double hi = h[i];
      const double hj = h[i + level];
      p[i] = (hj * p[i] - hi * p[i + 1]) / (hj - hi);
    }
  }
  return p[0];
}

}  // namespace

Extrapolated extrapolate_to_zero(std::span<const double> h, std::span<const Complex> f) {
  if (h.size() != f.size() || h.size() < 2) {
    throw InsufficientDataError("extrapolate_to_zero: need at least two points");
  }
  const Complex all = neville(h, f);
  const Complex rest = neville(h.subspan(1), f.subspan(1));
  return {all, std::abs(all - rest)};
}

}  // namespace dzeta
