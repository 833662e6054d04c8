#include "dzeta/settings.hpp"

#include <cmath>

#include "dzeta/errors.hpp"

namespace dzeta {

void EvalSettings::validate() const {
  if (m_cutoff < 2 || n_cutoff < 2 || k_cutoff < 2) {
    throw DomainError("EvalSettings: cutoffs must be >= 2");
  }
  if (!(tol > 0.0)) throw DomainError("EvalSettings: tol must be > 0");
  if (!(singular_radius > 0.0)) throw DomainError("EvalSettings: singular_radius must be > 0");
  if (!(s0_one_radius > 0.0)) throw DomainError("EvalSettings: s0_one_radius must be > 0");
  if (!(contour_half_height > 0.0) || !std::isfinite(contour_half_height)) {
    throw DomainError("EvalSettings: contour_half_height must be positive");
  }
}

std::string_view to_string(Route r) {
  switch (r) {
    case Route::Direct: return "Direct";
    case Route::EulerMaclaurin: return "EulerMaclaurin";
    case Route::MellinBarnes: return "MellinBarnes";
  }
  return "?";
}

}  // namespace dzeta
