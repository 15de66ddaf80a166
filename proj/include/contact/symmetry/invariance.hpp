#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "contact/complexify/field.hpp"
#include "contact/geometry/forms.hpp"
#include "contact/symmetry/action.hpp"

namespace contact::symmetry {

struct InvarianceResidual {
  double max = 0.0;
  std::size_t evaluations = 0;
};

/// max |f(ψ_g p) − f(p)| for a field on the tube (or on M when tube = false).
inline InvarianceResidual invariance_residual(const Action& action, const complexify::Field& f, std::span<const geometry::Point> samples,
                                              std::span<const Element> elements, bool tube = true) {
  InvarianceResidual r;
  for (const auto& p : samples) {
    const double base = f.value(p.chart, p.coords);
    for (const auto& g : elements) {
      const auto q = action.move(p.chart, p.coords, g, tube);
      r.max = std::max(r.max, std::abs(f.value(p.chart, q) - base));
      ++r.evaluations;
    }
  }
  return r;
}

/// Coefficient-wise max |ψ_g*α − α| for a one-form on M.
inline InvarianceResidual invariance_residual(const Action& action, const geometry::OneForm& alpha, std::span<const geometry::Point> samples,
                                              std::span<const Element> elements) {
  InvarianceResidual r;
  for (const auto& p : samples) {
    const Vec a = alpha.value(p);
    for (const auto& g : elements) {
      const auto map = action.map(p.chart, g);
      const Vec moved = geometry::pullback(map, alpha.coefficients(p.chart), p.coords);
      r.max = std::max(r.max, (moved - a).cwiseAbs().maxCoeff());
      ++r.evaluations;
    }
  }
  return r;
}

}  // namespace contact::symmetry
