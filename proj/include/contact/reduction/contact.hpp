#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "contact/reduction/quotient.hpp"

namespace contact::reduction {

struct ReducedContact {
  OneForm eta_red;  // on the single chart q.base
};

/// η_red = σ*(η).
inline ReducedContact contact_reduce(const OneForm& eta, const Quotient& q) {
  return {OneForm({geometry::pullback(q.section, eta.coefficients(q.chart))})};
}

/// Defining property π*η_red = ι*η, compared on the tangent spaces of the
/// level set through its parameterization: max |L*(π*η_red) − L*η| over
/// parameter samples.
inline double defining_residual(const OneForm& eta, const Quotient& q, const OneForm& eta_red, std::span<const std::vector<double>> params) {
  const auto through_base = geometry::pullback(q.projection, eta_red.coefficients(0));  // π*η_red on the M chart
  double worst = 0.0;
  for (const auto& s : params) {
    const Vec lhs = geometry::pullback(q.level, through_base, s);
    const Vec rhs = geometry::pullback(q.level, eta.coefficients(q.chart), s);
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

/// η_red + ε·db_i.
inline OneForm perturb(const OneForm& eta_red, const Chart& base, double eps, std::size_t coordinate = 0) {
  auto c = eta_red.coefficients(0);
  c.at(coordinate) = c[coordinate] + expr::constant(base.scope(), eps);
  return OneForm({c});
}

/// max |η_red − expected| coefficient-wise at base samples.
inline double form_residual(const OneForm& a, const OneForm& b, std::span<const std::vector<double>> base_samples) {
  double worst = 0.0;
  for (const auto& x : base_samples) worst = std::max(worst, (a.value(0, x) - b.value(0, x)).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace contact::reduction
