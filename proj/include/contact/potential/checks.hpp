#pragma once

#include <algorithm>
#include <cmath>
#include <span>

#include "contact/complexify.hpp"

namespace contact::potential {

struct ExtensionResidual {
  double vanishing = 0.0;  // max |ρ| on M
  double pullback = 0.0;   // max |ι* d^cρ − η| on M
  std::size_t samples = 0;
};

/// Checks ρ|_M = 0 and ι*_M d^cρ = η at points of M. The pullback of d^cρ to
/// y = 0 has components d^cρ(∂x_j) = ∂ρ/∂y_j.
inline ExtensionResidual extension_residual(const complexify::Field& rho, const complexify::TubeComplexification& tube,
                                            const geometry::OneForm& eta, std::span<const geometry::Point> m_samples) {
  ExtensionResidual r;
  for (const auto& p : m_samples) {
    const auto z = tube.embed(p);
    const auto f = complexify::local_jet(rho, z.chart, z.coords);
    const Vec pulled = complexify::dc(f).head(static_cast<Eigen::Index>(f.n));
    r.vanishing = std::max(r.vanishing, std::abs(f.value));
    r.pullback = std::max(r.pullback, (pulled - eta.value(p)).cwiseAbs().maxCoeff());
    ++r.samples;
  }
  return r;
}

}  // namespace contact::potential
