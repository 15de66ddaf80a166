#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "contact/complexify.hpp"
#include "contact/potential/partition.hpp"

namespace contact::potential {

struct SweepResult {
  FieldPtr rho;
  double lambda = 0.0;
  double radius = 0.0;
  complexify::SpshReport spsh;
  bool pass = false;
};

/// Raises λ through start, 2·start, 4·start, …, max_lambda until ρ + λν is strictly
/// plurisubharmonic on the tube samples; if no λ works, halves the tube
/// radius (at most `halvings` times) and retries. The last attempt is
/// returned with pass = false when nothing succeeds.
inline SweepResult sweep_lambda(const FieldPtr& rho, const FieldPtr& nu, double radius,
                                const std::function<std::vector<Point>(double radius)>& samples, double threshold = 0.0,
                                double max_lambda = 64.0, int halvings = 3, double start_lambda = 1.0,
                                const std::function<complexify::BoxOf(double radius)>& refine_in = {}) {
  if (!(start_lambda > 0.0)) throw std::invalid_argument("sweep_lambda: starting λ must be positive");
  SweepResult last;
  for (int h = 0; h <= halvings; ++h, radius *= 0.5) {
    const auto pts = samples(radius);
    for (double lambda = start_lambda; lambda <= max_lambda; lambda *= 2.0) {
      auto f = convexify(rho, nu, lambda);
      auto report = complexify::spsh_check(*f, pts);
      // Only a passing sample set is worth refining.
      if (refine_in && report.min_eigenvalue > threshold) report = complexify::spsh_check_refined(*f, pts, refine_in(radius));
      last = {f, lambda, radius, report, report.min_eigenvalue > threshold};
      if (last.pass) return last;
    }
  }
  return last;
}

}  // namespace contact::potential
