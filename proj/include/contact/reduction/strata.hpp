#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "contact/reduction/contact.hpp"
#include "contact/reduction/kahler.hpp"

namespace contact::reduction {

/// One orbit-type stratum M_(H) with the data to reduce it by L = N(H)/H.
/// Membership is `zero_set` = 0 (an expression on the M chart); the stratum
/// without a zero set is the complement of the others.
struct Stratum {
  std::string label;  // conjugacy label of H
  Expression zero_set;
  bool level_empty = false;     // M_(H) ∩ μ⁻¹(0) is expected to be empty
  Quotient quotient;            // reduction of M_H ∩ μ⁻¹(0)
  HolomorphicQuotient complex;  // the complex stratum; slice is its tube section
};

struct IsotropyReport {
  std::size_t mismatches = 0;
  std::size_t samples = 0;
};

inline const Stratum* expected_stratum(std::span<const Stratum> strata, std::span<const double> x, double tol = 1e-12) {
  const Stratum* rest = nullptr;
  for (const auto& s : strata) {
    if (!s.zero_set.valid()) {
      rest = &s;
      continue;
    }
    if (std::abs(expr::evaluate(s.zero_set, x)) <= tol) return &s;
  }
  return rest;
}

/// Compares the computed stabilizer class with the declared strata.
inline IsotropyReport isotropy_check(const Action& action, std::span<const Stratum> strata, std::span<const Point> samples) {
  IsotropyReport r;
  for (const auto& p : samples) {
    const auto* want = expected_stratum(strata, p.coords);
    const auto got = symmetry::conjugacy_label(action.group(), symmetry::isotropy(action, p));
    if (!want || want->label != got) ++r.mismatches;
    ++r.samples;
  }
  return r;
}

struct StratumReport {
  std::string label;
  bool empty = false;
  double empty_margin = 0.0;  // min |μ| over stratum samples, when expected empty
  double contact_min = std::numeric_limits<double>::infinity();
  double totally_real_min = std::numeric_limits<double>::infinity();
  double pullback = 0.0;     // |ι* d^cρ_red − η_red|
  double vanishing = 0.0;    // |ρ_red| on the reduced stratum
  double certificate = 0.0;  // π*η_red = ι*η on the stratum level
  double orbit = 0.0;        // σ(π(p)) lies on the L-orbit of p
  std::size_t samples = 0;
};

/// Reduces one stratum and evaluates the three piecewise-contact
/// conditions: the reduced form is contact, the stratum is totally real in
/// its complex stratum, and ι*d^c(ρ restricted) equals the reduced form.
/// For a stratum marked empty, only the emptiness of M_(H) ∩ μ⁻¹(0) is
/// confirmed on `m_samples` (points of the stratum).
inline StratumReport reduce_stratum(const Stratum& s, const OneForm& eta, const FieldPtr& rho, const Action& action, const std::vector<Expression>& mu,
                                    std::span<const std::vector<double>> base_samples, std::span<const std::vector<double>> level_params,
                                    std::span<const Point> m_samples) {
  StratumReport r;
  r.label = s.label;
  if (s.level_empty) {
    r.empty = true;
    r.empty_margin = std::numeric_limits<double>::infinity();
    for (const auto& p : m_samples) {
      double worst = 0.0;
      for (const auto& m : mu) worst = std::max(worst, std::abs(expr::evaluate(m, p.coords)));
      r.empty_margin = std::min(r.empty_margin, worst);
      ++r.samples;
    }
    return r;
  }
  const auto red = contact_reduce(eta, s.quotient);
  r.certificate = defining_residual(eta, s.quotient, red.eta_red, level_params);
  r.orbit = orbit_residual(s.quotient, action, action.base_chart(s.quotient.chart), level_points(s.quotient, level_params));

  const auto rho_red = complexify::make_pullback(rho, {{s.complex.chart, s.complex.slice}});
  const auto compat = compatibility_check(*rho_red, s.complex, red.eta_red, base_samples);
  r.pullback = compat.form;
  r.vanishing = compat.vanishing;

  const auto m = s.quotient.base.dim();
  for (const auto& b : base_samples) {
    r.contact_min = std::min(r.contact_min, std::abs(geometry::wedge_top(red.eta_red.value(0, b), geometry::exterior_derivative(red.eta_red.coefficients(0), b))));
    // Tangent of the stratum inside M^c: D(slice∘embedding) at b.
    const auto seeds = expr::seed_jets(b);
    const auto q = expr::evaluate_all_jets(s.complex.embedding, seeds);
    const auto z = expr::evaluate_all_jets(s.complex.slice, q);
    Mat t(static_cast<Eigen::Index>(z.size()), static_cast<Eigen::Index>(m));
    for (std::size_t a = 0; a < z.size(); ++a) t.row(static_cast<Eigen::Index>(a)) = gradient_of(z[a], m).transpose();
    Mat both(t.rows(), 2 * t.cols());
    both << t, complexify::complex_structure(static_cast<std::size_t>(t.rows()) / 2) * t;
    for (Eigen::Index c = 0; c < both.cols(); ++c) both.col(c).normalize();
    r.totally_real_min = std::min(r.totally_real_min, smallest_singular_value(both));
    ++r.samples;
  }
  return r;
}

}  // namespace contact::reduction
