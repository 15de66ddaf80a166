#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "contact/geometry.hpp"
#include "contact/symmetry.hpp"

namespace contact::reduction {

using expr::Expression;
using geometry::Chart;
using geometry::OneForm;
using geometry::Point;
using symmetry::Action;

/// μ⁻¹(0)/G realized through a declared cross-section. The level set is
/// parameterized by `level`; `section` and `projection` relate it to the
/// reduced base coordinates.
struct Quotient {
  Chart base;
  std::size_t chart = 0;             // chart of M containing the level set
  Chart level_params;
  std::vector<Expression> level;      // level_params → M chart
  std::vector<Expression> section;    // base → M chart
  std::vector<Expression> projection; // M chart → base

  /// The identity quotient of one chart (trivial group).
  static Quotient trivial(const Chart& m, std::size_t chart = 0) {
    std::vector<Expression> id;
    for (std::size_t i = 0; i < m.dim(); ++i) id.push_back(expr::variable(m.scope(), i));
    return {m, chart, m, id, id, id};
  }
};

namespace detail {

/// a − b, with periodic coordinates compared on the circle.
inline Vec chart_difference(const Chart& c, std::span<const double> a, std::span<const double> b) {
  Vec d(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    double v = a[i] - b[i];
    if (i < c.dim() && c.box()[i].periodic) v = std::remainder(v, geometry::kTwoPi);
    d(static_cast<Eigen::Index>(i)) = v;
  }
  return d;
}

}  // namespace detail

/// max |π(σ(b)) − b| over base samples.
inline double section_residual(const Quotient& q, std::span<const std::vector<double>> base_samples) {
  double worst = 0.0;
  for (const auto& b : base_samples) {
    const auto back = expr::evaluate_all(q.projection, expr::evaluate_all(q.section, b));
    worst = std::max(worst, detail::chart_difference(q.base, back, b).cwiseAbs().maxCoeff());
  }
  return worst;
}

/// Distance from ψ_g(p) to `target`, minimized over g: all elements of a
/// finite group, Gauss–Newton over the parameters of an abelian continuous
/// group (∂ψ_g(p)/∂g_a = ξ_a(ψ_g(p))).
inline double orbit_distance(const Action& action, const Chart& chart, const Point& p, std::span<const double> target, bool tube = false,
                             int iterations = 30) {
  const auto& g = action.group();
  if (!g.continuous()) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t order = g.kind() == symmetry::GroupKind::Trivial ? 1 : g.order();
    for (std::size_t e = 0; e < order; ++e) {
      const auto moved = g.kind() == symmetry::GroupKind::Trivial ? p.coords : action.move(p.chart, p.coords, {static_cast<double>(e)}, tube);
      best = std::min(best, detail::chart_difference(chart, target, moved).cwiseAbs().maxCoeff());
    }
    return best;
  }
  symmetry::Element e = g.identity();
  const auto basis = action.lie_basis();
  double dist = std::numeric_limits<double>::infinity();
  for (int it = 0; it < iterations; ++it) {
    const auto moved = action.move(p.chart, p.coords, e, tube);
    const Vec r = detail::chart_difference(chart, target, moved);
    dist = r.cwiseAbs().maxCoeff();
    if (dist < 1e-14) break;
    Mat jac(r.size(), static_cast<Eigen::Index>(basis.size()));
    for (std::size_t a = 0; a < basis.size(); ++a) jac.col(static_cast<Eigen::Index>(a)) = action.generator(p.chart, moved, basis[a], tube).value;
    const Vec step = jac.completeOrthogonalDecomposition().solve(r);
    if (!step.allFinite() || step.norm() < 1e-16) break;
    for (std::size_t a = 0; a < e.size(); ++a) e[a] += step(static_cast<Eigen::Index>(a));
  }
  return dist;
}

/// max over level samples of the distance from σ(π(p)) to the orbit of p.
inline double orbit_residual(const Quotient& q, const Action& action, const Chart& m_chart, std::span<const Point> level_samples) {
  double worst = 0.0;
  for (const auto& p : level_samples) {
    const auto rep = expr::evaluate_all(q.section, expr::evaluate_all(q.projection, p.coords));
    worst = std::max(worst, orbit_distance(action, m_chart, p, rep));
  }
  return worst;
}

/// Level-set points for the given parameter samples.
inline std::vector<Point> level_points(const Quotient& q, std::span<const std::vector<double>> params) {
  std::vector<Point> out;
  for (const auto& s : params) out.push_back({q.chart, expr::evaluate_all(q.level, s)});
  return out;
}

}  // namespace contact::reduction
