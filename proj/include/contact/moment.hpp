#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "contact/complexify.hpp"
#include "contact/symmetry.hpp"

namespace contact::moment {

using expr::Expression;
using geometry::Chart;
using geometry::Point;
using symmetry::Action;

class OffLevel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class MomentKind { Contact, Kahler, CR };

/// μ_ξ(m) = η_m(ξ_M(m)). Finite groups have no Lie algebra; callers treat
/// their moment map as empty.
inline double contact_moment(const geometry::OneForm& eta, const Action& action, std::span<const double> xi, const Point& m) {
  return eta.value(m).dot(action.generator(m.chart, m.coords, xi).value);
}

/// Components η(ξ_a) for each Lie algebra basis vector, as expressions on chart c.
inline std::vector<Expression> contact_moment_expressions(const geometry::OneForm& eta, const Action& action, std::size_t c) {
  std::vector<Expression> out;
  const auto& a = eta.coefficients(c);
  for (const auto& xi : action.lie_basis()) {
    const auto gen = action.generator_expressions(c, xi);
    Expression mu = expr::constant(action.base_chart(c).scope(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) mu = mu + a[i] * gen[i];
    out.push_back(mu);
  }
  return out;
}

/// d^cρ(ξ) at one point.
inline double kahler_moment(const complexify::LocalJet& f, const Vec& xi) { return complexify::dc(f).dot(xi); }

/// μ_ξ(x) = d^cρ(ξ_{M^c}(x)) with the tube action.
inline double kahler_moment(const complexify::Field& rho, const Action& action, std::span<const double> xi, const Point& z) {
  return kahler_moment(complexify::local_jet(rho, z.chart, z.coords), action.generator(z.chart, z.coords, xi, true).value);
}

/// dμ_ξ − ι_ξ ω at one point, with ω = −dd^cρ and dμ_ξ = H J ξ + (Dξ)ᵀ Jᵀ ∇ρ.
inline Vec hamiltonian_defect(const complexify::LocalJet& f, const symmetry::GeneratorJet& xi) {
  const Mat j = complexify::complex_structure(f.n);
  const Vec dmu = f.hess * (j * xi.value) + xi.jacobian.transpose() * (j.transpose() * f.grad);
  return dmu - complexify::kahler_form(f).transpose() * xi.value;
}

/// The Kähler moment at a point of the CR hypersurface ρ = 0, with the line
/// bundle B trivialized by d^cρ.
inline double cr_moment(const complexify::Field& rho, const Action& action, std::span<const double> xi, const Point& z, double tol = 1e-8) {
  const double level = rho.value(z.chart, z.coords);
  if (std::abs(level) > tol) throw OffLevel("point is not on the level set ρ = 0 (|ρ| = " + std::to_string(std::abs(level)) + ")");
  return kahler_moment(rho, action, xi, z);
}

struct Residual {
  double max = 0.0;
  std::size_t samples = 0;
};

/// max |dμ_ξ(v) − ω(ξ, v)| over samples and coordinate directions v.
inline Residual hamiltonian_residual(const complexify::Field& rho, const Action& action, std::span<const double> xi, std::span<const Point> samples) {
  Residual r;
  for (const auto& z : samples) {
    const auto defect = hamiltonian_defect(complexify::local_jet(rho, z.chart, z.coords), action.generator(z.chart, z.coords, xi, true));
    r.max = std::max(r.max, defect.cwiseAbs().maxCoeff());
    ++r.samples;
  }
  return r;
}

/// max |μ^Kähler(ι p) − μ^contact(p)| over points of M and basis vectors.
inline Residual extension_residual(const complexify::Field& rho, const complexify::TubeComplexification& tube, const geometry::OneForm& eta,
                                   const Action& action, std::span<const Point> m_samples) {
  Residual r;
  const auto basis = action.lie_basis();
  for (const auto& p : m_samples) {
    const auto z = tube.embed(p);
    for (const auto& xi : basis) r.max = std::max(r.max, std::abs(kahler_moment(rho, action, xi, z) - contact_moment(eta, action, xi, p)));
    ++r.samples;
  }
  return r;
}

/// max |μ_ξ(ψ_g x) − μ_ξ(x)|; the coadjoint action is trivial for the
/// abelian groups supported here.
inline Residual equivariance_residual(const complexify::Field& rho, const Action& action, std::span<const Point> samples,
                                      std::span<const symmetry::Element> elements) {
  Residual r;
  const auto basis = action.lie_basis();
  for (const auto& z : samples) {
    for (const auto& xi : basis) {
      const double base = kahler_moment(rho, action, xi, z);
      for (const auto& g : elements) {
        const Point moved{z.chart, action.move(z.chart, z.coords, g, true)};
        r.max = std::max(r.max, std::abs(kahler_moment(rho, action, xi, moved) - base));
      }
    }
    ++r.samples;
  }
  return r;
}

/// d/dt ρ(exp(itζ)·p) at t = 0 for tube points p. Uses the declared
/// imaginary flow when present, otherwise the generator Jξ of the
/// holomorphic extension.
inline double imaginary_derivative(const complexify::Field& rho, const Action& action, std::span<const double> xi, const Point& z) {
  const auto f = complexify::local_jet(rho, z.chart, z.coords);
  const Vec direction = action.has_imaginary() ? action.generator(z.chart, z.coords, xi, true, true).value
                                               : Vec(complexify::complex_structure(f.n) * action.generator(z.chart, z.coords, xi, true).value);
  return f.grad.dot(direction);
}

/// max over samples and basis vectors of |d/dt ρ(exp(itζ)·p)|; vanishes
/// exactly where p lies in the zero level of the Kähler moment map.
inline Residual tangency_residual(const complexify::Field& rho, const Action& action, std::span<const Point> samples) {
  Residual r;
  const auto basis = action.lie_basis();
  for (const auto& z : samples) {
    for (const auto& xi : basis) r.max = std::max(r.max, std::abs(imaginary_derivative(rho, action, xi, z)));
    ++r.samples;
  }
  return r;
}

struct ZeroLevel {
  std::vector<Point> points;
  double max_residual = 0.0;  // max |μ_a| over the returned points
  bool empty = false;
};

/// Samples μ⁻¹(0) through a parameterization q ↦ P(q) into chart `chart`.
/// Throws OffLevel if some image misses the level by more than `tol`.
inline ZeroLevel zero_level(const std::vector<Expression>& mu, std::size_t chart, const std::vector<Expression>& parameterization,
                            std::span<const std::vector<double>> params, double tol = 1e-10) {
  ZeroLevel out;
  for (const auto& q : params) {
    Point p{chart, expr::evaluate_all(parameterization, q)};
    for (const auto& m : mu) {
      const double v = std::abs(expr::evaluate(m, p.coords));
      if (v > tol) throw OffLevel("parameterized point misses the zero level by " + std::to_string(v));
      out.max_residual = std::max(out.max_residual, v);
    }
    out.points.push_back(std::move(p));
  }
  out.empty = out.points.empty();
  return out;
}

/// Projects seeds onto {μ_a = 0 ∀a} by Gauss–Newton with the minimum-norm
/// step. Seeds that diverge or leave the chart are dropped; no surviving
/// seed marks the level empty.
inline ZeroLevel zero_level_newton(const std::vector<Expression>& mu, const Chart& chart, std::size_t chart_index, std::span<const Point> seeds,
                                   double tol = 1e-10, int max_iterations = 50) {
  ZeroLevel out;
  const auto n = static_cast<Eigen::Index>(chart.dim());
  const auto k = static_cast<Eigen::Index>(mu.size());
  for (const auto& seed : seeds) {
    std::vector<double> x = seed.coords;
    bool converged = false;
    for (int it = 0; it < max_iterations && chart.contains(x); ++it) {
      const auto jets = expr::seed_jets(x);
      Vec value(k);
      Mat jac(k, n);
      try {
        for (Eigen::Index a = 0; a < k; ++a) {
          const auto j = expr::evaluate_jet(mu[static_cast<std::size_t>(a)], std::span<const expr::Jet>(jets));
          value(a) = j.value();
          jac.row(a) = gradient_of(j, chart.dim()).transpose();
        }
      } catch (const expr::DomainError&) {
        break;
      }
      if (value.cwiseAbs().maxCoeff() <= tol) {
        converged = true;
        out.max_residual = std::max(out.max_residual, value.cwiseAbs().maxCoeff());
        break;
      }
      if (smallest_singular_value(jac) < 1e-12) break;
      const Vec step = jac.completeOrthogonalDecomposition().solve(value);
      for (Eigen::Index i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] -= step(i);
    }
    if (converged) out.points.push_back({chart_index, chart.reduce(x)});
  }
  out.empty = out.points.empty();
  return out;
}

}  // namespace contact::moment
