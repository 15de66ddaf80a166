#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "contact/complexify/field.hpp"
#include "contact/complexify/tube.hpp"
#include "contact/linalg.hpp"

namespace contact::complexify {

/// Value, gradient and hessian of a field at one tube point.
struct LocalJet {
  double value = 0.0;
  Vec grad;
  Mat hess;
  std::size_t n = 0;  // complex dimension
};

inline LocalJet local_jet(const Jet& j, std::size_t dim) {
  if (dim % 2 != 0) throw std::invalid_argument("tube dimension must be even");
  return {j.value(), gradient_of(j, dim), hessian_of(j, dim), dim / 2};
}

inline LocalJet local_jet(const Field& f, std::size_t chart, std::span<const double> z) { return local_jet(f.jet(chart, z), z.size()); }

/// d^c f = df∘J, as a covector Jᵀ∇f.
inline Vec dc(const LocalJet& f) { return complex_structure(f.n).transpose() * f.grad; }

/// dd^c f as an antisymmetric matrix: H J − Jᵀ H.
inline Mat ddc(const LocalJet& f) {
  const Mat j = complex_structure(f.n);
  return f.hess * j - j.transpose() * f.hess;
}

/// ω = −dd^c f.
inline Mat kahler_form(const LocalJet& f) { return -ddc(f); }

/// g(v, w) = ω(v, Jw) as a matrix.
inline Mat levi_matrix(const LocalJet& f) { return kahler_form(f) * complex_structure(f.n); }

/// dρ(Jv) for each basis vector v, through a one-variable jet along the line
/// z + t·Jv; independent of the Jᵀ∇ρ formula used by dc().
inline Vec dc_directional(const Field& f, std::size_t chart, std::span<const double> z) {
  const std::size_t dim = z.size();
  const Mat j = complex_structure(dim / 2);
  Vec out(static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<Jet> line;
    for (std::size_t i = 0; i < dim; ++i) {
      Jet c = Jet::constant(z[i], 1);
      c.set_gradient(0, j(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)));
      line.push_back(c);
    }
    out(static_cast<Eigen::Index>(k)) = f.evaluate(chart, line).gradient(0);
  }
  return out;
}

struct SpshReport {
  double min_eigenvalue = std::numeric_limits<double>::infinity();
  double max_asymmetry = 0.0;  // max |g − gᵀ|, the Kähler compatibility defect
  std::size_t samples = 0;
  Point argmin;
};

inline void accumulate_spsh(SpshReport& r, const LocalJet& f, const Point& p) {
  const Mat g = levi_matrix(f);
  const double e = min_symmetric_eigenvalue(g);
  if (e < r.min_eigenvalue) {
    r.min_eigenvalue = e;
    r.argmin = p;
  }
  r.max_asymmetry = std::max(r.max_asymmetry, (g - g.transpose()).cwiseAbs().maxCoeff());
  ++r.samples;
}

/// Smallest eigenvalue of ½(g + gᵀ) over tube samples; strictly
/// plurisubharmonic iff positive.
inline SpshReport spsh_check(const Field& rho, std::span<const Point> samples) {
  SpshReport r;
  for (const auto& p : samples) accumulate_spsh(r, local_jet(rho, p.chart, p.coords), p);
  return r;
}

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Box of the search region for points of one chart.
using BoxOf = std::function<std::vector<Interval>(std::size_t chart)>;

/// Least Levi eigenvalue at z, +∞ where the field cannot be evaluated.
inline double levi_eigenvalue_at(const Field& rho, std::size_t chart, std::span<const double> z) {
  try {
    return min_symmetric_eigenvalue(levi_matrix(local_jet(rho, chart, z)));
  } catch (const std::exception&) {
    return std::numeric_limits<double>::infinity();
  }
}

/// Compass search for the least Levi eigenvalue inside `box`, from `start`.
/// Periodic coordinates wrap; the others are clamped.
inline std::pair<double, std::vector<double>> minimize_levi(const Field& rho, const Point& start, const std::vector<Interval>& box,
                                                            double min_step = 1e-8, std::size_t max_evaluations = 20000) {
  std::vector<double> x = start.coords;
  double fx = levi_eigenvalue_at(rho, start.chart, x);
  std::vector<double> step(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) step[i] = 0.05 * box[i].width();
  const auto place = [&](std::size_t i, double v) {
    const auto& b = box[i];
    if (b.periodic) return b.lo + std::fmod(std::fmod(v - b.lo, geometry::kTwoPi) + geometry::kTwoPi, geometry::kTwoPi);
    return std::clamp(v, b.lo, b.hi);
  };
  std::size_t evaluations = 1;
  for (double scale = 1.0; scale > min_step && evaluations < max_evaluations;) {
    bool improved = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (double sign : {-1.0, 1.0}) {
        auto y = x;
        y[i] = place(i, x[i] + sign * step[i]);
        if (y[i] == x[i]) continue;
        const double fy = levi_eigenvalue_at(rho, start.chart, y);
        ++evaluations;
        if (fy < fx) {
          x = std::move(y);
          fx = fy;
          improved = true;
          break;
        }
      }
    }
    if (!improved) {
      scale *= 0.5;
      for (auto& s : step) s *= 0.5;
    }
  }
  return {fx, x};
}

/// spsh_check, then local descent from the `starts` lowest samples. The
/// sampled minimum only bounds the true one from above; the refined value
/// does not depend on where the lattice happened to fall.
inline SpshReport spsh_check_refined(const Field& rho, std::span<const Point> samples, const BoxOf& box, std::size_t starts = 4) {
  SpshReport r;
  std::vector<std::pair<double, std::size_t>> values;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& p = samples[k];
    accumulate_spsh(r, local_jet(rho, p.chart, p.coords), p);
    values.emplace_back(levi_eigenvalue_at(rho, p.chart, p.coords), k);
  }
  const std::size_t n = std::min(starts, values.size());
  std::partial_sort(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n), values.end());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& p = samples[values[k].second];
    auto [v, z] = minimize_levi(rho, p, box(p.chart));
    if (v < r.min_eigenvalue) {
      r.min_eigenvalue = v;
      r.argmin = {p.chart, std::move(z)};
    }
  }
  return r;
}

/// Newton projection onto {ρ = 0} along ∇ρ.
inline std::vector<double> project_to_level(const Field& rho, std::size_t chart, std::vector<double> z, double tol = 1e-12,
                                            int max_iterations = 50) {
  for (int it = 0; it <= max_iterations; ++it) {
    const auto f = local_jet(rho, chart, z);
    if (std::abs(f.value) < tol) return z;
    const double g2 = f.grad.squaredNorm();
    if (std::sqrt(g2) < 1e-8) throw ConvergenceError("gradient of the defining function vanishes at a seed");
    for (std::size_t i = 0; i < z.size(); ++i) z[i] -= f.value * f.grad(static_cast<Eigen::Index>(i)) / g2;
  }
  throw ConvergenceError("Newton projection did not converge in " + std::to_string(max_iterations) + " iterations");
}

/// Orthonormal basis of H_p = ker dρ ∩ ker d^cρ (a J-invariant subspace).
inline Mat cr_hyperplane(const LocalJet& f) {
  Mat rows(2, f.grad.size());
  rows.row(0) = f.grad.transpose();
  rows.row(1) = dc(f).transpose();
  return null_space(rows, f.grad.size());
}

/// Levi form −dd^cρ(v, Jv) restricted to H_p; returns its least eigenvalue.
inline double levi_min_on(const LocalJet& f, const Mat& basis) {
  if (basis.cols() == 0) return std::numeric_limits<double>::infinity();
  return min_symmetric_eigenvalue(basis.transpose() * symmetrize(levi_matrix(f)) * basis);
}

struct CRHypersurface {
  std::vector<Point> points;
  double levi_min = std::numeric_limits<double>::infinity();
  double min_gradient = std::numeric_limits<double>::infinity();
  std::size_t min_dim = std::numeric_limits<std::size_t>::max();
  std::size_t max_dim = 0;
  double max_level = 0.0;  // |ρ| at the projected points
};

inline void accumulate_cr(CRHypersurface& cr, const LocalJet& f, Point p) {
  const Mat h = cr_hyperplane(f);
  cr.levi_min = std::min(cr.levi_min, levi_min_on(f, h));
  cr.min_gradient = std::min(cr.min_gradient, f.grad.norm());
  cr.min_dim = std::min<std::size_t>(cr.min_dim, static_cast<std::size_t>(h.cols()));
  cr.max_dim = std::max<std::size_t>(cr.max_dim, static_cast<std::size_t>(h.cols()));
  cr.max_level = std::max(cr.max_level, std::abs(f.value));
  cr.points.push_back(std::move(p));
}

/// Samples ρ⁻¹(0) by Newton projection from tube seeds and reports the Levi
/// form on the CR hyperplanes there.
inline CRHypersurface cr_hypersurface(const Field& rho, std::span<const Point> seeds) {
  CRHypersurface cr;
  for (const auto& s : seeds) {
    auto z = project_to_level(rho, s.chart, s.coords);
    const auto f = local_jet(rho, s.chart, z);
    accumulate_cr(cr, f, Point{s.chart, std::move(z)});
  }
  return cr;
}

}  // namespace contact::complexify
