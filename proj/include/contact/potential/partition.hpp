#pragma once

#include <cmath>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "contact/complexify.hpp"

namespace contact::potential {

using complexify::Field;
using complexify::FieldPtr;
using complexify::TubeComplexification;
using expr::Expression;
using expr::Jet;
using geometry::Chart;
using geometry::Point;

class CoverGap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Π_i b((2x_i − lo_i − hi_i)/(hi_i − lo_i)) over the non-periodic
/// coordinates; supported exactly on the chart box.
inline Expression box_bump(const Chart& chart) {
  Expression out = expr::constant(chart.scope(), 1.0);
  for (std::size_t i = 0; i < chart.dim(); ++i) {
    const auto& iv = chart.box()[i];
    if (iv.periodic) continue;
    const double scale = 2.0 / (iv.hi - iv.lo);
    const double shift = -(iv.lo + iv.hi) / (iv.hi - iv.lo);
    out = out * expr::bump(scale * expr::variable(chart.scope(), i) + shift);
  }
  return out;
}

/// b(|x|²/R²), supported in the ball of radius R.
inline Expression radial_bump(const Chart& chart, double radius) {
  Expression r2 = expr::constant(chart.scope(), 0.0);
  for (std::size_t i = 0; i < chart.dim(); ++i) r2 = r2 + expr::pow(expr::variable(chart.scope(), i), 2);
  return expr::bump((1.0 / (radius * radius)) * r2);
}

/// Bump functions χ_β, one per chart, in the chart's base scope. With
/// `normalized` the partition is χ_β / Σ_γ χ_γ.
struct PartitionOfUnity {
  std::vector<Expression> bumps;
  bool normalized = true;

  static PartitionOfUnity trivial(const geometry::Atlas& m) {
    PartitionOfUnity p;
    for (const auto& c : m.charts()) p.bumps.push_back(expr::constant(c.scope(), 1.0));
    return p;
  }
  static PartitionOfUnity boxes(const geometry::Atlas& m) {
    PartitionOfUnity p;
    for (const auto& c : m.charts()) p.bumps.push_back(box_bump(c));
    return p;
  }
};

namespace detail {

inline Jet reciprocal(const Jet& s) {
  const double v = s.value();
  return s.apply(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

}  // namespace detail

/// Σ_β χ_β ρ_β (normalized by Σ χ_β when requested), where each term lives
/// on chart β and is reached through the holomorphic transitions of the tube.
/// Terms whose transition is undefined or leaves chart β's box are zero there.
class PatchedField final : public Field {
 public:
  PatchedField(std::shared_ptr<const TubeComplexification> tube, const PartitionOfUnity& partition, std::vector<Expression> locals)
      : tube_(std::move(tube)), normalized_(partition.normalized), locals_(std::move(locals)) {
    if (partition.bumps.size() != tube_->size() || locals_.size() != tube_->size())
      throw std::invalid_argument("patch: one bump and one local potential per chart");
    for (std::size_t b = 0; b < tube_->size(); ++b) bumps_.push_back(expr::rescope(partition.bumps[b], tube_->chart(b).scope()));
  }

  Jet evaluate(std::size_t chart, std::span<const Jet> z) const override {
    const std::size_t dim = z.empty() ? 0 : z.front().dim();
    Jet total = Jet::constant(0.0, dim);
    Jet weight = Jet::constant(0.0, dim);
    for (std::size_t b = 0; b < tube_->size(); ++b) {
      const auto zb = tube_->transfer(chart, z, b);
      if (!zb) continue;
      const Jet chi = expr::evaluate_jet(bumps_[b], *zb);
      if (chi.is_zero()) continue;
      total += chi * expr::evaluate_jet(locals_[b], *zb);
      weight += chi;
    }
    if (!normalized_) return total;
    if (!(weight.value() > 0.0)) throw CoverGap("no partition function is positive at this point");
    return total * detail::reciprocal(weight);
  }

  /// Σ_β χ_β at a tube point (the normalizer).
  double weight(std::size_t chart, std::span<const double> z) const {
    const auto seeds = expr::seed_jets(z);
    double w = 0.0;
    for (std::size_t b = 0; b < tube_->size(); ++b)
      if (const auto zb = tube_->transfer(chart, seeds, b)) w += expr::evaluate_jet(bumps_[b], *zb).value();
    return w;
  }

  /// The partition functions at a point: χ_β or χ_β / Σχ.
  std::vector<double> partition_values(std::size_t chart, std::span<const double> z) const {
    const auto seeds = expr::seed_jets(z);
    std::vector<double> out(tube_->size(), 0.0);
    for (std::size_t b = 0; b < tube_->size(); ++b)
      if (const auto zb = tube_->transfer(chart, seeds, b)) out[b] = expr::evaluate_jet(bumps_[b], *zb).value();
    if (normalized_) {
      double s = 0.0;
      for (double v : out) s += v;
      for (auto& v : out) v /= s;
    }
    return out;
  }

  const TubeComplexification& tube() const { return *tube_; }

 private:
  std::shared_ptr<const TubeComplexification> tube_;
  bool normalized_;
  std::vector<Expression> bumps_;
  std::vector<Expression> locals_;
};

struct PartitionReport {
  double min_weight = std::numeric_limits<double>::infinity();  // min Σχ
  double max_sum_defect = 0.0;                                    // max |Σφ − 1|
  double min_value = std::numeric_limits<double>::infinity();     // min φ_β
  std::size_t samples = 0;
};

/// Validates the partition at points of M; a cover gap (Σφ < 1 − 1e−10, or
/// Σχ = 0 when normalizing) is an error.
inline PartitionReport check_partition(const PatchedField& patched, std::span<const Point> m_samples, bool normalized) {
  PartitionReport r;
  for (const auto& p : m_samples) {
    const auto z = patched.tube().embed(p);
    const double w = patched.weight(z.chart, z.coords);
    r.min_weight = std::min(r.min_weight, w);
    if (normalized && !(w > 0.0)) throw CoverGap("partition functions all vanish at a point of M");
    const auto phi = patched.partition_values(z.chart, z.coords);
    double s = 0.0;
    for (double v : phi) {
      s += v;
      r.min_value = std::min(r.min_value, v);
    }
    if (s < 1.0 - 1e-10) throw CoverGap("partition sums to " + std::to_string(s) + " < 1 at a point of M");
    r.max_sum_defect = std::max(r.max_sum_defect, std::abs(s - 1.0));
    ++r.samples;
  }
  return r;
}

/// ρ_α(x + iy) = Σ f_j(x) y_j on the tube chart, for η = Σ f_j dx_j.
inline Expression local_potential(const Chart& tube_chart, std::span<const Expression> f) {
  const std::size_t n = f.size();
  if (tube_chart.dim() != 2 * n) throw std::invalid_argument("local_potential: tube chart must have 2n coordinates");
  Expression rho = expr::constant(tube_chart.scope(), 0.0);
  for (std::size_t j = 0; j < n; ++j) rho = rho + expr::rescope(f[j], tube_chart.scope()) * expr::variable(tube_chart.scope(), n + j);
  return rho;
}

/// w·|y|² on the tube chart; `weight` is a base-scope expression or empty.
inline Expression squared_imaginary(const Chart& tube_chart, std::size_t n, const Expression& weight = {}) {
  Expression s = expr::constant(tube_chart.scope(), 0.0);
  for (std::size_t j = 0; j < n; ++j) s = s + expr::pow(expr::variable(tube_chart.scope(), n + j), 2);
  if (weight.valid()) s = expr::rescope(weight, tube_chart.scope()) * s;
  return s;
}

/// The patched extension Σ φ_β ρ_β of the chart-local potentials of η.
inline std::shared_ptr<const PatchedField> patch(std::shared_ptr<const TubeComplexification> tube, const PartitionOfUnity& partition,
                                                 const geometry::OneForm& eta) {
  std::vector<Expression> locals;
  for (std::size_t c = 0; c < tube->size(); ++c) locals.push_back(local_potential(tube->chart(c), eta.coefficients(c)));
  return std::make_shared<PatchedField>(std::move(tube), partition, std::move(locals));
}

/// ν = Σ φ_β w_β |y_β|²; vanishes to second order along M.
inline std::shared_ptr<const PatchedField> convexifier(std::shared_ptr<const TubeComplexification> tube, const PartitionOfUnity& partition,
                                                       const std::vector<Expression>& weights = {}) {
  std::vector<Expression> locals;
  for (std::size_t c = 0; c < tube->size(); ++c)
    locals.push_back(squared_imaginary(tube->chart(c), tube->n(c), c < weights.size() ? weights[c] : Expression{}));
  return std::make_shared<PatchedField>(std::move(tube), partition, std::move(locals));
}

/// ρ + λν.
inline FieldPtr convexify(FieldPtr rho, FieldPtr nu, double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("convexify: λ must be non-negative");
  if (lambda == 0.0) return rho;
  return complexify::make_sum({{1.0, std::move(rho)}, {lambda, std::move(nu)}});
}

}  // namespace contact::potential
