#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "contact/complexify.hpp"
#include "contact/reduction/quotient.hpp"

namespace contact::reduction {

using complexify::ConvergenceError;
using complexify::Field;
using complexify::FieldPtr;
using expr::Jet;

/// Kähler quotient μ⁻¹(0)/G ≅ M^c/G^ℂ on one tube chart. `reduced` is a tube
/// chart for the quotient (real coordinates, then imaginary partners);
/// `slice` meets every G^ℂ-orbit once and `projection` is constant on them.
struct HolomorphicQuotient {
  Chart reduced;
  std::size_t chart = 0;               // tube chart of M^c
  std::vector<Expression> slice;       // reduced → tube chart
  std::vector<Expression> projection;  // tube chart → reduced
  Chart base;                          // contact-reduced base
  std::vector<Expression> embedding;   // base → reduced (real points)
};

namespace detail {

/// The jet of a function with known value, gradient and hessian in q,
/// composed with input jets q(·).
inline Jet compose(double value, const Vec& g, const Mat& h, std::span<const Jet> q) {
  const std::size_t dim = q.empty() ? 0 : q.front().dim();
  Jet out = Jet::constant(value, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    double gi = 0.0;
    for (std::size_t a = 0; a < q.size(); ++a) gi += g(static_cast<Eigen::Index>(a)) * q[a].gradient(i);
    out.set_gradient(i, gi);
    for (std::size_t j = 0; j <= i; ++j) {
      double hij = 0.0;
      for (std::size_t a = 0; a < q.size(); ++a) {
        hij += g(static_cast<Eigen::Index>(a)) * q[a].hessian(i, j);
        for (std::size_t b = 0; b < q.size(); ++b)
          hij += h(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) * q[a].gradient(i) * q[b].gradient(j);
      }
      out.set_hessian(i, j, hij);
    }
  }
  return out;
}

}  // namespace detail

/// ρ_red(q) = ρ(exp(i t*ξ)·slice(q)) where t* solves ∂_t = 0, i.e. the point
/// where the imaginary orbit meets μ⁻¹(0). Derivatives follow the envelope
/// rule: ∇ρ_red = F_q and Hρ_red = F_qq − F_qt F_tt⁻¹ F_tq.
class KahlerReducedField final : public Field {
 public:
  KahlerReducedField(FieldPtr rho, std::shared_ptr<const Action> action, HolomorphicQuotient hq)
      : rho_(std::move(rho)), action_(std::move(action)), hq_(std::move(hq)) {
    k_ = action_->group().continuous() ? action_->group().dim() : 0;
    if (hq_.reduced.dim() + k_ > Jet::capacity) throw std::length_error("reduced tube too large for jets");
  }

  Jet evaluate(std::size_t, std::span<const Jet> q) const override {
    std::vector<double> q0;
    for (const auto& j : q) q0.push_back(j.value());
    const auto t = solve(q0);
    const auto f = local(q0, t);
    const auto n = static_cast<Eigen::Index>(q0.size());
    const auto k = static_cast<Eigen::Index>(k_);
    Vec g = f.grad.head(n);
    Mat h = f.hess.topLeftCorner(n, n);
    if (k > 0) h -= f.hess.block(0, n, n, k) * f.hess.block(n, n, k, k).ldlt().solve(f.hess.block(n, 0, k, n));
    return detail::compose(f.value, g, h, q);
  }

  /// The point of μ⁻¹(0) ⊂ M^c representing q.
  std::vector<double> level_point(std::span<const double> q) const {
    const auto t = solve(q);
    std::vector<double> x(q.begin(), q.end());
    x.insert(x.end(), t.begin(), t.end());
    const auto z = expr::evaluate_all(hq_.slice, std::span<const double>(x.data(), q.size()));
    if (k_ == 0) return z;
    std::vector<double> flow_in(z);
    flow_in.insert(flow_in.end(), t.begin(), t.end());
    return expr::evaluate_all(action_->imaginary_family(hq_.chart), flow_in);
  }

  const HolomorphicQuotient& quotient() const { return hq_; }

 private:
  struct Local {
    double value;
    Vec grad;
    Mat hess;
  };

  Local local(std::span<const double> q, std::span<const double> t) const {
    std::vector<double> x(q.begin(), q.end());
    x.insert(x.end(), t.begin(), t.end());
    const auto seeds = expr::seed_jets(x);
    const std::span<const Jet> all(seeds);
    std::vector<Jet> z;
    for (const auto& e : hq_.slice) z.push_back(expr::evaluate_jet(e, all.first(q.size())));
    if (k_ > 0) {
      z.insert(z.end(), seeds.begin() + static_cast<std::ptrdiff_t>(q.size()), seeds.end());
      z = expr::evaluate_all_jets(action_->imaginary_family(hq_.chart), z);
    }
    const Jet f = rho_->evaluate(hq_.chart, z);
    return {f.value(), gradient_of(f, x.size()), hessian_of(f, x.size())};
  }

  std::vector<double> solve(std::span<const double> q) const {
    std::vector<double> t(k_, 0.0);
    if (k_ == 0) return t;
    const auto n = static_cast<Eigen::Index>(q.size());
    const auto k = static_cast<Eigen::Index>(k_);
    for (int it = 0; it < 60; ++it) {
      const auto f = local(q, t);
      const Vec ft = f.grad.tail(k);
      const Mat ftt = f.hess.block(n, n, k, k);
      if (min_symmetric_eigenvalue(ftt) <= 0.0) throw ConvergenceError("ρ is not convex along the imaginary orbit; the Kähler quotient is undefined here");
      const Vec step = ftt.ldlt().solve(ft);
      for (std::size_t a = 0; a < k_; ++a) t[a] -= step(static_cast<Eigen::Index>(a));
      if (ft.cwiseAbs().maxCoeff() < 1e-14 || step.cwiseAbs().maxCoeff() < 1e-15) return t;
    }
    throw ConvergenceError("no stationary point along the imaginary orbit");
  }

  FieldPtr rho_;
  std::shared_ptr<const Action> action_;
  HolomorphicQuotient hq_;
  std::size_t k_ = 0;
};

inline std::shared_ptr<const KahlerReducedField> kahler_reduce(FieldPtr rho, std::shared_ptr<const Action> action, HolomorphicQuotient hq) {
  return std::make_shared<KahlerReducedField>(std::move(rho), std::move(action), std::move(hq));
}

struct KahlerDefiningReport {
  double identity = 0.0;     // max |ρ_red∘π − ρ| on the level, including moved points
  double projection = 0.0;   // max |π(level_point(q)) − q|
  std::size_t samples = 0;
};

/// ρ_red∘π = ρ∘ι on μ⁻¹(0), checked at level points and their G-translates.
inline KahlerDefiningReport kahler_defining_residual(const KahlerReducedField& red, const Field& rho, const Action& action,
                                                     std::span<const std::vector<double>> q_samples, std::span<const symmetry::Element> elements) {
  KahlerDefiningReport r;
  const auto& hq = red.quotient();
  for (const auto& q : q_samples) {
    const auto x = red.level_point(q);
    const auto back = expr::evaluate_all(hq.projection, x);
    r.projection = std::max(r.projection, detail::chart_difference(hq.reduced, back, q).cwiseAbs().maxCoeff());
    for (const auto& g : elements) {
      const auto y = action.group().kind() == symmetry::GroupKind::Trivial ? x : action.move(hq.chart, x, g, true);
      const auto qy = expr::evaluate_all(hq.projection, y);
      r.identity = std::max(r.identity, std::abs(red.value(0, qy) - rho.value(hq.chart, y)));
    }
    ++r.samples;
  }
  return r;
}

struct CompatibilityReport {
  double form = 0.0;       // max |E*d^cρ_red − η_red|
  double omega = 0.0;      // max |E*dd^cρ_red − dη_red|
  double vanishing = 0.0;  // max |ρ_red| on the embedded base
  std::size_t samples = 0;
};

/// Pulls d^cρ_red and dd^cρ_red back along the embedding of the reduced
/// contact manifold and compares with η_red and dη_red.
inline CompatibilityReport compatibility_check(const Field& rho_red, const HolomorphicQuotient& hq, const OneForm& eta_red,
                                               std::span<const std::vector<double>> base_samples) {
  CompatibilityReport r;
  const std::size_t m = hq.base.dim();
  for (const auto& b : base_samples) {
    const auto seeds = expr::seed_jets(b);
    Mat e(static_cast<Eigen::Index>(hq.embedding.size()), static_cast<Eigen::Index>(m));
    std::vector<double> q;
    for (std::size_t a = 0; a < hq.embedding.size(); ++a) {
      const Jet j = expr::evaluate_jet(hq.embedding[a], std::span<const Jet>(seeds));
      q.push_back(j.value());
      e.row(static_cast<Eigen::Index>(a)) = gradient_of(j, m).transpose();
    }
    const auto f = complexify::local_jet(rho_red, 0, q);
    const Vec alpha = e.transpose() * complexify::dc(f);
    const Mat omega = e.transpose() * complexify::ddc(f) * e;
    r.form = std::max(r.form, (alpha - eta_red.value(0, b)).cwiseAbs().maxCoeff());
    r.omega = std::max(r.omega, (omega - geometry::exterior_derivative(eta_red.coefficients(0), b)).cwiseAbs().maxCoeff());
    r.vanishing = std::max(r.vanishing, std::abs(f.value));
    ++r.samples;
  }
  return r;
}

struct CRReduceReport {
  double contact_min = std::numeric_limits<double>::infinity();  // min |α∧(dα)^n| on (ρ_red)⁻¹(0)
  double levi_min = std::numeric_limits<double>::infinity();
  double max_level = 0.0;
  std::size_t points = 0;
  std::size_t failures = 0;  // seeds whose projection did not converge
};

/// Samples (ρ_red)⁻¹(0), checks that the pullback of d^cρ_red to it is a
/// contact form and that the Levi form is positive on the CR hyperplanes.
inline CRReduceReport cr_reduce(const Field& rho_red, std::span<const Point> seeds) {
  CRReduceReport r;
  for (const auto& s : seeds) {
    std::vector<double> z;
    try {
      z = complexify::project_to_level(rho_red, 0, s.coords);
    } catch (const ConvergenceError&) {
      ++r.failures;
      continue;
    }
    const auto f = complexify::local_jet(rho_red, 0, z);
    Mat row(1, f.grad.size());
    row.row(0) = f.grad.transpose();
    const Mat t = null_space(row, f.grad.size());
    const Vec alpha = t.transpose() * complexify::dc(f);
    const Mat dalpha = t.transpose() * complexify::ddc(f) * t;
    r.contact_min = std::min(r.contact_min, std::abs(geometry::wedge_top(alpha, dalpha)));
    r.levi_min = std::min(r.levi_min, complexify::levi_min_on(f, complexify::cr_hyperplane(f)));
    r.max_level = std::max(r.max_level, std::abs(f.value));
    ++r.points;
  }
  return r;
}

}  // namespace contact::reduction
