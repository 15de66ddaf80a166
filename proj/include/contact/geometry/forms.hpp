#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "contact/expr.hpp"
#include "contact/geometry/chart.hpp"
#include "contact/linalg.hpp"

namespace contact::geometry {

using expr::Expression;

/// Σ a_j dx_j, one coefficient vector per chart (in that chart's scope).
class OneForm {
 public:
  OneForm() = default;
  explicit OneForm(std::vector<std::vector<Expression>> per_chart) : coeffs_(std::move(per_chart)) {}

  static OneForm on_chart(const Chart& chart, const std::vector<std::string>& texts) {
    if (texts.size() != chart.dim()) throw std::invalid_argument("one-form needs one coefficient per coordinate");
    std::vector<Expression> c;
    for (const auto& t : texts) c.push_back(chart.parse(t));
    return OneForm({std::move(c)});
  }

  std::size_t charts() const { return coeffs_.size(); }
  const std::vector<Expression>& coefficients(std::size_t chart) const { return coeffs_.at(chart); }

  Vec value(std::size_t chart, std::span<const double> x) const {
    const auto& c = coeffs_.at(chart);
    Vec out(static_cast<Eigen::Index>(c.size()));
    for (std::size_t j = 0; j < c.size(); ++j) out(static_cast<Eigen::Index>(j)) = expr::evaluate(c[j], x);
    return out;
  }
  Vec value(const Point& p) const { return value(p.chart, p.coords); }

 private:
  std::vector<std::vector<Expression>> coeffs_;
};

/// Σ_{i<j} b_ij dx_i∧dx_j stored as a full antisymmetric matrix per chart;
/// b_ji is built as the negation of b_ij.
class TwoForm {
 public:
  TwoForm() = default;
  explicit TwoForm(std::vector<std::vector<std::vector<Expression>>> per_chart) : coeffs_(std::move(per_chart)) {}

  const std::vector<std::vector<Expression>>& coefficients(std::size_t chart) const { return coeffs_.at(chart); }

  Mat value(std::size_t chart, std::span<const double> x) const {
    const auto& b = coeffs_.at(chart);
    const auto n = static_cast<Eigen::Index>(b.size());
    Mat out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        out(i, j) = expr::evaluate(b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], x);
    return out;
  }

 private:
  std::vector<std::vector<std::vector<Expression>>> coeffs_;
};

/// Symbolic differential df = Σ ∂_j f dx_j.
inline std::vector<Expression> differential(const Expression& f) {
  std::vector<Expression> out;
  for (std::size_t j = 0; j < f.arity(); ++j) out.push_back(expr::derivative(f, j));
  return out;
}

/// Symbolic d of a one-form; (dα)_ij = ∂_i a_j − ∂_j a_i.
inline TwoForm exterior_derivative(const OneForm& alpha) {
  std::vector<std::vector<std::vector<Expression>>> all;
  for (std::size_t c = 0; c < alpha.charts(); ++c) {
    const auto& a = alpha.coefficients(c);
    const std::size_t n = a.size();
    std::vector<std::vector<Expression>> b(n, std::vector<Expression>(n));
    for (std::size_t i = 0; i < n; ++i) {
      b[i][i] = expr::constant(a[i].scope(), 0.0);
      for (std::size_t j = i + 1; j < n; ++j) {
        b[i][j] = expr::derivative(a[j], i) - expr::derivative(a[i], j);
        b[j][i] = -b[i][j];
      }
    }
    all.push_back(std::move(b));
  }
  return TwoForm(std::move(all));
}

/// Value of dα at p from the coefficient jets.
inline Mat exterior_derivative(std::span<const Expression> coeffs, std::span<const double> x) {
  const auto n = static_cast<Eigen::Index>(coeffs.size());
  Mat grads(n, n);  // grads(j, i) = ∂_i a_j
  const auto seeds = expr::seed_jets(x);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto jet = expr::evaluate_jet(coeffs[static_cast<std::size_t>(j)], std::span<const expr::Jet>(seeds));
    for (Eigen::Index i = 0; i < n; ++i) grads(j, i) = jet.gradient(static_cast<std::size_t>(i));
  }
  return grads.transpose() - grads;
}

inline Mat exterior_derivative(const OneForm& alpha, const Point& p) {
  return exterior_derivative(alpha.coefficients(p.chart), p.coords);
}

/// (F*α)_p = DF(p)ᵀ a(F(p)); F is given by expressions in the source scope.
inline Vec pullback(std::span<const Expression> map, std::span<const Expression> target_coeffs, std::span<const double> p,
                    const Chart* target_chart = nullptr) {
  if (map.size() != target_coeffs.size()) throw std::invalid_argument("pullback: map and form dimensions differ");
  const auto seeds = expr::seed_jets(p);
  std::vector<double> image;
  Mat jac(static_cast<Eigen::Index>(map.size()), static_cast<Eigen::Index>(p.size()));
  for (std::size_t k = 0; k < map.size(); ++k) {
    const auto jet = expr::evaluate_jet(map[k], std::span<const expr::Jet>(seeds));
    image.push_back(jet.value());
    for (std::size_t i = 0; i < p.size(); ++i) jac(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) = jet.gradient(i);
  }
  if (target_chart && !target_chart->contains(image, 1e-12))
    throw std::domain_error("pullback: image point lies outside chart '" + target_chart->name() + "'");
  Vec a(static_cast<Eigen::Index>(target_coeffs.size()));
  for (std::size_t k = 0; k < target_coeffs.size(); ++k) a(static_cast<Eigen::Index>(k)) = expr::evaluate(target_coeffs[k], image);
  return jac.transpose() * a;
}

/// Symbolic pullback: coefficients Σ_k a_k(F) ∂F_k/∂s_i in the source scope.
inline std::vector<Expression> pullback(std::span<const Expression> map, std::span<const Expression> target_coeffs) {
  if (map.empty()) throw std::invalid_argument("pullback: empty map");
  const std::vector<Expression> components(map.begin(), map.end());
  const auto& scope = map.front().scope();
  std::vector<Expression> out;
  for (std::size_t i = 0; i < scope->size(); ++i) {
    Expression sum = expr::constant(scope, 0.0);
    for (std::size_t k = 0; k < map.size(); ++k)
      sum = sum + expr::substitute(target_coeffs[k], components) * expr::derivative(map[k], i);
    out.push_back(sum);
  }
  return out;
}

/// Coefficient of η∧(dη)^n against dx_0∧…∧dx_2n in the declared coordinate
/// order, from the values a = η_p and b = (dη)_p.
inline double wedge_top(const Vec& a, const Mat& b) {
  const auto dim = a.size();
  if (dim % 2 == 0) throw std::invalid_argument("wedge_top: dimension must be odd");
  if (b.rows() != dim || b.cols() != dim) throw std::invalid_argument("wedge_top: dimension mismatch");
  const std::size_t n = static_cast<std::size_t>(dim / 2);
  double factorial = 1.0;
  for (std::size_t k = 2; k <= n; ++k) factorial *= static_cast<double>(k);
  double sum = 0.0;
  for (Eigen::Index k = 0; k < dim; ++k) {
    if (a(k) == 0.0) continue;
    std::vector<Eigen::Index> rest;
    for (Eigen::Index i = 0; i < dim; ++i)
      if (i != k) rest.push_back(i);
    sum += (k % 2 == 0 ? 1.0 : -1.0) * a(k) * pfaffian(b, rest);
  }
  return factorial * sum;
}

inline double wedge_top(const OneForm& eta, const Point& p) { return wedge_top(eta.value(p), exterior_derivative(eta, p)); }

struct ContactReport {
  double min_abs = std::numeric_limits<double>::infinity();
  std::size_t samples = 0;
  bool pass = false;
};

inline ContactReport contact_check(const Atlas& atlas, const OneForm& eta, std::span<const Point> samples, double threshold = 1e-6) {
  if (atlas.dim() % 2 == 0) throw std::invalid_argument("contact_check: manifold dimension must be odd");
  ContactReport r;
  for (const auto& p : samples) {
    r.min_abs = std::min(r.min_abs, std::abs(wedge_top(eta, p)));
    ++r.samples;
  }
  r.pass = r.samples > 0 && r.min_abs > threshold;
  return r;
}

}  // namespace contact::geometry
