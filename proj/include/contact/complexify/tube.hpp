#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "contact/geometry.hpp"
#include "contact/linalg.hpp"

namespace contact::complexify {

using expr::Expression;
using expr::Jet;
using geometry::Atlas;
using geometry::Chart;
using geometry::Interval;
using geometry::Point;

class MissingExtension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// J(∂x_j) = ∂y_j, J(∂y_j) = −∂x_j in the ordering (x_1..x_n, y_1..y_n).
inline Mat complex_structure(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  Mat j = Mat::Zero(2 * m, 2 * m);
  for (Eigen::Index k = 0; k < m; ++k) {
    j(m + k, k) = 1.0;
    j(k, m + k) = -1.0;
  }
  return j;
}

/// Holomorphic extension of a base transition: 2n expressions in the tube
/// scope of `from` giving (real parts, imaginary parts) in chart `to`.
using TubeTransition = geometry::Transition;

/// Tube domains |y| < r over every chart of M, glued by holomorphic
/// extensions of the base transitions.
class TubeComplexification {
 public:
  TubeComplexification(Atlas base, std::vector<Chart> tubes, std::vector<double> radius, std::vector<TubeTransition> transitions)
      : base_(std::move(base)), tubes_(Atlas(std::move(tubes), std::move(transitions))), radius_(std::move(radius)) {}

  const Atlas& base() const { return base_; }
  const Atlas& atlas() const { return tubes_; }
  std::size_t size() const { return base_.size(); }
  const Chart& chart(std::size_t i) const { return tubes_.chart(i); }
  std::size_t n(std::size_t i) const { return base_.chart(i).dim(); }
  double radius(std::size_t i) const { return radius_.at(i); }

  Point embed(const Point& p) const {
    std::vector<double> z(p.coords);
    z.resize(2 * p.coords.size(), 0.0);
    return {p.chart, std::move(z)};
  }

  /// Holomorphic coordinate change of jets from chart `from` into `to`.
  /// Empty when the transition is missing, singular or non-finite there, or
  /// when the image leaves the tube chart `to` (base box and radius).
  std::optional<std::vector<Jet>> transfer(std::size_t from, std::span<const Jet> z, std::size_t to) const {
    if (from == to) return std::vector<Jet>(z.begin(), z.end());
    const auto* t = tubes_.transition(from, to);
    if (!t) return std::nullopt;
    std::vector<Jet> out;
    out.reserve(t->map.size());
    try {
      for (const auto& e : t->map) out.push_back(expr::evaluate_jet(e, z));
    } catch (const expr::DomainError&) {
      return std::nullopt;
    }
    std::vector<double> values;
    for (const auto& j : out) {
      if (!j.is_finite()) return std::nullopt;
      values.push_back(j.value());
    }
    if (!tubes_.chart(to).contains(values)) return std::nullopt;
    return out;
  }

 private:
  Atlas base_;
  Atlas tubes_;
  std::vector<double> radius_;
};

namespace detail {

inline bool is_affine(const std::vector<Expression>& map, const Chart& chart) {
  const std::vector<std::vector<double>> probes{std::vector<double>(chart.dim(), 0.37), std::vector<double>(chart.dim(), -0.81)};
  for (const auto& e : map) {
    for (auto p : probes) {
      for (std::size_t i = 0; i < p.size(); ++i) p[i] += 0.13 * static_cast<double>(i);
      try {
        const auto j = expr::evaluate_jet(e, p);
        for (std::size_t a = 0; a < chart.dim(); ++a)
          for (std::size_t b = 0; b < chart.dim(); ++b)
            if (j.hessian(a, b) != 0.0) return false;
      } catch (const expr::DomainError&) {
        return false;
      }
    }
  }
  return true;
}

/// F(x + iy) = F(x) + i DF·y for affine F.
inline std::vector<Expression> affine_extension(const std::vector<Expression>& map, const expr::ScopePtr& tube_scope, std::size_t n) {
  std::vector<Expression> real, imag;
  for (const auto& f : map) {
    real.push_back(expr::rescope(f, tube_scope));
    Expression im = expr::constant(tube_scope, 0.0);
    for (std::size_t j = 0; j < n; ++j)
      im = im + expr::rescope(expr::derivative(f, j), tube_scope) * expr::variable(tube_scope, n + j);
    imag.push_back(im);
  }
  real.insert(real.end(), imag.begin(), imag.end());
  return real;
}

}  // namespace detail

inline std::vector<std::string> default_imaginary_names(const Chart& c) {
  std::vector<std::string> out;
  for (const auto& name : c.coords()) out.push_back("im_" + name);
  return out;
}

/// Builds the tube complexification. `imaginary[i]` names the imaginary
/// partners of chart i; `declared` holds holomorphic extensions of base
/// transitions (as text, in the tube scope of the source chart). Affine
/// transitions without a declaration are extended automatically.
inline TubeComplexification complexify_atlas(const Atlas& m, double r, std::vector<std::vector<std::string>> imaginary = {},
                                       const std::vector<std::tuple<std::size_t, std::size_t, std::vector<std::string>>>& declared = {},
                                       std::vector<double> radius_per_chart = {}) {
  if (!(r > 0.0)) throw std::invalid_argument("tube radius must be positive");
  if (imaginary.empty())
    for (const auto& c : m.charts()) imaginary.push_back(default_imaginary_names(c));
  if (imaginary.size() != m.size()) throw std::invalid_argument("imaginary coordinate names needed for every chart");
  if (radius_per_chart.empty()) radius_per_chart.assign(m.size(), r);
  std::vector<Chart> tubes;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& c = m.chart(i);
    if (imaginary[i].size() != c.dim()) throw std::invalid_argument("chart '" + c.name() + "': wrong number of imaginary names");
    auto names = c.coords();
    names.insert(names.end(), imaginary[i].begin(), imaginary[i].end());
    auto box = c.box();
    for (std::size_t k = 0; k < c.dim(); ++k) box.push_back(Interval::closed(-radius_per_chart[i], radius_per_chart[i]));
    tubes.emplace_back(c.name() + "^c", std::move(names), std::move(box));
  }
  std::vector<TubeTransition> transitions;
  for (const auto& t : m.transitions()) {
    const std::vector<std::string>* text = nullptr;
    for (const auto& [from, to, map] : declared)
      if (from == t.from && to == t.to) text = &map;
    if (text) {
      if (text->size() != 2 * m.chart(t.to).dim())
        throw std::invalid_argument("tube transition " + m.chart(t.from).name() + "->" + m.chart(t.to).name() + " needs 2n components");
      std::vector<Expression> map;
      for (const auto& s : *text) map.push_back(tubes[t.from].parse(s));
      transitions.push_back({t.from, t.to, std::move(map)});
    } else if (detail::is_affine(t.map, m.chart(t.from))) {
      transitions.push_back({t.from, t.to, detail::affine_extension(t.map, tubes[t.from].scope(), m.chart(t.from).dim())});
    } else {
      throw MissingExtension("transition " + m.chart(t.from).name() + "->" + m.chart(t.to).name() +
                             " is not affine and has no declared holomorphic extension");
    }
  }
  return TubeComplexification(m, std::move(tubes), std::move(radius_per_chart), std::move(transitions));
}

}  // namespace contact::complexify
