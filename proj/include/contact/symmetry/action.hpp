#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "contact/expr.hpp"
#include "contact/geometry/chart.hpp"
#include "contact/linalg.hpp"
#include "contact/symmetry/group.hpp"

namespace contact::symmetry {

using expr::Expression;
using expr::Jet;
using geometry::Chart;

/// Coordinates of `chart` followed by the group parameters; the scope in
/// which continuous action maps are written.
inline expr::ScopePtr action_scope(const Chart& chart, const GroupModel& g) {
  auto names = chart.coords();
  for (const auto& p : g.params()) {
    for (const auto& c : names)
      if (c == p) throw std::invalid_argument("group parameter '" + p + "' shadows a coordinate of chart '" + chart.name() + "'");
    names.push_back(p);
  }
  return expr::make_scope(std::move(names));
}

/// Maps of one group element (finite) or of the parameterized family
/// (continuous) on one chart. Each map sends the chart into itself.
struct ChartAction {
  std::vector<Expression> base;       // M chart
  std::vector<Expression> tube;       // holomorphic extension to the tube chart
  std::vector<Expression> imaginary;  // exp(itξ) on the tube chart, parameters t
};

struct GeneratorJet {
  Vec value;     // ξ(p)
  Mat jacobian;  // ∂ξ_i/∂p_j
};

class Action {
 public:
  Action() = default;

  /// `maps[e][c]` is element e on chart c for finite groups; continuous
  /// groups pass a single family maps[0][c] in the action scope.
  Action(GroupModel group, std::vector<Chart> base_charts, std::vector<Chart> tube_charts, std::vector<std::vector<ChartAction>> maps)
      : group_(std::move(group)), base_(std::move(base_charts)), tube_(std::move(tube_charts)), maps_(std::move(maps)) {
    const std::size_t expected = group_.continuous() ? 1 : group_.order();
    if (group_.kind() == GroupKind::Trivial) {
      maps_.assign(1, {});
      for (std::size_t c = 0; c < base_.size(); ++c) maps_[0].push_back({identity(base_[c].scope()), tube_.empty() ? std::vector<Expression>{} : identity(tube_[c].scope()), {}});
    }
    if (maps_.size() != expected) throw std::invalid_argument("action: wrong number of element maps");
    for (const auto& per_chart : maps_) {
      if (per_chart.size() != base_.size()) throw std::invalid_argument("action: maps needed for every chart");
      for (std::size_t c = 0; c < base_.size(); ++c) {
        if (per_chart[c].base.size() != base_[c].dim()) throw std::invalid_argument("action: base map has wrong length");
        if (!per_chart[c].tube.empty() && per_chart[c].tube.size() != 2 * base_[c].dim())
          throw std::invalid_argument("action: tube map has wrong length");
      }
    }
    if (group_.kind() == GroupKind::Finite) build_table();
  }

  const GroupModel& group() const { return group_; }
  const Chart& base_chart(std::size_t c) const { return base_.at(c); }
  const Chart& tube_chart(std::size_t c) const { return tube_.at(c); }
  bool has_tube() const { return !tube_.empty() && !maps_.front().front().tube.empty(); }
  bool has_imaginary() const { return group_.continuous() && !maps_.front().front().imaginary.empty(); }
  std::size_t charts() const { return base_.size(); }

  /// ψ_g on chart c as expressions in the chart (or tube chart) scope.
  std::vector<Expression> map(std::size_t c, const Element& g, bool tube = false) const {
    const auto& ca = family(c, g);
    const auto& exprs = tube ? ca.tube : ca.base;
    if (exprs.empty()) throw std::logic_error("action has no tube extension");
    if (!group_.continuous()) return exprs;
    return bind(exprs, tube ? tube_.at(c) : base_.at(c), g);
  }

  /// exp(i t ξ) on tube chart c, with t·ξ given in parameter coordinates.
  std::vector<Expression> imaginary_map(std::size_t c, const Element& t) const {
    if (!has_imaginary()) throw std::logic_error("action has no imaginary flow");
    return bind(maps_.front().at(c).imaginary, tube_.at(c), t);
  }

  /// The unbound imaginary family exp(itξ) on tube chart c, in the action
  /// scope of the tube chart (coordinates followed by t).
  const std::vector<Expression>& imaginary_family(std::size_t c) const {
    if (!has_imaginary()) throw std::logic_error("action has no imaginary flow");
    return maps_.front().at(c).imaginary;
  }

  std::vector<double> move(std::size_t c, std::span<const double> p, const Element& g, bool tube = false) const {
    return expr::evaluate_all(map(c, g, tube), p);
  }

  /// ξ_M(p) and its jacobian, differentiating the parameterized maps at the
  /// identity. With `imaginary` the imaginary flow is used instead.
  GeneratorJet generator(std::size_t c, std::span<const double> p, std::span<const double> xi, bool tube = false,
                         bool imaginary = false) const {
    if (!group_.continuous()) throw std::logic_error("finite groups have no infinitesimal generators");
    const auto& ca = maps_.front().at(c);
    const auto& exprs = imaginary ? ca.imaginary : (tube ? ca.tube : ca.base);
    if (exprs.empty()) throw std::logic_error("action map missing for generator");
    std::vector<double> point(p.begin(), p.end());
    point.resize(p.size() + group_.dim(), 0.0);
    const auto seeds = expr::seed_jets(point);
    const auto n = static_cast<Eigen::Index>(p.size());
    GeneratorJet out{Vec::Zero(n), Mat::Zero(n, n)};
    for (Eigen::Index i = 0; i < n; ++i) {
      const Jet j = expr::evaluate_jet(exprs[static_cast<std::size_t>(i)], std::span<const Jet>(seeds));
      for (std::size_t a = 0; a < group_.dim(); ++a) {
        const std::size_t pa = p.size() + a;
        out.value(i) += xi[a] * j.gradient(pa);
        for (Eigen::Index k = 0; k < n; ++k) out.jacobian(i, k) += xi[a] * j.hessian(pa, static_cast<std::size_t>(k));
      }
    }
    return out;
  }

  /// ξ_M as expressions in the chart (or tube chart) scope.
  std::vector<Expression> generator_expressions(std::size_t c, std::span<const double> xi, bool tube = false) const {
    if (!group_.continuous()) throw std::logic_error("finite groups have no infinitesimal generators");
    const auto& ca = maps_.front().at(c);
    const auto& exprs = tube ? ca.tube : ca.base;
    if (exprs.empty()) throw std::logic_error("action map missing for generator");
    const Chart& chart = tube ? tube_.at(c) : base_.at(c);
    std::vector<Expression> out;
    for (const auto& e : exprs) {
      Expression d = expr::constant(e.scope(), 0.0);
      for (std::size_t a = 0; a < group_.dim(); ++a)
        if (xi[a] != 0.0) d = d + xi[a] * expr::derivative(e, chart.dim() + a);
      out.push_back(d);
    }
    return bind(out, chart, group_.identity());
  }

  /// Lie algebra basis vectors e_a in parameter coordinates.
  std::vector<Element> lie_basis() const {
    std::vector<Element> out;
    for (std::size_t a = 0; a < group_.dim(); ++a) {
      Element e(group_.dim(), 0.0);
      e[a] = 1.0;
      out.push_back(e);
    }
    return out;
  }

  /// max |ψ_e(p) − p| and max |ψ_g∘ψ_h(p) − ψ_{gh}(p)| over the samples.
  struct LawResidual {
    double identity = 0.0;
    double composition = 0.0;
  };
  LawResidual law_residual(std::span<const geometry::Point> samples, bool tube = false) const {
    LawResidual r;
    const auto elements = group_.sample_elements();
    for (const auto& p : samples) {
      const auto id = move(p.chart, p.coords, group_.identity(), tube);
      for (std::size_t i = 0; i < id.size(); ++i) r.identity = std::max(r.identity, std::abs(id[i] - p.coords[i]));
      for (std::size_t a = 0; a < elements.size(); a += 3)
        for (std::size_t b = 1; b < elements.size(); b += 5) {
          const auto gh = compose(elements[a], elements[b]);
          const auto lhs = move(p.chart, move(p.chart, p.coords, elements[b], tube), elements[a], tube);
          const auto rhs = move(p.chart, p.coords, gh, tube);
          for (std::size_t i = 0; i < lhs.size(); ++i) r.composition = std::max(r.composition, std::abs(lhs[i] - rhs[i]));
        }
    }
    return r;
  }

  Element compose(const Element& g, const Element& h) const {
    if (!group_.continuous()) {
      return {static_cast<double>(group_.multiply(static_cast<std::size_t>(g[0]), static_cast<std::size_t>(h[0])))};
    }
    Element out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = g[i] + h[i];
    return out;
  }

 private:
  static std::vector<Expression> identity(const expr::ScopePtr& s) {
    std::vector<Expression> out;
    for (std::size_t i = 0; i < s->size(); ++i) out.push_back(expr::variable(s, i));
    return out;
  }

  const ChartAction& family(std::size_t c, const Element& g) const {
    if (group_.continuous()) return maps_.front().at(c);
    return maps_.at(static_cast<std::size_t>(g.at(0))).at(c);
  }

  std::vector<Expression> bind(const std::vector<Expression>& exprs, const Chart& chart, const Element& g) const {
    std::vector<Expression> repl;
    for (std::size_t i = 0; i < chart.dim(); ++i) repl.push_back(expr::variable(chart.scope(), i));
    for (double v : g) repl.push_back(expr::constant(chart.scope(), v));
    std::vector<Expression> out;
    for (const auto& e : exprs) out.push_back(expr::substitute(e, repl));
    return out;
  }

  /// Recovers the multiplication table by composing element maps at probe
  /// points of chart 0.
  void build_table() {
    const auto& chart = base_.front();
    std::vector<std::vector<double>> probes;
    for (int k = 0; k < 3; ++k) {
      std::vector<double> p;
      for (std::size_t i = 0; i < chart.dim(); ++i) {
        const double f = 0.1 + 0.27 * static_cast<double>(k) + 0.173 * static_cast<double>(i);
        p.push_back(chart.box()[i].lo + (f - std::floor(f)) * chart.box()[i].width());
      }
      probes.push_back(p);
    }
    const std::size_t n = group_.order();
    auto image = [&](std::size_t g, const std::vector<double>& p) { return expr::evaluate_all(maps_[g][0].base, p); };
    auto same = [](const std::vector<double>& a, const std::vector<double>& b) {
      for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > 1e-10) return false;
      return true;
    };
    std::size_t id = n;
    for (std::size_t g = 0; g < n && id == n; ++g) {
      bool all = true;
      for (const auto& p : probes) all = all && same(image(g, p), p);
      if (all) id = g;
    }
    if (id == n) throw std::invalid_argument("finite group: no element acts as the identity");
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n, n));
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h) {
        for (std::size_t k = 0; k < n && table[g][h] == n; ++k) {
          bool all = true;
          for (const auto& p : probes) all = all && same(image(g, image(h, p)), image(k, p));
          if (all) table[g][h] = k;
        }
        if (table[g][h] == n) throw std::invalid_argument("finite group: element maps are not closed under composition");
      }
    group_.set_table(std::move(table), id);
  }

  GroupModel group_;
  std::vector<Chart> base_;
  std::vector<Chart> tube_;
  std::vector<std::vector<ChartAction>> maps_;
};

}  // namespace contact::symmetry
