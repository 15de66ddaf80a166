#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "contact/expr.hpp"

namespace contact::geometry {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// One coordinate range of a chart box. Periodic coordinates have period 2π
/// starting at `lo`; `hi` is ignored for them.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool periodic = false;

  static Interval closed(double lo, double hi) { return {lo, hi, false}; }
  static Interval angle(double lo = 0.0) { return {lo, lo + kTwoPi, true}; }

  double upper() const { return periodic ? lo + kTwoPi : hi; }
  double width() const { return upper() - lo; }
  double center() const { return 0.5 * (lo + upper()); }
};

class Chart {
 public:
  Chart() = default;
  Chart(std::string name, std::vector<std::string> coords, std::vector<Interval> box)
      : name_(std::move(name)), box_(std::move(box)) {
    if (coords.empty()) throw std::invalid_argument("chart '" + name_ + "' has no coordinates");
    if (coords.size() != box_.size()) throw std::invalid_argument("chart '" + name_ + "': box and coordinates differ in length");
    for (std::size_t i = 0; i < coords.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j)
        if (coords[i] == coords[j]) throw std::invalid_argument("chart '" + name_ + "': duplicate coordinate '" + coords[i] + "'");
      const auto& iv = box_[i];
      if (!iv.periodic && !(std::isfinite(iv.lo) && std::isfinite(iv.hi) && iv.lo < iv.hi))
        throw std::invalid_argument("chart '" + name_ + "': coordinate '" + coords[i] + "' needs a finite interval");
    }
    scope_ = expr::make_scope(std::move(coords));
  }

  const std::string& name() const { return name_; }
  std::size_t dim() const { return box_.size(); }
  const std::vector<std::string>& coords() const { return *scope_; }
  const expr::ScopePtr& scope() const { return scope_; }
  const std::vector<Interval>& box() const { return box_; }

  bool contains(std::span<const double> x, double slack = 0.0) const {
    for (std::size_t i = 0; i < box_.size(); ++i) {
      if (box_[i].periodic) continue;
      if (!(x[i] >= box_[i].lo - slack && x[i] <= box_[i].hi + slack)) return false;
    }
    return true;
  }

  /// Reduces periodic coordinates into [lo, lo + 2π).
  std::vector<double> reduce(std::span<const double> x) const {
    std::vector<double> out(x.begin(), x.end());
    for (std::size_t i = 0; i < box_.size(); ++i) {
      if (!box_[i].periodic) continue;
      double r = std::fmod(out[i] - box_[i].lo, kTwoPi);
      if (r < 0) r += kTwoPi;
      out[i] = box_[i].lo + r;
    }
    return out;
  }

  expr::Expression parse(const std::string& text) const { return expr::parse(text, scope_); }

 private:
  std::string name_;
  std::vector<Interval> box_;
  expr::ScopePtr scope_ = expr::make_scope({});
};

struct Point {
  std::size_t chart = 0;
  std::vector<double> coords;
};

/// Coordinate change from chart `from` into chart `to`; components are
/// expressions in the scope of `from`.
struct Transition {
  std::size_t from = 0;
  std::size_t to = 0;
  std::vector<expr::Expression> map;
};

class Atlas {
 public:
  Atlas() = default;
  explicit Atlas(std::vector<Chart> charts, std::vector<Transition> transitions = {})
      : charts_(std::move(charts)), transitions_(std::move(transitions)) {
    if (charts_.empty()) throw std::invalid_argument("atlas has no charts");
    for (const auto& t : transitions_) {
      if (t.from >= charts_.size() || t.to >= charts_.size()) throw std::invalid_argument("transition references a missing chart");
      if (t.map.size() != charts_[t.to].dim()) throw std::invalid_argument("transition has the wrong number of components");
    }
  }

  static Atlas single(Chart c) { return Atlas({std::move(c)}); }

  std::size_t size() const { return charts_.size(); }
  const Chart& chart(std::size_t i) const { return charts_.at(i); }
  const std::vector<Chart>& charts() const { return charts_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  std::size_t dim() const { return charts_.front().dim(); }

  std::optional<std::size_t> find(const std::string& name) const {
    for (std::size_t i = 0; i < charts_.size(); ++i)
      if (charts_[i].name() == name) return i;
    return std::nullopt;
  }

  const Transition* transition(std::size_t from, std::size_t to) const {
    for (const auto& t : transitions_)
      if (t.from == from && t.to == to) return &t;
    return nullptr;
  }

  /// Expresses `p` in chart `to`, or nothing when the transition is undefined
  /// there or lands outside the target box.
  std::optional<Point> transfer(const Point& p, std::size_t to) const {
    if (p.chart == to) return p;
    const Transition* t = transition(p.chart, to);
    if (!t) return std::nullopt;
    std::vector<double> out;
    out.reserve(t->map.size());
    try {
      for (const auto& e : t->map) out.push_back(expr::evaluate(e, p.coords));
    } catch (const expr::DomainError&) {
      return std::nullopt;
    }
    for (double v : out)
      if (!std::isfinite(v)) return std::nullopt;
    if (!charts_[to].contains(out)) return std::nullopt;
    return Point{to, charts_[to].reduce(out)};
  }

 private:
  std::vector<Chart> charts_;
  std::vector<Transition> transitions_;
};

/// Max-norm defect of (inverse ∘ transition) over the given points, taken
/// for every transition pair (a→b, b→a) whose round trip is defined.
inline double transition_inverse_residual(const Atlas& atlas, std::span<const Point> samples, std::size_t* checked = nullptr) {
  double worst = 0.0;
  std::size_t count = 0;
  for (const auto& p : samples) {
    for (std::size_t to = 0; to < atlas.size(); ++to) {
      if (to == p.chart || !atlas.transition(p.chart, to) || !atlas.transition(to, p.chart)) continue;
      const auto there = atlas.transfer(p, to);
      if (!there) continue;
      const auto back = atlas.transfer(*there, p.chart);
      if (!back) continue;
      ++count;
      for (std::size_t i = 0; i < p.coords.size(); ++i) {
        double d = std::abs(back->coords[i] - p.coords[i]);
        if (atlas.chart(p.chart).box()[i].periodic) d = std::min(d, std::abs(kTwoPi - d));
        worst = std::max(worst, d);
      }
    }
  }
  if (checked) *checked = count;
  return worst;
}

}  // namespace contact::geometry
