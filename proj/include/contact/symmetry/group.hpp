#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "contact/expr.hpp"
#include "contact/geometry/chart.hpp"

namespace contact::symmetry {

enum class GroupKind { Trivial, Finite, Torus, Translation, CircleMatrix };

inline std::string kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::Trivial: return "trivial";
    case GroupKind::Finite: return "finite";
    case GroupKind::Torus: return "torus";
    case GroupKind::Translation: return "translation";
    case GroupKind::CircleMatrix: return "circle_matrix";
  }
  return "?";
}

inline GroupKind kind_from_name(const std::string& s) {
  for (auto k : {GroupKind::Trivial, GroupKind::Finite, GroupKind::Torus, GroupKind::Translation, GroupKind::CircleMatrix})
    if (kind_name(k) == s) return k;
  throw std::invalid_argument("unknown group kind '" + s + "'");
}

/// A group element: exponential coordinates for continuous groups, or a
/// single entry holding the element index for finite groups.
using Element = std::vector<double>;

/// Abstract group data. Continuous groups are parameterized so that
/// exp(tξ) has parameters tξ; finite groups are indexed 0..order−1 with the
/// multiplication table recovered from their action.
class GroupModel {
 public:
  GroupModel() = default;
  GroupModel(GroupKind kind, std::vector<std::string> params, std::size_t order = 1)
      : kind_(kind), params_(std::move(params)), order_(order) {
    if (continuous() && params_.empty()) throw std::invalid_argument("continuous group needs parameters");
    if (kind_ == GroupKind::CircleMatrix && params_.size() != 1) throw std::invalid_argument("circle group has one parameter");
    if (kind_ == GroupKind::Finite && order_ == 0) throw std::invalid_argument("finite group needs elements");
    if (!continuous()) params_.clear();
    if (kind_ == GroupKind::Trivial) order_ = 1;
  }

  GroupKind kind() const { return kind_; }
  bool continuous() const { return kind_ == GroupKind::Torus || kind_ == GroupKind::Translation || kind_ == GroupKind::CircleMatrix; }
  bool compact() const { return kind_ != GroupKind::Translation; }
  std::size_t dim() const { return params_.size(); }
  const std::vector<std::string>& params() const { return params_; }
  std::size_t order() const { return order_; }

  Element identity() const { return continuous() ? Element(dim(), 0.0) : Element{static_cast<double>(identity_)}; }

  /// exp(tξ) for ξ in parameter coordinates.
  Element exp(std::span<const double> xi, double t = 1.0) const {
    if (!continuous()) throw std::logic_error("finite groups have no Lie algebra");
    Element e(xi.begin(), xi.end());
    for (auto& v : e) v *= t;
    return e;
  }

  /// Deterministic elements for invariance sampling: all elements of a finite
  /// group, 16 roots of unity for compact tori and circles, 8 magnitudes per
  /// axis for translations.
  std::vector<Element> sample_elements() const {
    std::vector<Element> out;
    switch (kind_) {
      case GroupKind::Trivial: out.push_back({0.0}); break;
      case GroupKind::Finite:
        for (std::size_t i = 0; i < order_; ++i) out.push_back({static_cast<double>(i)});
        break;
      case GroupKind::Torus:
      case GroupKind::CircleMatrix:
        for (int j = 0; j < 16; ++j) {
          Element e(dim());
          for (std::size_t d = 0; d < dim(); ++d) e[d] = geometry::kTwoPi * static_cast<double>((j * (2 * static_cast<int>(d) + 1)) % 16) / 16.0;
          out.push_back(e);
        }
        break;
      case GroupKind::Translation:
        for (std::size_t d = 0; d < dim(); ++d)
          for (double m : {-1.5, -1.0, -0.5, -0.25, 0.25, 0.5, 1.0, 1.5}) {
            Element e(dim(), 0.0);
            e[d] = m;
            out.push_back(e);
          }
        break;
    }
    return out;
  }

  // Finite-group structure, filled in from the action.
  void set_table(std::vector<std::vector<std::size_t>> table, std::size_t identity) {
    table_ = std::move(table);
    identity_ = identity;
  }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::size_t multiply(std::size_t g, std::size_t h) const { return table_.at(g).at(h); }
  std::size_t inverse(std::size_t g) const {
    for (std::size_t h = 0; h < order_; ++h)
      if (multiply(g, h) == identity_) return h;
    throw std::logic_error("element without inverse");
  }
  std::size_t identity_index() const { return identity_; }

 private:
  GroupKind kind_ = GroupKind::Trivial;
  std::vector<std::string> params_;
  std::size_t order_ = 1;
  std::vector<std::vector<std::size_t>> table_{{0}};
  std::size_t identity_ = 0;
};

}  // namespace contact::symmetry
