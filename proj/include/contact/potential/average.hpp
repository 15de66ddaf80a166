#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "contact/complexify/field.hpp"
#include "contact/symmetry/action.hpp"

namespace contact::potential {

class NonCompactGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Quadrature nodes for the Haar average: every element of a finite group,
/// or the N-point trapezoid rule per torus factor (exact for trigonometric
/// polynomials of degree < N).
inline std::vector<symmetry::Element> haar_nodes(const symmetry::GroupModel& g, std::size_t per_factor = 64) {
  using symmetry::GroupKind;
  switch (g.kind()) {
    case GroupKind::Trivial: return {g.identity()};
    case GroupKind::Finite: {
      std::vector<symmetry::Element> out;
      for (std::size_t e = 0; e < g.order(); ++e) out.push_back({static_cast<double>(e)});
      return out;
    }
    case GroupKind::Translation: throw NonCompactGroup("averaging needs a compact group; translations are not");
    case GroupKind::Torus:
    case GroupKind::CircleMatrix: break;
  }
  std::vector<symmetry::Element> out{symmetry::Element{}};
  for (std::size_t d = 0; d < g.dim(); ++d) {
    std::vector<symmetry::Element> next;
    for (const auto& prefix : out)
      for (std::size_t j = 0; j < per_factor; ++j) {
        auto e = prefix;
        e.push_back(geometry::kTwoPi * static_cast<double>(j) / static_cast<double>(per_factor));
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

/// (1/|nodes|) Σ_g f ∘ ψ_g, using the holomorphic tube action.
inline complexify::FieldPtr average(complexify::FieldPtr f, const symmetry::Action& action, std::size_t per_factor = 64) {
  if (action.group().kind() == symmetry::GroupKind::Trivial) return f;
  if (!action.has_tube()) throw std::invalid_argument("averaging a tube field needs the holomorphic action on the tube");
  const auto nodes = haar_nodes(action.group(), per_factor);
  const double w = 1.0 / static_cast<double>(nodes.size());
  std::vector<std::pair<double, complexify::FieldPtr>> terms;
  terms.reserve(nodes.size());
  for (const auto& g : nodes) {
    std::vector<complexify::ChartMap> maps;
    for (std::size_t c = 0; c < action.charts(); ++c) maps.push_back({c, action.map(c, g, true)});
    terms.emplace_back(w, complexify::make_pullback(f, std::move(maps)));
  }
  return complexify::make_sum(std::move(terms));
}

}  // namespace contact::potential
