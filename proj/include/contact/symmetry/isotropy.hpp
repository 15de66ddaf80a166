#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "contact/symmetry/action.hpp"

namespace contact::symmetry {

class UnsupportedIsotropy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Stabilizer of a point. Finite groups carry the exact element set;
/// continuous groups are classified as trivial or full.
struct Isotropy {
  enum class Kind { Subset, Trivial, Full } kind = Kind::Subset;
  std::vector<std::size_t> elements;  // sorted, finite groups only

  bool operator==(const Isotropy&) const = default;

  std::string label() const {
    switch (kind) {
      case Kind::Trivial: return "trivial";
      case Kind::Full: return "full";
      case Kind::Subset: break;
    }
    std::string s = "{";
    for (std::size_t i = 0; i < elements.size(); ++i) s += (i ? "," : "") + std::to_string(elements[i]);
    return s + "}";
  }
};

inline Isotropy isotropy(const Action& action, const geometry::Point& p, double tol = 1e-8, bool tube = false) {
  const auto& g = action.group();
  if (g.kind() == GroupKind::Trivial) return {Isotropy::Kind::Subset, {0}};
  if (!g.continuous()) {
    Isotropy out;
    for (std::size_t e = 0; e < g.order(); ++e) {
      const auto q = action.move(p.chart, p.coords, {static_cast<double>(e)}, tube);
      double d = 0.0;
      for (std::size_t i = 0; i < q.size(); ++i) d = std::max(d, std::abs(q[i] - p.coords[i]));
      if (d <= tol) out.elements.push_back(e);
    }
    return out;
  }
  std::size_t vanishing = 0;
  const auto basis = action.lie_basis();
  for (const auto& xi : basis)
    if (action.generator(p.chart, p.coords, xi, tube).value.norm() < tol) ++vanishing;
  if (vanishing == 0) return {Isotropy::Kind::Trivial, {}};
  if (vanishing == basis.size()) return {Isotropy::Kind::Full, {}};
  throw UnsupportedIsotropy("intermediate continuous isotropy");
}

/// g H g⁻¹ as a sorted element set.
inline std::vector<std::size_t> conjugate(const GroupModel& g, std::size_t by, const std::vector<std::size_t>& h) {
  std::vector<std::size_t> out;
  const std::size_t inv = g.inverse(by);
  for (auto e : h) out.push_back(g.multiply(g.multiply(by, e), inv));
  std::sort(out.begin(), out.end());
  return out;
}

/// Canonical representative of the conjugacy class of a stabilizer.
inline std::string conjugacy_label(const GroupModel& g, const Isotropy& iso) {
  if (iso.kind != Isotropy::Kind::Subset || g.kind() == GroupKind::Trivial) return iso.label();
  auto best = iso.elements;
  for (std::size_t k = 0; k < g.order(); ++k) best = std::min(best, conjugate(g, k, iso.elements));
  return Isotropy{Isotropy::Kind::Subset, best}.label();
}

struct Stratum {
  std::string label;
  std::vector<std::size_t> members;  // indices into the sample list
};

/// Groups samples by the conjugacy class of their stabilizer.
inline std::vector<Stratum> stratify(const Action& action, std::span<const geometry::Point> samples, double tol = 1e-8, bool tube = false) {
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < samples.size(); ++i) groups[conjugacy_label(action.group(), isotropy(action, samples[i], tol, tube))].push_back(i);
  std::vector<Stratum> out;
  for (auto& [label, members] : groups) out.push_back({label, std::move(members)});
  return out;
}

}  // namespace contact::symmetry
