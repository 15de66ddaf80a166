#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "contact/geometry/chart.hpp"

namespace contact::sampling {

using geometry::Interval;

/// Product lattice over a box. Without a seed the points sit at cell centers;
/// with a seed each point is shifted inside its cell by a Cranley-Patterson
/// rotated Kronecker sequence, so results depend only on (box, counts, seed).
inline std::vector<std::vector<double>> lattice(const std::vector<Interval>& box, const std::vector<std::size_t>& counts,
                                                std::optional<std::uint64_t> seed = std::nullopt) {
  if (box.size() != counts.size()) throw std::invalid_argument("lattice: box and counts differ in length");
  const std::size_t dim = box.size();
  std::size_t total = 1;
  for (auto c : counts) {
    if (c == 0) throw std::invalid_argument("lattice: zero resolution");
    total *= c;
  }
  static constexpr double kAlpha[] = {0.41421356237309515, 0.7320508075688772, 0.2360679774997898, 0.6457513110645907,
                                      0.3166247903554,     0.6055512754639891, 0.1231056256176606, 0.3588989435406735,
                                      0.7958315233127191,  0.5677643628300219, 0.8309518948453007, 0.2195444572928871};
  std::vector<double> shift(dim, 0.5);
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (auto& s : shift) s = u(rng);
  }
  std::vector<std::vector<double>> out;
  out.reserve(total);
  std::vector<std::size_t> idx(dim, 0);
  for (std::size_t m = 0; m < total; ++m) {
    std::vector<double> p(dim);
    for (std::size_t d = 0; d < dim; ++d) {
      double offset = shift[d];
      if (seed) offset = std::fmod(shift[d] + static_cast<double>(m) * kAlpha[d % 12], 1.0);
      const double h = box[d].width() / static_cast<double>(counts[d]);
      p[d] = box[d].lo + (static_cast<double>(idx[d]) + offset) * h;
    }
    out.push_back(std::move(p));
    for (std::size_t d = dim; d-- > 0;) {
      if (++idx[d] < counts[d]) break;
      idx[d] = 0;
    }
  }
  return out;
}

/// Endpoint-inclusive grid; node i is (lo·(n−1−i) + hi·i)/(n−1), so symmetric
/// boxes with odd n contain 0 exactly.
inline std::vector<std::vector<double>> grid(const std::vector<Interval>& box, const std::vector<std::size_t>& counts) {
  const std::size_t dim = box.size();
  std::size_t total = 1;
  for (auto c : counts) total *= c;
  std::vector<std::vector<double>> out;
  out.reserve(total);
  std::vector<std::size_t> idx(dim, 0);
  for (std::size_t m = 0; m < total; ++m) {
    std::vector<double> p(dim);
    for (std::size_t d = 0; d < dim; ++d) {
      const double n1 = static_cast<double>(counts[d] - 1);
      const double i = static_cast<double>(idx[d]);
      const double hi = box[d].periodic ? box[d].lo + geometry::kTwoPi * n1 / static_cast<double>(counts[d]) : box[d].hi;
      p[d] = counts[d] == 1 ? box[d].center() : (box[d].lo * (n1 - i) + hi * i) / n1;
    }
    out.push_back(std::move(p));
    for (std::size_t d = dim; d-- > 0;) {
      if (++idx[d] < counts[d]) break;
      idx[d] = 0;
    }
  }
  return out;
}

inline std::size_t scaled(std::size_t count, double scale, std::size_t minimum = 2) {
  const auto v = static_cast<std::size_t>(std::lround(static_cast<double>(count) * scale));
  return std::max(minimum, v);
}

}  // namespace contact::sampling
