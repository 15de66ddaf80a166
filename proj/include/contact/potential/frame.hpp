#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "contact/complexify.hpp"

namespace contact::potential {

using expr::Expression;
using geometry::Chart;

/// P: G×S → M on one chart. The product chart lists the k group coordinates
/// first (identity at 0), then the coordinates of S.
struct ProductPresentation {
  Chart product;
  std::size_t group_dim = 0;
  std::size_t m_chart = 0;
  std::vector<Expression> to_m;  // product scope, one per coordinate of M
};

/// π*η = Σ f_j(s) dg_j + σ_S(s) on G×S.
struct FrameDecomposition {
  ProductPresentation presentation;
  expr::ScopePtr s_scope;
  std::vector<Expression> f;       // s_scope
  std::vector<Expression> sigma;   // s_scope
  std::vector<Expression> pulled;  // product scope

  std::size_t k() const { return presentation.group_dim; }
  std::size_t m() const { return presentation.product.dim() - k(); }
};

inline FrameDecomposition frame_decompose(const geometry::OneForm& eta, ProductPresentation pres) {
  const auto& prod = pres.product;
  if (pres.group_dim > prod.dim()) throw std::invalid_argument("frame: group dimension exceeds product dimension");
  const auto& target = eta.coefficients(pres.m_chart);
  if (pres.to_m.size() != target.size()) throw std::invalid_argument("frame: presentation must map onto every coordinate of M");
  if (prod.dim() != target.size()) throw std::invalid_argument("frame: G×S and M differ in dimension");

  FrameDecomposition fd;
  fd.pulled = geometry::pullback(pres.to_m, target);
  const std::size_t k = pres.group_dim;
  fd.s_scope = expr::make_scope(std::vector<std::string>(prod.coords().begin() + static_cast<std::ptrdiff_t>(k), prod.coords().end()));
  std::vector<Expression> at_identity;
  for (std::size_t i = 0; i < prod.dim(); ++i)
    at_identity.push_back(i < k ? expr::constant(fd.s_scope, 0.0) : expr::variable(fd.s_scope, i - k));
  for (std::size_t i = 0; i < prod.dim(); ++i) {
    auto c = expr::substitute(fd.pulled[i], at_identity);
    (i < k ? fd.f : fd.sigma).push_back(std::move(c));
  }
  fd.presentation = std::move(pres);
  return fd;
}

/// max |π*η − (Σ f_j dg_j + σ_S)| at points of G×S (product coordinates).
inline double reconstruction_residual(const FrameDecomposition& fd, std::span<const std::vector<double>> samples) {
  double worst = 0.0;
  const std::size_t k = fd.k();
  for (const auto& x : samples) {
    const std::span<const double> s(x.data() + k, x.size() - k);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double lhs = expr::evaluate(fd.pulled[i], x);
      const double rhs = expr::evaluate(i < k ? fd.f[i] : fd.sigma[i - k], s);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

struct ProductPotential {
  Expression group_part;  // Θ = Σ F_j(s) Im g_j
  Expression slice_part;  // θ = Σ σ_i(s) Im s_i
  Expression total() const { return group_part + slice_part; }
};

/// Builds Θ + θ on the tube chart of G×S, whose coordinates are the product
/// coordinates followed by their imaginary partners. F_j and σ_i are the
/// frame coefficients extended constantly in the imaginary directions.
inline ProductPotential product_potential(const FrameDecomposition& fd, const Chart& product_tube) {
  const std::size_t k = fd.k(), m = fd.m(), n = k + m;
  if (product_tube.dim() != 2 * n) throw std::invalid_argument("product_potential: tube chart must have 2·dim(G×S) coordinates");
  const auto& scope = product_tube.scope();
  std::vector<Expression> s_in_tube;
  for (std::size_t i = 0; i < m; ++i) s_in_tube.push_back(expr::variable(scope, k + i));
  const auto lift = [&](const Expression& e) { return m == 0 ? Expression(expr::constant(scope, expr::evaluate(e, std::span<const double>{}))) : expr::substitute(e, s_in_tube); };
  ProductPotential out{expr::constant(scope, 0.0), expr::constant(scope, 0.0)};
  for (std::size_t j = 0; j < k; ++j) out.group_part = out.group_part + lift(fd.f[j]) * expr::variable(scope, n + j);
  for (std::size_t i = 0; i < m; ++i) out.slice_part = out.slice_part + lift(fd.sigma[i]) * expr::variable(scope, n + k + i);
  return out;
}

}  // namespace contact::potential
