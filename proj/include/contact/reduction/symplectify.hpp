#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "contact/complexify.hpp"
#include "contact/geometry.hpp"

namespace contact::reduction {

using complexify::TubeComplexification;

/// ρ̂(m, t + is) = e^t ρ_M(m) + λ(ν_M(m) + t² + s²) on the tube of M×ℝ, whose
/// charts list (m, t, Im m, s).
class SymplectifiedField final : public complexify::Field {
 public:
  SymplectifiedField(complexify::FieldPtr rho, complexify::FieldPtr nu, double lambda, std::vector<std::size_t> n)
      : rho_(std::move(rho)), nu_(std::move(nu)), lambda_(lambda), n_(std::move(n)) {}

  Jet evaluate(std::size_t chart, std::span<const Jet> z) const override {
    const std::size_t n = n_.at(chart);
    std::vector<Jet> m;
    for (std::size_t i = 0; i < n; ++i) m.push_back(z[i]);
    for (std::size_t i = 0; i < n; ++i) m.push_back(z[n + 1 + i]);
    const Jet& t = z[n];
    const Jet& s = z[2 * n + 1];
    const double et = std::exp(t.value());
    Jet out = t.apply(et, et, et) * rho_->evaluate(chart, m);
    if (lambda_ != 0.0) {
      Jet conv = t * t + s * s;
      if (nu_) conv += nu_->evaluate(chart, m);
      out += lambda_ * conv;
    }
    return out;
  }

 private:
  complexify::FieldPtr rho_, nu_;
  double lambda_;
  std::vector<std::size_t> n_;
};

struct Symplectification {
  std::shared_ptr<const TubeComplexification> tube;  // tube of M×ℝ
  complexify::FieldPtr rho_hat;
};

namespace detail {

inline std::string fresh_name(const Chart& c, std::string name) {
  while (std::find(c.coords().begin(), c.coords().end(), name) != c.coords().end()) name += "_";
  return name;
}

}  // namespace detail

/// Builds M×ℝ and its tube (M^c × ℂ) from the tube of M, with ρ̂ as above.
inline Symplectification symplectify(const TubeComplexification& m_tube, complexify::FieldPtr rho, complexify::FieldPtr nu, double lambda,
                                     geometry::Interval t_range = geometry::Interval::closed(-1, 1)) {
  const auto& base = m_tube.base();
  std::vector<Chart> prod, tubes;
  std::vector<std::size_t> dims;
  std::vector<double> radius;
  for (std::size_t c = 0; c < base.size(); ++c) {
    const auto& mc = base.chart(c);
    const auto& tc = m_tube.chart(c);
    const std::size_t n = mc.dim();
    const auto t = detail::fresh_name(tc, "t");
    const auto s = detail::fresh_name(tc, "s");
    auto names = mc.coords();
    names.push_back(t);
    auto box = mc.box();
    box.push_back(t_range);
    prod.emplace_back(mc.name() + "xR", names, box);
    std::vector<std::string> tnames(tc.coords().begin(), tc.coords().begin() + static_cast<std::ptrdiff_t>(n));
    tnames.push_back(t);
    tnames.insert(tnames.end(), tc.coords().begin() + static_cast<std::ptrdiff_t>(n), tc.coords().end());
    tnames.push_back(s);
    std::vector<geometry::Interval> tbox(tc.box().begin(), tc.box().begin() + static_cast<std::ptrdiff_t>(n));
    tbox.push_back(t_range);
    tbox.insert(tbox.end(), tc.box().begin() + static_cast<std::ptrdiff_t>(n), tc.box().end());
    tbox.push_back(geometry::Interval::closed(-m_tube.radius(c), m_tube.radius(c)));
    tubes.emplace_back(tc.name() + "xC", tnames, tbox);
    dims.push_back(n);
    radius.push_back(m_tube.radius(c));
  }
  // Transitions act on the M factor and fix t (and s).
  const auto extend = [](const geometry::Transition& tr, const Chart& from, std::size_t n_from, std::size_t n_to, bool tube) {
    const auto& scope = from.scope();
    std::vector<Expression> repl;
    const std::size_t inner = tube ? 2 * n_from : n_from;
    for (std::size_t i = 0; i < inner; ++i) {
      const std::size_t at = tube ? (i < n_from ? i : i + 1) : i;
      repl.push_back(expr::variable(scope, at));
    }
    std::vector<Expression> out;
    for (std::size_t i = 0; i < tr.map.size(); ++i) {
      out.push_back(expr::substitute(tr.map[i], repl));
      if (tube && i + 1 == n_to) out.push_back(expr::variable(scope, n_from));
    }
    out.push_back(expr::variable(scope, tube ? 2 * n_from + 1 : n_from));
    return geometry::Transition{tr.from, tr.to, std::move(out)};
  };
  std::vector<geometry::Transition> pt, tt;
  for (const auto& tr : base.transitions()) pt.push_back(extend(tr, prod[tr.from], dims[tr.from], dims[tr.to], false));
  for (const auto& tr : m_tube.atlas().transitions()) tt.push_back(extend(tr, tubes[tr.from], dims[tr.from], dims[tr.to], true));
  auto tube = std::make_shared<const TubeComplexification>(geometry::Atlas(prod, pt), tubes, radius, tt);
  auto field = std::make_shared<SymplectifiedField>(std::move(rho), std::move(nu), lambda, dims);
  return {std::move(tube), std::move(field)};
}

struct SymplectifyReport {
  double omega = 0.0;  // max |ι*dd^cρ̂ − (e^t dt∧η + e^t dη)|
  double slice = 0.0;  // max |ι*d^cρ̂ − η| on t = 0
  std::size_t samples = 0;
};

/// Samples are points (m, t) of M×ℝ.
inline SymplectifyReport symplectify_check(const Symplectification& s, const geometry::OneForm& eta, std::span<const Point> samples) {
  SymplectifyReport r;
  for (const auto& p : samples) {
    const std::size_t n = p.coords.size() - 1;
    const auto ni = static_cast<Eigen::Index>(n);
    const std::span<const double> m(p.coords.data(), n);
    const double et = std::exp(p.coords[n]);
    const Vec a = eta.value(p.chart, m);
    Mat expected = Mat::Zero(ni + 1, ni + 1);
    expected.topLeftCorner(ni, ni) = et * geometry::exterior_derivative(eta.coefficients(p.chart), m);
    expected.block(ni, 0, 1, ni) += et * a.transpose();
    expected.block(0, ni, ni, 1) -= et * a;
    const auto z = s.tube->embed(p);
    const auto f = complexify::local_jet(*s.rho_hat, p.chart, z.coords);
    r.omega = std::max(r.omega, (complexify::ddc(f).topLeftCorner(ni + 1, ni + 1) - expected).cwiseAbs().maxCoeff());

    auto at_zero = z.coords;
    at_zero[n] = 0.0;
    const auto f0 = complexify::local_jet(*s.rho_hat, p.chart, at_zero);
    r.slice = std::max(r.slice, (complexify::dc(f0).head(ni) - a).cwiseAbs().maxCoeff());
    ++r.samples;
  }
  return r;
}

}  // namespace contact::reduction
