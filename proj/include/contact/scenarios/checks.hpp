#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "contact/moment.hpp"
#include "contact/potential.hpp"
#include "contact/reduction.hpp"
#include "contact/sampling.hpp"
#include "contact/scenarios/scenario.hpp"

namespace contact::scenarios {

using geometry::Point;

struct RunOptions {
  double sample_scale = 1.0;
  std::optional<std::uint64_t> seed;
  std::size_t workers = 0;  // 0: available parallelism
  std::map<std::string, double> tolerances;
};

struct Outcome {
  double residual = 0.0;
  std::size_t samples = 0;
};

/// Objects shared by the checks of one run. Built once, single-threaded,
/// then only read.
class Model {
 public:
  Model(const Scenario& s, const RunOptions& o) : s_(s), scale_(o.sample_scale), seed_(o.seed.value_or(s.samples.seed)) {
    if (!(scale_ > 0.0)) throw std::invalid_argument("sample scale must be positive");
  }

  const Scenario& scenario() const { return s_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t count(std::size_t n) const { return sampling::scaled(n, scale_); }

  std::vector<std::vector<double>> lattice(const Chart& c, std::size_t per_axis, std::uint64_t family) const {
    return sampling::lattice(c.box(), std::vector<std::size_t>(c.dim(), count(per_axis)), seed_ + family);
  }

  std::vector<Point> m_points() const {
    std::vector<Point> out;
    for (std::size_t c = 0; c < s_.atlas.size(); ++c)
      for (auto& x : lattice(s_.atlas.chart(c), s_.samples.m, 1)) out.push_back({c, std::move(x)});
    return out;
  }

  /// Tube chart box with imaginary parts within `radius`.
  std::vector<Interval> tube_box(std::size_t c, double radius) const { return thin_box(*s_.tube, c, radius); }

  static std::vector<Interval> thin_box(const complexify::TubeComplexification& tube, std::size_t c, double radius) {
    auto box = tube.chart(c).box();
    for (std::size_t i = tube.n(c); i < box.size(); ++i) box[i] = Interval::closed(-radius, radius);
    return box;
  }

  /// Points of the tube whose imaginary parts lie within `radius`.
  std::vector<Point> tube_points(double radius, std::size_t per_axis, std::uint64_t family = 2) const {
    std::vector<Point> out;
    for (std::size_t c = 0; c < s_.tube->size(); ++c) {
      const Chart shrunk(s_.tube->chart(c).name(), s_.tube->chart(c).coords(), tube_box(c, radius));
      for (auto& x : lattice(shrunk, per_axis, family)) out.push_back({c, std::move(x)});
    }
    return out;
  }
  std::vector<Point> tube_points() const { return tube_points(radius(), s_.samples.tube); }

  /// Builds what the listed checks need.
  void prepare(const std::set<std::string>& ids) {
    const auto any = [&](std::initializer_list<const char*> prefixes) {
      for (const auto& id : ids)
        for (const char* p : prefixes)
          if (id.rfind(p, 0) == 0) return true;
      return false;
    };
    const bool need_rho = any({"invariance_rho", "extension_", "dc_", "spsh", "kahler_", "cr_", "moment_", "hamiltonian", "compatibility", "kappa_",
                               "symplectify_", "strata_"});
    if (!need_rho) return;
    try {
      build_potential();
      if (s_.quotient.holomorphic && any({"kahler_reduce", "compatibility", "cr_reduce", "kappa_"})) red_ = reduction::kahler_reduce(rho_, s_.action, *s_.quotient.holomorphic);
      if (s_.quotient.contact) eta_red_ = reduction::contact_reduce(s_.eta, *s_.quotient.contact).eta_red;
      if (any({"strata_"})) build_strata();
    } catch (const std::exception& e) {
      error_ = e.what();
    }
  }

  const complexify::FieldPtr& rho() const {
    require();
    return rho_;
  }
  const complexify::FieldPtr& nu() const {
    require();
    return nu_;
  }
  double lambda() const {
    require();
    return lambda_;
  }
  double radius() const {
    require();
    return radius_;
  }
  const complexify::SpshReport& sweep_report() const { return sweep_; }
  const reduction::KahlerReducedField& reduced() const {
    require();
    if (!red_) throw std::logic_error("Kähler quotient not built");
    return *red_;
  }
  const geometry::OneForm& eta_red() const { return eta_red_; }
  const std::vector<reduction::StratumReport>& strata() const {
    require();
    return strata_;
  }

  std::vector<Expression> moment(std::size_t chart) const {
    if (!s_.group().continuous()) return {};
    return moment::contact_moment_expressions(s_.eta, *s_.action, chart);
  }

  /// Reduced tube samples, imaginary box as declared.
  std::vector<std::vector<double>> reduced_points(std::uint64_t family = 7) const { return lattice(s_.quotient.holomorphic->reduced, s_.samples.reduced, family); }

 private:
  void require() const {
    if (!error_.empty()) throw std::runtime_error("potential construction failed: " + error_);
  }

  void build_potential() {
    const auto& cx = s_.cx;
    potential::PartitionOfUnity partition;
    if (cx.partition == "trivial") {
      partition = potential::PartitionOfUnity::trivial(s_.atlas);
    } else if (cx.partition == "boxes") {
      partition = potential::PartitionOfUnity::boxes(s_.atlas);
    } else {
      for (const auto& c : s_.atlas.charts()) partition.bumps.push_back(potential::radial_bump(c, cx.bump_radius));
      partition.normalized = true;
    }
    complexify::FieldPtr rho0 = potential::patch(s_.tube, partition, s_.eta);
    complexify::FieldPtr nu = potential::convexifier(s_.tube, partition, cx.weights);
    if (cx.average) {
      rho0 = potential::average(rho0, *s_.action, cx.quadrature);
      nu = potential::average(nu, *s_.action, cx.quadrature);
    }
    nu_ = nu;
    const auto sweep = potential::sweep_lambda(
        rho0, nu, cx.radius, [&](double r) { return tube_points(r, s_.samples.tube); }, 0.0, 64.0, 5, cx.lambda,
        [&](double r) -> complexify::BoxOf { return [this, r](std::size_t c) { return tube_box(c, r); }; });
    rho_ = sweep.rho;
    lambda_ = sweep.lambda;
    radius_ = sweep.radius;
    sweep_ = sweep.spsh;
  }

  void build_strata() {
    for (const auto& spec : s_.quotient.strata) {
      const auto& st = spec.stratum;
      const std::size_t c = st.quotient.chart;
      std::vector<Point> members;
      if (st.level_empty) {
        const auto local = strata_on_chart(c);
        for (auto& x : lattice(s_.atlas.chart(c), s_.samples.m, 8)) {
          const auto* want = reduction::expected_stratum(local, x);
          if (want && want->label == st.label) members.push_back({c, std::move(x)});
        }
      }
      const auto base = st.level_empty ? std::vector<std::vector<double>>{} : lattice(st.quotient.base, s_.samples.base, 9);
      const auto params = st.level_empty ? std::vector<std::vector<double>>{} : lattice(st.quotient.level_params, s_.samples.level, 10);
      strata_.push_back(reduction::reduce_stratum(st, s_.eta, rho_, *s_.action, moment(c), base, params, members));
    }
  }

 public:
  /// The declared strata as seen from chart c (strata without a zero set
  /// there are dropped unless they are the complement).
  std::vector<reduction::Stratum> strata_on_chart(std::size_t c) const {
    std::vector<reduction::Stratum> out;
    for (const auto& spec : s_.quotient.strata) {
      auto st = spec.stratum;
      if (spec.zero_sets.empty()) {
        st.zero_set = Expression{};
      } else {
        const auto it = spec.zero_sets.find(c);
        if (it == spec.zero_sets.end()) continue;
        st.zero_set = it->second;
      }
      out.push_back(std::move(st));
    }
    return out;
  }

 private:
  const Scenario& s_;
  double scale_;
  std::uint64_t seed_;
  complexify::FieldPtr rho_, nu_;
  double lambda_ = 0.0, radius_ = 0.0;
  complexify::SpshReport sweep_;
  std::shared_ptr<const reduction::KahlerReducedField> red_;
  geometry::OneForm eta_red_;
  std::vector<reduction::StratumReport> strata_;
  std::string error_;
};

using CheckFn = std::function<Outcome(const Model&)>;

namespace detail {

inline double worst(double a, double b) { return std::isnan(a) || std::isnan(b) ? std::numeric_limits<double>::quiet_NaN() : std::max(a, b); }

inline Outcome transitions(const Model& m) {
  const auto& s = m.scenario();
  std::size_t a = 0, b = 0;
  const double base = geometry::transition_inverse_residual(s.atlas, m.m_points(), &a);
  const double tube = geometry::transition_inverse_residual(s.tube->atlas(), m.tube_points(s.cx.radius, s.samples.tube), &b);
  return {std::max(base, tube), a + b};
}

inline Outcome contact_min(const Model& m) {
  const auto& s = m.scenario();
  const auto pts = m.m_points();
  const auto r = geometry::contact_check(s.atlas, s.eta, pts);
  return {r.min_abs, r.samples};
}

inline Outcome invariance_eta(const Model& m) {
  const auto& s = m.scenario();
  const auto pts = m.m_points();
  const auto r = symmetry::invariance_residual(*s.action, s.eta, pts, s.group().sample_elements());
  return {r.max, pts.size()};
}

inline Outcome action_laws(const Model& m) {
  const auto& s = m.scenario();
  const auto pts = m.m_points();
  auto r = s.action->law_residual(pts);
  double worst = std::max(r.identity, r.composition);
  std::size_t n = pts.size();
  if (s.action->has_tube()) {
    const auto tp = m.tube_points(s.cx.radius, s.samples.tube);
    r = s.action->law_residual(tp, true);
    worst = std::max({worst, r.identity, r.composition});
    n += tp.size();
  }
  return {worst, n};
}

inline Outcome invariance_rho(const Model& m) {
  const auto& s = m.scenario();
  const auto pts = m.tube_points();
  const auto r = symmetry::invariance_residual(*s.action, *m.rho(), pts, s.group().sample_elements(), true);
  return {r.max, pts.size()};
}

inline Outcome extension(const Model& m, bool vanishing) {
  const auto& s = m.scenario();
  const auto r = potential::extension_residual(*m.rho(), *s.tube, s.eta, m.m_points());
  return {vanishing ? r.vanishing : r.pullback, r.samples};
}

inline Outcome dc_convention(const Model& m) {
  const auto pts = m.tube_points();
  double worst = 0.0;
  for (const auto& p : pts) {
    const auto f = complexify::local_jet(*m.rho(), p.chart, p.coords);
    worst = std::max(worst, (complexify::dc(f) - complexify::dc_directional(*m.rho(), p.chart, p.coords)).cwiseAbs().maxCoeff());
  }
  return {worst, pts.size()};
}

inline Outcome spsh(const Model& m, bool symmetry) {
  const auto pts = m.tube_points();
  const double radius = m.radius();
  const auto r = symmetry ? complexify::spsh_check(*m.rho(), pts)
                          : complexify::spsh_check_refined(*m.rho(), pts, [&](std::size_t c) { return m.tube_box(c, radius); });
  return {symmetry ? r.max_asymmetry : r.min_eigenvalue, r.samples};
}

inline Outcome averaging_quadrature(const Model& m) {
  const auto nodes = potential::haar_nodes(m.scenario().group(), m.scenario().cx.quadrature);
  double sum = 0.0;
  for (const auto& g : nodes) sum += std::cos(g[0]) * std::cos(g[0]);
  return {std::abs(sum / static_cast<double>(nodes.size()) - 0.5), nodes.size()};
}

inline Outcome cr(const Model& m, bool dimension) {
  const auto& s = m.scenario();
  complexify::CRHypersurface h;
  for (const auto& seed : m.tube_points(m.radius(), s.samples.cr, 3)) {
    try {
      auto z = complexify::project_to_level(*m.rho(), seed.chart, seed.coords);
      complexify::accumulate_cr(h, complexify::local_jet(*m.rho(), seed.chart, z), {seed.chart, z});
    } catch (const complexify::ConvergenceError&) {
    }
  }
  if (h.points.empty()) throw std::runtime_error("no seed converged to ρ⁻¹(0)");
  if (!dimension) return {h.levi_min, h.points.size()};
  const double want = 2.0 * static_cast<double>(s.atlas.dim()) - 2.0;
  return {std::max(std::abs(static_cast<double>(h.min_dim) - want), std::abs(static_cast<double>(h.max_dim) - want)), h.points.size()};
}

inline Outcome moment_extension(const Model& m) {
  const auto& s = m.scenario();
  const auto r = moment::extension_residual(*m.rho(), *s.tube, s.eta, *s.action, m.m_points());
  return {r.max, r.samples};
}

inline Outcome moment_equivariance(const Model& m) {
  const auto& s = m.scenario();
  const auto r = moment::equivariance_residual(*m.rho(), *s.action, m.tube_points(), s.group().sample_elements());
  return {r.max, r.samples};
}

inline Outcome hamiltonian(const Model& m) {
  const auto& s = m.scenario();
  const auto pts = m.tube_points();
  double worst = 0.0;
  for (const auto& xi : s.action->lie_basis()) worst = std::max(worst, moment::hamiltonian_residual(*m.rho(), *s.action, xi, pts).max);
  return {worst, pts.size()};
}

inline Outcome frame(const Model& m, bool potential_part) {
  const auto& s = m.scenario();
  const auto fd = potential::frame_decompose(s.eta, *s.presentation);
  const auto& product = s.presentation->product;
  const auto xs = m.lattice(product, s.samples.m, 4);
  if (!potential_part) return {potential::reconstruction_residual(fd, xs), xs.size()};
  const auto tube = std::make_shared<const complexify::TubeComplexification>(complexify::complexify_atlas(geometry::Atlas::single(product), s.cx.radius));
  const auto pp = potential::product_potential(fd, tube->chart(0));
  const auto field = complexify::make_expr_field({pp.total()});
  std::vector<Point> pts;
  for (const auto& x : xs) pts.push_back({0, x});
  const auto r = potential::extension_residual(*field, *tube, geometry::OneForm({fd.pulled}), pts);
  return {std::max(r.vanishing, r.pullback), r.samples};
}

inline std::vector<std::vector<double>> level_params(const Model& m) { return m.lattice(m.scenario().quotient.contact->level_params, m.scenario().samples.level, 5); }
inline std::vector<std::vector<double>> base_points(const Model& m) { return m.lattice(m.scenario().quotient.contact->base, m.scenario().samples.base, 6); }

inline Outcome zero_level(const Model& m) {
  const auto& q = *m.scenario().quotient.contact;
  const auto ps = level_params(m);
  const auto z = moment::zero_level(m.moment(q.chart), q.chart, q.level, ps, std::numeric_limits<double>::infinity());
  return {z.max_residual, z.points.size()};
}

inline Outcome quotient_section(const Model& m) {
  const auto bs = base_points(m);
  return {reduction::section_residual(*m.scenario().quotient.contact, bs), bs.size()};
}

inline Outcome quotient_orbit(const Model& m) {
  const auto& s = m.scenario();
  const auto& q = *s.quotient.contact;
  const auto pts = reduction::level_points(q, level_params(m));
  return {reduction::orbit_residual(q, *s.action, s.atlas.chart(q.chart), pts), pts.size()};
}

inline Outcome contact_reduce(const Model& m, int which) {
  const auto& s = m.scenario();
  const auto& q = *s.quotient.contact;
  const auto red = reduction::contact_reduce(s.eta, q).eta_red;
  if (which == 0) {
    const auto bs = base_points(m);
    return {reduction::form_residual(red, *s.quotient.eta_red, bs), bs.size()};
  }
  const auto ps = level_params(m);
  const auto form = which == 1 ? red : reduction::perturb(red, q.base, 1e-3);
  return {reduction::defining_residual(s.eta, q, form, ps), ps.size()};
}

inline Outcome kahler_reduce(const Model& m, bool positivity) {
  const auto& s = m.scenario();
  const auto qs = m.reduced_points();
  if (positivity) {
    std::vector<Point> pts;
    for (const auto& q : qs) pts.push_back({0, q});
    const auto box = s.quotient.holomorphic->reduced.box();
    const auto r = complexify::spsh_check_refined(m.reduced(), pts, [&](std::size_t) { return box; });
    return {r.min_eigenvalue, r.samples};
  }
  const auto r = reduction::kahler_defining_residual(m.reduced(), *m.rho(), *s.action, qs, s.group().sample_elements());
  return {std::max(r.identity, r.projection), r.samples};
}

inline Outcome compatibility(const Model& m, bool omega) {
  const auto& s = m.scenario();
  const auto r = reduction::compatibility_check(m.reduced(), *s.quotient.holomorphic, m.eta_red(), m.lattice(s.quotient.holomorphic->base, s.samples.base, 6));
  return {omega ? r.omega : std::max(r.form, r.vanishing), r.samples};
}

inline Outcome cr_reduce(const Model& m, bool levi) {
  std::vector<Point> seeds;
  for (const auto& q : m.reduced_points(11)) seeds.push_back({0, q});
  const auto r = reduction::cr_reduce(m.reduced(), seeds);
  if (r.points == 0) throw std::runtime_error("no seed converged to ρ_red⁻¹(0)");
  return {levi ? r.levi_min : r.contact_min, r.points};
}

inline Outcome kappa(const Model& m, int which) {
  const auto& s = m.scenario();
  const auto all = m.reduced_points(12);
  const std::size_t want = std::min(all.size(), m.count(s.samples.kappa));
  std::vector<std::vector<double>> qs;
  for (std::size_t i = 0; i < want; ++i) qs.push_back(all[i * all.size() / want]);
  const auto r = reduction::kappa_rank_check(*m.rho(), *s.action, m.reduced(), qs, 1e-8);
  const auto gap = [](std::size_t lo, std::size_t hi, std::size_t e) {
    return static_cast<double>(std::max(hi > e ? hi - e : 0, e > lo ? e - lo : 0));
  };
  const double res = which == 0 ? gap(r.ker_dmu_min, r.ker_dmu_max, r.expected_ker)
                     : which == 1 ? gap(r.complement_min, r.complement_max, r.expected_complement)
                                  : gap(r.rank_min, r.rank_max, r.expected_complement);
  return {res, r.samples};
}

// Per-axis resolution on a (d+1)-dimensional box keeping about n^d points.
inline std::size_t one_more_axis(std::size_t n, std::size_t d) {
  return std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(n), static_cast<double>(d) / static_cast<double>(d + 1)))));
}

inline Outcome symplectify(const Model& m, int which) {
  const auto& s = m.scenario();
  const std::size_t n = s.atlas.dim();
  const auto sp = reduction::symplectify(*s.tube, m.rho(), m.nu(), s.cx.symplectify_lambda, s.cx.t_range);
  if (which == 2) {
    std::vector<Point> pts;
    const double radius = m.radius();
    for (std::size_t c = 0; c < sp.tube->size(); ++c) {
      const auto box = Model::thin_box(*sp.tube, c, radius);
      for (auto& x : m.lattice(Chart(sp.tube->chart(c).name(), sp.tube->chart(c).coords(), box), one_more_axis(s.samples.tube, 2 * n), 13)) pts.push_back({c, std::move(x)});
    }
    const auto r = complexify::spsh_check_refined(*sp.rho_hat, pts, [&](std::size_t c) { return Model::thin_box(*sp.tube, c, radius); });
    return {r.min_eigenvalue, r.samples};
  }
  std::vector<Point> pts;
  for (std::size_t c = 0; c < sp.tube->size(); ++c)
    for (auto& x : m.lattice(sp.tube->base().chart(c), one_more_axis(s.samples.m, n), 14)) pts.push_back({c, std::move(x)});
  const auto r = reduction::symplectify_check(sp, s.eta, pts);
  return {which == 0 ? r.omega : r.slice, r.samples};
}

inline Outcome isotropy(const Model& m) {
  const auto& s = m.scenario();
  std::size_t mismatches = 0, n = 0;
  for (std::size_t c = 0; c < s.atlas.size(); ++c) {
    const auto& chart = s.atlas.chart(c);
    const auto local = m.strata_on_chart(c);
    std::vector<Point> pts;
    for (auto& x : sampling::grid(chart.box(), std::vector<std::size_t>(chart.dim(), s.samples.isotropy | 1))) pts.push_back({c, std::move(x)});
    const auto r = reduction::isotropy_check(*s.action, local, pts);
    mismatches += r.mismatches;
    n += r.samples;
  }
  return {static_cast<double>(mismatches), n};
}

/// Worst value of one stratum field over the non-empty strata.
inline Outcome strata(const Model& m, const std::string& field) {
  double value = std::numeric_limits<double>::quiet_NaN();
  std::size_t n = 0;
  const bool lower = field == "contact_min" || field == "totally_real_min" || field == "empty";
  for (const auto& r : m.strata()) {
    if ((field == "empty") != r.empty) continue;
    double v = 0.0;
    if (field == "contact_min") v = r.contact_min;
    else if (field == "totally_real_min") v = r.totally_real_min;
    else if (field == "pullback") v = r.pullback;
    else if (field == "vanishing") v = r.vanishing;
    else if (field == "certificate") v = r.certificate;
    else if (field == "orbit") v = r.orbit;
    else v = r.empty_margin;
    value = std::isnan(value) ? v : (lower ? std::min(value, v) : std::max(value, v));
    n += r.samples;
  }
  if (std::isnan(value)) value = lower ? std::numeric_limits<double>::infinity() : 0.0;
  return {value, n};
}

}  // namespace detail

inline const std::map<std::string, CheckFn>& check_functions() {
  using namespace detail;
  static const std::map<std::string, CheckFn> f = {
      {"transitions", transitions},
      {"contact_min", contact_min},
      {"invariance_eta", invariance_eta},
      {"action_laws", action_laws},
      {"invariance_rho", invariance_rho},
      {"extension_vanishing", [](const Model& m) { return extension(m, true); }},
      {"extension_pullback", [](const Model& m) { return extension(m, false); }},
      {"dc_convention", dc_convention},
      {"spsh_min", [](const Model& m) { return spsh(m, false); }},
      {"kahler_symmetry", [](const Model& m) { return spsh(m, true); }},
      {"averaging_quadrature", averaging_quadrature},
      {"cr_levi_min", [](const Model& m) { return cr(m, false); }},
      {"cr_dim", [](const Model& m) { return cr(m, true); }},
      {"moment_extension", moment_extension},
      {"moment_equivariance", moment_equivariance},
      {"hamiltonian", hamiltonian},
      {"frame_reconstruction", [](const Model& m) { return frame(m, false); }},
      {"product_potential_pullback", [](const Model& m) { return frame(m, true); }},
      {"zero_level", zero_level},
      {"quotient_section", quotient_section},
      {"quotient_orbit", quotient_orbit},
      {"contact_reduce", [](const Model& m) { return contact_reduce(m, 0); }},
      {"contact_reduce_certificate", [](const Model& m) { return contact_reduce(m, 1); }},
      {"contact_reduce_perturbation_min", [](const Model& m) { return contact_reduce(m, 2); }},
      {"kahler_reduce", [](const Model& m) { return kahler_reduce(m, false); }},
      {"kahler_reduce_spsh_min", [](const Model& m) { return kahler_reduce(m, true); }},
      {"compatibility", [](const Model& m) { return compatibility(m, false); }},
      {"compatibility_omega", [](const Model& m) { return compatibility(m, true); }},
      {"cr_reduce_contact_min", [](const Model& m) { return cr_reduce(m, false); }},
      {"cr_reduce_levi_min", [](const Model& m) { return cr_reduce(m, true); }},
      {"kappa_ker_dmu", [](const Model& m) { return kappa(m, 0); }},
      {"kappa_complement", [](const Model& m) { return kappa(m, 1); }},
      {"kappa_rank", [](const Model& m) { return kappa(m, 2); }},
      {"symplectify_omega", [](const Model& m) { return symplectify(m, 0); }},
      {"symplectify_slice", [](const Model& m) { return symplectify(m, 1); }},
      {"symplectify_spsh_min", [](const Model& m) { return symplectify(m, 2); }},
      {"isotropy", isotropy},
      {"strata_contact_min", [](const Model& m) { return strata(m, "contact_min"); }},
      {"strata_totally_real_min", [](const Model& m) { return strata(m, "totally_real_min"); }},
      {"strata_pullback", [](const Model& m) { return strata(m, "pullback"); }},
      {"strata_vanishing", [](const Model& m) { return strata(m, "vanishing"); }},
      {"strata_certificate", [](const Model& m) { return strata(m, "certificate"); }},
      {"strata_orbit", [](const Model& m) { return strata(m, "orbit"); }},
      {"strata_empty_levels", [](const Model& m) { return strata(m, "empty"); }},
  };
  return f;
}

}  // namespace contact::scenarios
