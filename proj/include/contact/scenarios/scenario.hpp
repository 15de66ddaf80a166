#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "contact/complexify.hpp"
#include "contact/potential/frame.hpp"
#include "contact/reduction.hpp"
#include "contact/symmetry.hpp"

namespace contact::scenarios {

using json = nlohmann::ordered_json;
using expr::Expression;
using geometry::Chart;
using geometry::Interval;

/// Load and validation failures. The message starts with the field path.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CheckSpec {
  std::string id;
  double tolerance = 0.0;
};

/// Per-axis lattice resolutions for each sample family.
struct SampleSpec {
  std::uint64_t seed = 42;
  std::size_t m = 10;         // points of M, per chart
  std::size_t tube = 3;       // points of the tube, per chart
  std::size_t base = 20;      // reduced contact base
  std::size_t level = 8;      // level-set parameters
  std::size_t reduced = 4;    // reduced tube
  std::size_t cr = 3;         // seeds for the CR hypersurface
  std::size_t isotropy = 21;  // endpoint grid, odd so the fixed sets are hit exactly
  std::size_t kappa = 100;    // level samples for the rank checks
};

struct Complexification {
  double radius = 0.5;
  double lambda = 1.0;  // starting value of the λ sweep
  std::size_t quadrature = 64;
  std::string partition = "trivial";  // trivial | boxes | radial
  double bump_radius = 2.0;
  std::vector<Expression> weights;  // per chart, may be empty
  bool average = false;
  Interval t_range = Interval::closed(-1, 1);
  double symplectify_lambda = 2.0;
};

struct StratumSpec {
  reduction::Stratum stratum;
  std::map<std::size_t, Expression> zero_sets;  // chart → membership expression
};

struct QuotientSpec {
  std::optional<reduction::Quotient> contact;
  std::optional<geometry::OneForm> eta_red;  // closed-form oracle
  std::optional<reduction::HolomorphicQuotient> holomorphic;
  std::vector<StratumSpec> strata;
};

struct Scenario {
  std::string name;
  json source;
  geometry::Atlas atlas;
  geometry::OneForm eta;
  std::shared_ptr<const complexify::TubeComplexification> tube;
  std::shared_ptr<const symmetry::Action> action;
  std::optional<potential::ProductPresentation> presentation;
  Complexification cx;
  QuotientSpec quotient;
  SampleSpec samples;
  std::vector<CheckSpec> checks;

  const symmetry::GroupModel& group() const { return action->group(); }
};

namespace detail {

/// A JSON node with the path that leads to it, for error messages.
struct Node {
  const json& j;
  std::string path;

  [[noreturn]] void fail(const std::string& what) const { throw LoadError((path.empty() ? std::string("scenario") : path) + ": " + what); }

  bool has(const std::string& key) const { return j.is_object() && j.contains(key); }

  Node at(const std::string& key) const {
    if (!j.is_object()) fail("expected an object");
    const std::string p = path.empty() ? key : path + "." + key;
    if (!j.contains(key)) throw LoadError(p + ": required field missing");
    return {j.at(key), p};
  }
  Node at(std::size_t i) const { return {j.at(i), path + "[" + std::to_string(i) + "]"}; }

  std::size_t size() const {
    if (!j.is_array()) fail("expected an array");
    return j.size();
  }

  std::string str() const {
    if (!j.is_string()) fail("expected a string");
    return j.get<std::string>();
  }
  double number() const {
    if (!j.is_number()) fail("expected a number");
    return j.get<double>();
  }
  std::size_t count() const {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) fail("expected a non-negative integer");
    return j.get<std::size_t>();
  }
  bool boolean() const {
    if (!j.is_boolean()) fail("expected true or false");
    return j.get<bool>();
  }

  std::vector<std::string> strings() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).str());
    return out;
  }

  Expression expression(const expr::ScopePtr& scope) const {
    const auto text = str();
    try {
      return expr::parse(text, scope);
    } catch (const expr::ParseError& e) {
      fail("expression parse error in \"" + text + "\": " + e.what());
    }
  }

  std::vector<Expression> expressions(const expr::ScopePtr& scope, std::optional<std::size_t> expected = std::nullopt) const {
    std::vector<Expression> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).expression(scope));
    if (expected && out.size() != *expected)
      fail("expected " + std::to_string(*expected) + " expressions, got " + std::to_string(out.size()));
    return out;
  }

  Interval interval() const {
    if (j.is_string()) {
      if (j.get<std::string>() == "angle") return Interval::angle();
      fail("expected [lo, hi] or \"angle\"");
    }
    if (size() != 2) fail("expected [lo, hi]");
    const double lo = at(0).number(), hi = at(1).number();
    if (!(lo < hi)) fail("empty interval");
    return Interval::closed(lo, hi);
  }

  Chart chart() const {
    const auto name = at("name").str();
    const auto coords = at("coords").strings();
    const auto box = at("box");
    std::vector<Interval> b;
    for (std::size_t i = 0; i < box.size(); ++i) b.push_back(box.at(i).interval());
    try {
      return Chart(name, coords, b);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
};

inline std::size_t chart_index(const geometry::Atlas& atlas, const Node& n) {
  const auto name = n.str();
  const auto i = atlas.find(name);
  if (!i) n.fail("unknown chart '" + name + "'");
  return *i;
}

inline geometry::Atlas read_atlas(const Node& n, std::vector<std::tuple<std::size_t, std::size_t, std::vector<std::string>>>& declared,
                                  std::vector<const json*>& declared_nodes) {
  const auto charts = n.at("charts");
  std::vector<Chart> cs;
  for (std::size_t i = 0; i < charts.size(); ++i) cs.push_back(charts.at(i).chart());
  if (cs.empty()) charts.fail("at least one chart required");
  const geometry::Atlas names(cs);
  std::vector<geometry::Transition> ts;
  if (n.has("transitions")) {
    const auto tr = n.at("transitions");
    for (std::size_t i = 0; i < tr.size(); ++i) {
      const auto t = tr.at(i);
      const auto from = chart_index(names, t.at("from")), to = chart_index(names, t.at("to"));
      ts.push_back({from, to, t.at("map").expressions(cs[from].scope(), cs[to].dim())});
      if (t.has("tube_map")) {
        declared.emplace_back(from, to, t.at("tube_map").strings());
        declared_nodes.push_back(&t.j);
      }
    }
  }
  return geometry::Atlas(cs, ts);
}

inline reduction::HolomorphicQuotient read_holomorphic(const Node& n, const complexify::TubeComplexification& tube, std::size_t chart) {
  reduction::HolomorphicQuotient hq;
  hq.reduced = n.at("reduced").chart();
  hq.chart = chart;
  hq.base = n.at("base").chart();
  const auto& tc = tube.chart(chart);
  hq.slice = n.at("slice").expressions(hq.reduced.scope(), tc.dim());
  hq.projection = n.at("projection").expressions(tc.scope(), hq.reduced.dim());
  hq.embedding = n.at("embedding").expressions(hq.base.scope(), hq.reduced.dim());
  if (hq.reduced.dim() % 2 != 0) n.at("reduced").fail("reduced tube chart must have even dimension");
  return hq;
}

inline reduction::Quotient read_quotient(const Node& n, const geometry::Atlas& atlas, std::size_t chart) {
  reduction::Quotient q;
  q.chart = chart;
  const auto& m = atlas.chart(chart);
  q.base = n.at("base").chart();
  q.level_params = n.at("level_params").chart();
  q.level = n.at("level").expressions(q.level_params.scope(), m.dim());
  q.section = n.at("section").expressions(q.base.scope(), m.dim());
  q.projection = n.at("projection").expressions(m.scope(), q.base.dim());
  return q;
}

}  // namespace detail

/// Checks known to the runner, with their default tolerances.
struct CheckInfo {
  std::string id;
  bool lower_bound = false;  // pass iff residual > tolerance
  double tolerance = 1e-8;
  std::vector<std::string> after;  // prerequisites (when present in the list)
  std::string what;
};

inline const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> c = {
      {"transitions", false, 1e-10, {}, "inverse transitions compose to the identity"},
      {"contact_min", true, 1e-6, {}, "min |η∧(dη)^n| on M"},
      {"invariance_eta", false, 1e-10, {}, "max |ψ_g*η − η|"},
      {"action_laws", false, 1e-10, {}, "identity and composition laws of the action"},
      {"invariance_rho", false, 1e-8, {"invariance_eta"}, "max |ρ∘ψ_g − ρ| on the tube"},
      {"extension_vanishing", false, 1e-12, {}, "max |ρ| on M"},
      {"extension_pullback", false, 1e-8, {}, "max |ι*d^cρ − η| on M"},
      {"dc_convention", false, 1e-12, {}, "d^cρ(v) against dρ(Jv) on the tube"},
      {"spsh_min", true, 0.0, {}, "min eigenvalue of ω(·, J·) on the tube"},
      {"kahler_symmetry", false, 1e-8, {}, "max |g − gᵀ| for g = ω(·, J·)"},
      {"averaging_quadrature", false, 1e-12, {}, "Haar quadrature of cos² against 1/2"},
      {"cr_levi_min", true, 0.0, {"spsh_min"}, "min Levi eigenvalue on H of ρ⁻¹(0)"},
      {"cr_dim", false, 0.5, {"spsh_min"}, "|dim H − (2n − 2)|"},
      {"moment_extension", false, 1e-10, {"invariance_eta"}, "max |μ_Kähler∘ι − μ_contact|"},
      {"moment_equivariance", false, 1e-8, {"invariance_rho"}, "max |μ∘ψ_g − μ|"},
      {"hamiltonian", false, 1e-8, {"invariance_rho"}, "max |dμ_ξ − ι_ξω|"},
      {"frame_reconstruction", false, 1e-8, {}, "π*η against Σ f_j dg_j + σ_S"},
      {"product_potential_pullback", false, 1e-8, {"frame_reconstruction"}, "Θ + θ restricts to 0 with d^c pullback π*η"},
      {"zero_level", false, 1e-10, {"invariance_eta"}, "max |μ| at the parameterized level set"},
      {"quotient_section", false, 1e-12, {"zero_level"}, "max |π∘σ − id|"},
      {"quotient_orbit", false, 1e-10, {"zero_level"}, "σ(π(p)) lies on the orbit of p"},
      {"contact_reduce", false, 1e-8, {"quotient_section"}, "η_red against its closed form"},
      {"contact_reduce_certificate", false, 1e-10, {"quotient_section"}, "π*η_red against ι*η on the level set"},
      {"contact_reduce_perturbation_min", true, 5e-4, {"quotient_section"}, "certificate of η_red + 1e-3·db"},
      {"kahler_reduce", false, 1e-10, {"spsh_min", "zero_level"}, "ρ_red∘π = ρ on μ⁻¹(0)"},
      {"kahler_reduce_spsh_min", true, 0.0, {"spsh_min", "zero_level"}, "min eigenvalue for ρ_red"},
      {"compatibility", false, 1e-8, {"kahler_reduce", "contact_reduce_certificate"}, "ι*d^cρ_red − η_red and ρ_red on the base"},
      {"compatibility_omega", false, 1e-8, {"kahler_reduce", "contact_reduce_certificate"}, "ι*dd^cρ_red − dη_red"},
      {"cr_reduce_contact_min", true, 1e-6, {"kahler_reduce_spsh_min"}, "contact volume on ρ_red⁻¹(0)"},
      {"cr_reduce_levi_min", true, 0.0, {"kahler_reduce_spsh_min"}, "Levi eigenvalue on ρ_red⁻¹(0)"},
      {"kappa_ker_dmu", false, 0.5, {"kahler_reduce"}, "|dim ker dμ − (2n − k)|"},
      {"kappa_complement", false, 0.5, {"kahler_reduce"}, "|dim of the ω-complement − (2n − 2k)|"},
      {"kappa_rank", false, 0.5, {"kahler_reduce"}, "|rank D(π∘ι) on the complement − (2n − 2k)|"},
      {"symplectify_omega", false, 1e-8, {"extension_pullback"}, "ι*dd^cρ̂ against d(e^t η)"},
      {"symplectify_slice", false, 1e-8, {"extension_pullback"}, "ι*d^cρ̂ against η on t = 0"},
      {"symplectify_spsh_min", true, 0.0, {"extension_pullback"}, "min eigenvalue for ρ̂"},
      {"isotropy", false, 0.5, {"invariance_eta"}, "samples whose stabilizer class differs from the declared stratum"},
      {"strata_contact_min", true, 1e-6, {"isotropy"}, "contact volume of each reduced stratum"},
      {"strata_totally_real_min", true, 1e-6, {"isotropy"}, "σ_min of [T, JT] along each stratum"},
      {"strata_pullback", false, 1e-8, {"isotropy"}, "ι*d^cρ_red against η_red per stratum"},
      {"strata_vanishing", false, 1e-12, {"isotropy"}, "ρ_red on each reduced stratum"},
      {"strata_certificate", false, 1e-10, {"isotropy"}, "π*η_red against ι*η per stratum"},
      {"strata_orbit", false, 1e-10, {"isotropy"}, "σ(π(p)) lies on the residual orbit of p"},
      {"strata_empty_levels", true, 1e-12, {"isotropy"}, "min |μ| on strata declared to miss μ⁻¹(0)"},
  };
  return c;
}

inline const CheckInfo* find_check(const std::string& id) {
  for (const auto& c : check_catalog())
    if (c.id == id) return &c;
  return nullptr;
}

namespace detail {

inline bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

/// Field a check needs that the scenario lacks, as a path; empty if none.
inline std::string missing_field(const Scenario& s, const std::string& id) {
  const auto& g = s.group();
  const bool group_checks = id == "invariance_eta" || id == "action_laws" || id == "invariance_rho" || id == "isotropy" ||
                            starts_with(id, "moment_") || id == "hamiltonian" || id == "zero_level" || id == "quotient_orbit";
  if (group_checks && g.kind() == symmetry::GroupKind::Trivial) return "group";
  if ((starts_with(id, "moment_") || id == "hamiltonian" || id == "zero_level" || starts_with(id, "kahler_reduce") || starts_with(id, "kappa_") ||
       starts_with(id, "compatibility") || starts_with(id, "cr_reduce")) &&
      !g.continuous())
    return "group.params";
  if ((id == "invariance_rho" || id == "moment_equivariance" || id == "hamiltonian" || id == "moment_extension") && !s.action->has_tube())
    return "action.maps[].tube";
  if (id == "averaging_quadrature" && !(g.continuous() && g.compact())) return "group.params";
  if (starts_with(id, "frame_") || id == "product_potential_pullback")
    if (!s.presentation) return "action.presentation";
  const bool needs_level = id == "zero_level" || id == "quotient_section" || id == "quotient_orbit" || starts_with(id, "contact_reduce") ||
                           starts_with(id, "compatibility");
  if (needs_level && !s.quotient.contact) return "quotient.section";
  if (id == "contact_reduce" && !s.quotient.eta_red) return "quotient.eta_red";
  const bool needs_hq = starts_with(id, "kahler_reduce") || starts_with(id, "kappa_") || starts_with(id, "compatibility") || starts_with(id, "cr_reduce");
  if (needs_hq && !s.quotient.holomorphic) return "quotient.holomorphic";
  if (needs_hq && !s.action->has_imaginary()) return "action.maps[].imaginary";
  if ((id == "isotropy" || starts_with(id, "strata_")) && s.quotient.strata.empty()) return "quotient.strata";
  return {};
}

}  // namespace detail

/// Validates and builds a scenario from its JSON description.
inline Scenario load_json(const json& doc) {
  const detail::Node root{doc, ""};
  if (!doc.is_object()) root.fail("expected a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    static const std::vector<std::string> keys = {"name", "atlas", "one_form", "group", "action", "complexification", "quotient", "samples", "checks"};
    if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) throw LoadError(it.key() + ": unknown top-level field");
  }
  Scenario s;
  s.source = doc;
  s.name = root.at("name").str();

  std::vector<std::tuple<std::size_t, std::size_t, std::vector<std::string>>> declared;
  std::vector<const json*> declared_nodes;
  s.atlas = detail::read_atlas(root.at("atlas"), declared, declared_nodes);

  // one_form: chart name → coefficients
  {
    const auto n = root.at("one_form");
    std::vector<std::vector<Expression>> per_chart;
    for (std::size_t c = 0; c < s.atlas.size(); ++c) {
      const auto& ch = s.atlas.chart(c);
      per_chart.push_back(n.at(ch.name()).expressions(ch.scope(), ch.dim()));
    }
    s.eta = geometry::OneForm(per_chart);
  }

  // complexification
  std::vector<std::vector<std::string>> imaginary;
  if (root.has("complexification")) {
    const auto n = root.at("complexification");
    if (n.has("radius")) s.cx.radius = n.at("radius").number();
    if (!(s.cx.radius > 0)) n.at("radius").fail("tube radius must be positive");
    if (n.has("lambda")) s.cx.lambda = n.at("lambda").number();
    if (n.has("quadrature")) s.cx.quadrature = n.at("quadrature").count();
    if (n.has("partition")) {
      s.cx.partition = n.at("partition").str();
      if (s.cx.partition != "trivial" && s.cx.partition != "boxes" && s.cx.partition != "radial")
        n.at("partition").fail("expected trivial, boxes or radial");
    }
    if (n.has("bump_radius")) s.cx.bump_radius = n.at("bump_radius").number();
    if (n.has("average")) s.cx.average = n.at("average").boolean();
    if (n.has("weights")) {
      const auto w = n.at("weights");
      for (std::size_t c = 0; c < s.atlas.size(); ++c) {
        const auto& ch = s.atlas.chart(c);
        s.cx.weights.push_back(w.has(ch.name()) ? w.at(ch.name()).expression(ch.scope()) : Expression{});
      }
    }
    if (n.has("imaginary")) {
      const auto im = n.at("imaginary");
      for (std::size_t c = 0; c < s.atlas.size(); ++c) {
        const auto& ch = s.atlas.chart(c);
        imaginary.push_back(im.has(ch.name()) ? im.at(ch.name()).strings() : complexify::default_imaginary_names(ch));
        if (imaginary.back().size() != ch.dim()) im.at(ch.name()).fail("one imaginary name per coordinate required");
      }
    }
    if (n.has("symplectify")) {
      const auto sp = n.at("symplectify");
      if (sp.has("t_range")) s.cx.t_range = sp.at("t_range").interval();
      if (sp.has("lambda")) s.cx.symplectify_lambda = sp.at("lambda").number();
    }
  }
  try {
    s.tube = std::make_shared<const complexify::TubeComplexification>(complexify::complexify_atlas(s.atlas, s.cx.radius, imaginary, declared));
  } catch (const expr::ParseError& e) {
    throw LoadError("atlas.transitions: tube_map expression parse error: " + std::string(e.what()));
  } catch (const complexify::MissingExtension& e) {
    throw LoadError("atlas.transitions: " + std::string(e.what()));
  } catch (const std::invalid_argument& e) {
    throw LoadError("atlas.transitions: " + std::string(e.what()));
  }

  // group and action
  symmetry::GroupModel group;
  if (root.has("group")) {
    const auto n = root.at("group");
    symmetry::GroupKind kind;
    try {
      kind = symmetry::kind_from_name(n.at("kind").str());
    } catch (const std::invalid_argument& e) {
      n.at("kind").fail(e.what());
    }
    std::vector<std::string> params = n.has("params") ? n.at("params").strings() : std::vector<std::string>{};
    const std::size_t order = n.has("order") ? n.at("order").count() : 1;
    try {
      group = symmetry::GroupModel(kind, params, order);
    } catch (const std::invalid_argument& e) {
      n.fail(e.what());
    }
  }
  std::vector<Chart> tube_charts;
  for (std::size_t c = 0; c < s.atlas.size(); ++c) tube_charts.push_back(s.tube->chart(c));
  std::vector<std::vector<symmetry::ChartAction>> maps;
  if (group.kind() != symmetry::GroupKind::Trivial) {
    const auto n = root.at("action").at("maps");
    const std::size_t expected = group.continuous() ? 1 : group.order();
    if (n.size() != expected) n.fail("expected " + std::to_string(expected) + " entries");
    for (std::size_t e = 0; e < n.size(); ++e) {
      const auto element = n.at(e);
      std::vector<symmetry::ChartAction> per_chart;
      for (std::size_t c = 0; c < s.atlas.size(); ++c) {
        const auto& ch = s.atlas.chart(c);
        const auto& tc = tube_charts[c];
        const auto m = element.at(ch.name());
        symmetry::ChartAction ca;
        ca.base = m.at("base").expressions(symmetry::action_scope(ch, group), ch.dim());
        if (m.has("tube")) ca.tube = m.at("tube").expressions(symmetry::action_scope(tc, group), tc.dim());
        if (m.has("imaginary")) ca.imaginary = m.at("imaginary").expressions(symmetry::action_scope(tc, group), tc.dim());
        per_chart.push_back(std::move(ca));
      }
      maps.push_back(std::move(per_chart));
    }
  }
  try {
    s.action = std::make_shared<const symmetry::Action>(group, s.atlas.charts(), tube_charts, maps);
  } catch (const std::exception& e) {
    throw LoadError("action: " + std::string(e.what()));
  }
  if (root.has("action") && root.at("action").has("presentation")) {
    const auto n = root.at("action").at("presentation");
    potential::ProductPresentation p;
    p.m_chart = detail::chart_index(s.atlas, n.at("chart"));
    p.product = n.at("product").chart();
    p.group_dim = n.at("group_dim").count();
    p.to_m = n.at("to_m").expressions(p.product.scope(), s.atlas.chart(p.m_chart).dim());
    if (p.product.dim() != s.atlas.chart(p.m_chart).dim()) n.at("product").fail("G×S must have the dimension of M");
    s.presentation = std::move(p);
  }

  // quotient
  if (root.has("quotient")) {
    const auto n = root.at("quotient");
    const std::size_t chart = n.has("chart") ? detail::chart_index(s.atlas, n.at("chart")) : 0;
    if (n.has("section")) {
      s.quotient.contact = detail::read_quotient(n, s.atlas, chart);
      if (n.has("eta_red")) s.quotient.eta_red = geometry::OneForm({n.at("eta_red").expressions(s.quotient.contact->base.scope(), s.quotient.contact->base.dim())});
    }
    if (n.has("holomorphic")) {
      s.quotient.holomorphic = detail::read_holomorphic(n.at("holomorphic"), *s.tube, chart);
      if (s.quotient.contact && s.quotient.holomorphic->base.dim() != s.quotient.contact->base.dim())
        n.at("holomorphic").at("base").fail("must match quotient.base");
    }
    if (n.has("strata")) {
      const auto st = n.at("strata");
      for (std::size_t i = 0; i < st.size(); ++i) {
        const auto sn = st.at(i);
        StratumSpec spec;
        auto& x = spec.stratum;
        x.label = sn.at("label").str();
        const std::size_t c = sn.has("chart") ? detail::chart_index(s.atlas, sn.at("chart")) : 0;
        if (sn.has("zero_set")) {
          const auto z = sn.at("zero_set");
          for (std::size_t k = 0; k < s.atlas.size(); ++k) {
            const auto& ch = s.atlas.chart(k);
            if (z.has(ch.name())) spec.zero_sets[k] = z.at(ch.name()).expression(ch.scope());
          }
          if (spec.zero_sets.count(c)) x.zero_set = spec.zero_sets[c];
        }
        x.level_empty = sn.has("level_empty") && sn.at("level_empty").boolean();
        if (x.level_empty) {
          x.quotient = reduction::Quotient::trivial(s.atlas.chart(c), c);
        } else {
          x.quotient = detail::read_quotient(sn, s.atlas, c);
          x.complex = detail::read_holomorphic(sn.at("holomorphic"), *s.tube, c);
          if (x.complex.base.dim() != x.quotient.base.dim()) sn.at("holomorphic").at("base").fail("must match the stratum base");
        }
        s.quotient.strata.push_back(std::move(spec));
      }
    }
  }

  if (root.has("samples")) {
    const auto n = root.at("samples");
    auto read = [&](const char* key, std::size_t& v) {
      if (n.has(key)) {
        v = n.at(key).count();
        if (v == 0) n.at(key).fail("resolution must be positive");
      }
    };
    if (n.has("seed")) s.samples.seed = n.at("seed").count();
    read("m", s.samples.m);
    read("tube", s.samples.tube);
    read("base", s.samples.base);
    read("level", s.samples.level);
    read("reduced", s.samples.reduced);
    read("cr", s.samples.cr);
    read("isotropy", s.samples.isotropy);
    read("kappa", s.samples.kappa);
  }

  const auto checks = root.at("checks");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto c = checks.at(i);
    CheckSpec spec;
    spec.id = c.j.is_string() ? c.str() : c.at("id").str();
    const auto* info = find_check(spec.id);
    if (!info) c.fail("unknown check '" + spec.id + "'");
    spec.tolerance = c.has("tolerance") ? c.at("tolerance").number() : info->tolerance;
    for (const auto& prev : s.checks)
      if (prev.id == spec.id) c.fail("duplicate check '" + spec.id + "'");
    const auto missing = detail::missing_field(s, spec.id);
    if (!missing.empty()) throw LoadError(missing + " required by check " + spec.id);
    s.checks.push_back(std::move(spec));
  }
  return s;
}

inline Scenario load_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw LoadError(std::string("JSON parse error: ") + e.what());
  }
  return load_json(doc);
}

inline Scenario load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError(path + ": file not found");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_text(ss.str());
}

}  // namespace contact::scenarios
