// Acceptance run: one pass/fail line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "contact/expr.hpp"
#include "contact/scenarios.hpp"
#include "random_expression.hpp"

namespace sc = contact::scenarios;
using sc::json;

namespace {

struct Timed {
  sc::Report report;
  double seconds = 0.0;
};

std::map<std::string, Timed> g_runs;

const sc::Report& report(const std::string& name) {
  auto it = g_runs.find(name);
  if (it != g_runs.end()) return it->second.report;
  const auto s = sc::builtin(name);
  sc::RunOptions o;
  o.workers = 1;  // timing is per desktop core
  const auto t0 = std::chrono::steady_clock::now();
  Timed t{sc::run(s, o), 0.0};
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return g_runs.emplace(name, std::move(t)).first->second.report;
}

std::string full(const std::string& prefix) {
  for (const auto& n : sc::builtin_names())
    if (n.rfind(prefix, 0) == 0) return n;
  throw std::runtime_error("no builtin " + prefix);
}

/// Collects failures of one criterion as text.
struct Verdict {
  std::vector<std::string> problems;
  std::vector<std::string> facts;

  void need(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  void note(const std::string& s) { facts.push_back(s); }

  // The record of `id` in scenario `e`, required to exist.
  const sc::CheckRecord* check(const std::string& e, const std::string& id) {
    const auto* c = report(full(e)).find(id);
    need(c != nullptr, e + " lacks " + id);
    return c;
  }
  void below(const std::string& e, const std::string& id, double tol, std::size_t min_samples = 0) {
    const auto* c = check(e, id);
    if (!c) return;
    need(c->residual < tol, e + " " + id + " = " + sc::format_number(c->residual) + " not < " + sc::format_number(tol));
    need(c->samples >= min_samples, e + " " + id + " used " + std::to_string(c->samples) + " samples");
  }
  void above(const std::string& e, const std::string& id, double tol) {
    const auto* c = check(e, id);
    if (c) need(c->residual > tol, e + " " + id + " = " + sc::format_number(c->residual) + " not > " + sc::format_number(tol));
  }
};

int g_failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Verdict&)>& body) {
  Verdict v;
  try {
    body(v);
  } catch (const std::exception& e) {
    v.problems.push_back(std::string("exception: ") + e.what());
  }
  const bool ok = v.problems.empty();
  if (!ok) ++g_failures;
  std::string detail;
  for (const auto& s : ok ? v.facts : v.problems) detail += (detail.empty() ? "" : "; ") + s;
  std::printf("criterion %2d  %s  %s  (%s)\n", n, ok ? "pass" : "FAIL", title.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string sig3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double fd_first(const contact::expr::Expression& e, std::vector<double> p, std::size_t i, double h) {
  const double x = p[i];
  p[i] = x + h;
  const double a = contact::expr::evaluate(e, p);
  p[i] = x - h;
  return (a - contact::expr::evaluate(e, p)) / (2 * h);
}

double fd_second(const contact::expr::Expression& e, std::vector<double> p, std::size_t i, std::size_t k, double h) {
  const double xi = p[i];
  p[i] = xi + h;
  const double a = fd_first(e, p, k, h);
  p[i] = xi - h;
  return (a - fd_first(e, p, k, h)) / (2 * h);
}

bool close_relative(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b))); }

std::string without_timing(const sc::Report& r) {
  auto j = sc::to_json(r);
  for (auto& c : j["checks"]) c.erase("ms");
  return j.dump();
}

}  // namespace

int main() {
  criterion(1, "extension identity on E1-E6", [](Verdict& v) {
    for (const char* e : {"E1", "E2", "E3", "E4", "E5", "E6"}) {
      v.below(e, "extension_pullback", 1e-8, 1000);
      v.below(e, "extension_vanishing", 1e-12, 1000);
      const double t = g_runs.at(full(e)).seconds;
      v.need(t < 10.0, std::string(e) + " took " + sig3(t) + " s");
      v.note(std::string(e) + " " + sig3(t) + " s");
    }
  });

  criterion(2, "strict plurisubharmonicity, seed-stable", [](Verdict& v) {
    static const std::vector<std::string> ids = {"spsh_min", "kahler_reduce_spsh_min", "symplectify_spsh_min"};
    std::size_t seen = 0;
    for (const auto& name : sc::builtin_names()) {
      auto doc = sc::builtin_json(name);
      json kept = json::array();
      for (const auto& c : doc["checks"]) {
        const std::string id = c.is_string() ? c.get<std::string>() : c["id"].get<std::string>();
        for (const auto& want : ids)
          if (id == want) kept.push_back(c);
      }
      if (kept.empty()) continue;
      doc["checks"] = kept;
      const auto s = sc::load_json(doc);
      std::map<std::string, std::string> first;
      for (std::uint64_t seed : {42u, 43u, 44u}) {
        sc::RunOptions o;
        o.seed = seed;
        for (const auto& c : sc::run(s, o).checks) {
          ++seen;
          v.need(c.status == sc::Status::Pass && c.residual > 0, name + " " + c.id + " = " + sc::format_number(c.residual));
          const auto digits = sig3(c.residual);
          auto [it, fresh] = first.emplace(c.id, digits);
          if (fresh) v.note(name.substr(0, 2) + " " + c.id + " " + digits);
          v.need(it->second == digits, name + " " + c.id + " moved from " + it->second + " to " + digits + " at seed " + std::to_string(seed));
        }
      }
    }
    v.need(seen > 0, "no plurisubharmonicity checks");
  });

  criterion(3, "averaged invariance and quadrature (E2, E5)", [](Verdict& v) {
    v.below("E2", "invariance_rho", 1e-8);
    v.below("E5", "invariance_rho", 1e-10);
    v.below("E2", "averaging_quadrature", 1e-12);
    v.need(sc::builtin(full("E2")).cx.quadrature == 64, "E2 quadrature is not 64 nodes");
  });

  criterion(4, "frame and product potential (E4)", [](Verdict& v) {
    v.below("E4", "frame_reconstruction", 1e-8);
    v.below("E4", "product_potential_pullback", 1e-8);
  });

  criterion(5, "hamiltonian identity (E3, E4, E6)", [](Verdict& v) {
    for (const char* e : {"E3", "E4", "E6"}) v.below(e, "hamiltonian", 1e-8);
  });

  criterion(6, "moment compatibility, continuous groups", [](Verdict& v) {
    for (const auto& name : sc::builtin_names()) {
      const auto s = sc::builtin(name);
      if (!s.action || !s.group().continuous()) continue;
      v.below(name.substr(0, 2), "moment_extension", 1e-10);
      v.note(name.substr(0, 2));
    }
  });

  criterion(7, "contact reduction (E3, E4)", [](Verdict& v) {
    for (const char* e : {"E3", "E4"}) {
      v.below(e, "contact_reduce", 1e-8);
      v.below(e, "contact_reduce_certificate", 1e-10);
      v.above(e, "contact_reduce_perturbation_min", 5e-4);
    }
  });

  criterion(8, "Kaehler, contact and CR compatibility", [](Verdict& v) {
    std::size_t seen = 0;
    for (const auto& name : sc::builtin_names()) {
      const auto& r = report(name);
      const std::string e = name.substr(0, 2);
      for (const char* id : {"compatibility", "compatibility_omega"})
        if (r.find(id)) v.below(e, id, 1e-8), ++seen;
      for (const char* id : {"cr_levi_min", "cr_reduce_levi_min"})
        if (r.find(id)) v.above(e, id, 0.0), ++seen;
    }
    v.need(seen >= 4, "too few compatibility checks");
    v.note(std::to_string(seen) + " checks");
  });

  criterion(9, "kappa dimensions (5, 4, 4) on E4", [](Verdict& v) {
    for (const char* id : {"kappa_ker_dmu", "kappa_complement", "kappa_rank"}) {
      v.below("E4", id, 0.5);
      const auto* c = v.check("E4", id);
      if (c) v.need(c->samples == 100, std::string(id) + " used " + std::to_string(c->samples) + " samples");
    }
    const auto& s = sc::builtin(full("E4"));
    const std::size_t n = s.atlas.dim(), k = s.group().dim();  // complex dimension of the tube
    v.need(2 * n - k == 5 && 2 * n - 2 * k == 4, "E4 expected dimensions are not (5, 4, 4)");
  });

  criterion(10, "symplectification (E7, E4)", [](Verdict& v) {
    for (const char* e : {"E7", "E4"}) {
      v.below(e, "symplectify_omega", 1e-8);
      v.below(e, "symplectify_slice", 1e-8);
    }
  });

  criterion(11, "isotropy and strata (E5, E6)", [](Verdict& v) {
    for (const char* e : {"E5", "E6"}) {
      v.below(e, "isotropy", 0.5, 9000);
      v.above(e, "strata_contact_min", 1e-6);
      v.above(e, "strata_totally_real_min", 1e-6);
      v.below(e, "strata_pullback", 1e-8);
      v.below(e, "strata_certificate", 1e-10);
      v.below(e, "strata_orbit", 1e-10);
    }
    v.above("E6", "strata_empty_levels", 0.0);
    if (const auto* c = v.check("E6", "strata_empty_levels")) v.need(c->status == sc::Status::Pass, "E6 empty stratum not reported as pass");
    v.note("E6 free stratum misses the zero level by " + sig3(report(full("E6")).find("strata_empty_levels")->residual));
  });

  criterion(12, "AD against finite differences; determinism", [](Verdict& v) {
    using namespace contact::expr;
    contact::testing::RandomExpressionText gen(20241015);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    const Scope xyz{"x", "y", "z"};
    int accepted = 0, attempts = 0, bad = 0;
    while (accepted < 1000 && ++attempts < 200000) {
      const auto e = parse(gen.generate(), xyz);
      const std::vector<double> p{coord(rng), coord(rng), coord(rng)};
      Jet j;
      std::vector<double> g(3);
      std::vector<std::vector<double>> h(3, std::vector<double>(3));
      try {
        j = evaluate_jet(e, p);
        bool tame = j.is_finite() && std::abs(j.value()) < 1e2;
        for (std::size_t i = 0; i < 3 && tame; ++i) {
          tame = std::abs(j.gradient(i)) < 1e2;
          for (std::size_t k = 0; k < 3 && tame; ++k) tame = std::abs(j.hessian(i, k)) < 1e2;
        }
        if (!tame) continue;
        for (std::size_t i = 0; i < 3; ++i) {
          g[i] = fd_first(e, p, i, 1e-5);
          for (std::size_t k = 0; k < 3; ++k) h[i][k] = fd_second(e, p, i, k, 1e-5);
        }
      } catch (const DomainError&) {
        continue;
      }
      ++accepted;
      bool ok = true;
      for (std::size_t i = 0; i < 3; ++i) {
        ok = ok && close_relative(j.gradient(i), g[i], 1e-4);
        for (std::size_t k = 0; k < 3; ++k) ok = ok && close_relative(j.hessian(i, k), h[i][k], 1e-4);
      }
      if (!ok) ++bad;
    }
    v.need(accepted == 1000, "only " + std::to_string(accepted) + " expressions accepted");
    v.need(bad == 0, std::to_string(bad) + " expressions disagree");
    v.note(std::to_string(accepted) + " expressions");

    for (const auto& name : sc::builtin_names()) {
      const auto s = sc::builtin(name);
      const auto a = without_timing(sc::run(s)), b = without_timing(sc::run(s));
      v.need(a == b, name + " reports differ between runs");
    }
    v.note("reports identical");
  });

  std::printf("acceptance %s (%d failing)\n", g_failures == 0 ? "pass" : "FAIL", g_failures);
  return g_failures == 0 ? 0 : 1;
}
