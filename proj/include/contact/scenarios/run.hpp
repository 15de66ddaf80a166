#pragma once

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "contact/scenarios/checks.hpp"

namespace contact::scenarios {

inline constexpr const char* kVersion = "0.1.0";

enum class Status { Pass, Fail, Skipped };

inline const char* to_string(Status s) { return s == Status::Pass ? "pass" : s == Status::Fail ? "fail" : "skipped"; }

struct CheckRecord {
  std::string id;
  double residual = std::numeric_limits<double>::quiet_NaN();
  double tolerance = 0.0;
  bool lower_bound = false;
  Status status = Status::Skipped;
  std::size_t samples = 0;
  double ms = 0.0;
  std::string note;
};

struct Report {
  std::string scenario;
  std::vector<CheckRecord> checks;
  std::uint64_t seed = 0;
  std::string version = kVersion;

  bool pass() const {
    for (const auto& c : checks)
      if (c.status != Status::Pass) return false;
    return true;
  }
  const CheckRecord* find(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
};

/// Lower-bound checks pass when residual > tolerance, the rest when
/// residual < tolerance. NaN never passes.
inline bool passes(double residual, double tolerance, bool lower_bound) { return lower_bound ? residual > tolerance : residual < tolerance; }

inline Report run(const Scenario& s, const RunOptions& o = {}) {
  Report report;
  report.scenario = s.name;
  Model model(s, o);
  report.seed = model.seed();

  std::set<std::string> ids;
  for (const auto& c : s.checks) ids.insert(c.id);
  model.prepare(ids);

  const std::size_t n = s.checks.size();
  report.checks.resize(n);
  std::vector<std::vector<std::size_t>> deps(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& spec = s.checks[i];
    const auto* info = find_check(spec.id);
    auto& r = report.checks[i];
    r.id = spec.id;
    r.lower_bound = info->lower_bound;
    const auto it = o.tolerances.find(spec.id);
    r.tolerance = it != o.tolerances.end() ? it->second : spec.tolerance;
    for (const auto& d : info->after)
      for (std::size_t j = 0; j < n; ++j)
        if (s.checks[j].id == d) deps[i].push_back(j);
  }

  std::size_t workers = o.workers ? o.workers : std::max(1u, std::thread::hardware_concurrency());
  std::vector<bool> done(n, false);
  for (std::size_t finished = 0; finished < n;) {
    std::vector<std::size_t> wave;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      bool ready = true, blocked = false;
      for (auto j : deps[i]) {
        if (!done[j]) ready = false;
        else if (report.checks[j].status != Status::Pass) blocked = true;
      }
      if (!ready) continue;
      if (blocked) {
        report.checks[i].status = Status::Skipped;
        report.checks[i].note = "prerequisite did not pass";
        done[i] = true;
        ++finished;
        continue;
      }
      wave.push_back(i);
    }
    if (wave.empty()) continue;

    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t k; (k = next.fetch_add(1)) < wave.size();) {
        auto& r = report.checks[wave[k]];
        const auto t0 = std::chrono::steady_clock::now();
        try {
          const auto out = check_functions().at(r.id)(model);
          r.residual = out.residual;
          r.samples = out.samples;
          r.status = passes(r.residual, r.tolerance, r.lower_bound) ? Status::Pass : Status::Fail;
        } catch (const std::exception& e) {
          r.status = Status::Fail;
          r.note = e.what();
        }
        r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      }
    };
    const std::size_t k = std::min(workers, wave.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < k; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (auto i : wave) done[i] = true;
    finished += wave.size();
  }
  return report;
}

/// Shortest representation that reads back to the same double.
inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

inline json to_json(const Report& r) {
  json j;
  j["scenario"] = r.scenario;
  j["verdict"] = r.pass() ? "pass" : "fail";
  j["checks"] = json::array();
  const auto num = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
  for (const auto& c : r.checks) {
    json e;
    e["id"] = c.id;
    e["residual"] = num(c.residual);
    e["tolerance"] = num(c.tolerance);
    e["status"] = to_string(c.status);
    e["samples"] = c.samples;
    e["ms"] = c.ms;
    j["checks"].push_back(std::move(e));
  }
  j["seed"] = r.seed;
  j["version"] = r.version;
  return j;
}

inline std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "scenario " << r.scenario << "  seed " << r.seed << "  version " << r.version << "\n";
  for (const auto& c : r.checks) {
    os << "  " << to_string(c.status) << "  " << c.id << "  residual " << format_number(c.residual) << (c.lower_bound ? " > " : " < ")
       << format_number(c.tolerance) << "  samples " << c.samples;
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
  os << "verdict " << (r.pass() ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace contact::scenarios
