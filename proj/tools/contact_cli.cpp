// contact: verify, list and describe contact-geometry scenarios.
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "contact/scenarios.hpp"

namespace sc = contact::scenarios;

namespace {

struct Source {
  std::string builtin;
  std::string file;
};

sc::Scenario load(const Source& src) {
  if (!src.builtin.empty()) return sc::builtin(src.builtin);
  return sc::load(src.file);
}

int write(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write report to " << path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify contact-geometry constructions on declarative scenarios."};
  app.require_subcommand(1);

  Source src;
  std::string format = "text", report;
  double scale = 1.0;
  std::int64_t seed = -1;
  std::size_t workers = 0;
  std::vector<std::string> overrides;

  auto* verify = app.add_subcommand("verify", "run the checks of a scenario");
  auto* list = app.add_subcommand("list", "print the builtin scenario names");
  auto* describe = app.add_subcommand("describe", "print a scenario and the meaning of its checks");
  for (auto* cmd : {verify, describe}) {
    auto* b = cmd->add_option("--builtin", src.builtin, "builtin scenario name");
    auto* f = cmd->add_option("--scenario", src.file, "scenario JSON file");
    b->excludes(f);
    f->excludes(b);
    cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--report", report, "output path (default: stdout)");
  }
  verify->add_option("--samples", scale, "sample resolution scale factor")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "lattice jitter seed")->check(CLI::NonNegativeNumber);
  verify->add_option("--workers", workers, "worker threads (0: available parallelism)");
  verify->add_option("--tolerance", overrides, "override a tolerance, id=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  if (list->parsed()) {
    for (const auto& n : sc::builtin_names()) std::cout << n << "\n";
    return 0;
  }

  if (src.builtin.empty() && src.file.empty()) {
    std::cerr << "error: one of --builtin or --scenario is required\n" << app.help();
    return 2;
  }

  try {
    sc::RunOptions opts;
    opts.sample_scale = scale;
    opts.workers = workers;
    if (seed >= 0) opts.seed = static_cast<std::uint64_t>(seed);
    for (const auto& o : overrides) {
      const auto eq = o.find('=');
      if (eq == std::string::npos) throw sc::LoadError("--tolerance: expected id=value, got '" + o + "'");
      const auto id = o.substr(0, eq);
      if (!sc::find_check(id)) throw sc::LoadError("--tolerance: unknown check '" + id + "'");
      try {
        opts.tolerances[id] = std::stod(o.substr(eq + 1));
      } catch (const std::exception&) {
        throw sc::LoadError("--tolerance: bad value in '" + o + "'");
      }
    }

    const auto s = load(src);
    if (describe->parsed()) {
      if (format == "json") return write(report, s.source.dump(2) + "\n");
      std::string text = "scenario " + s.name + "\n";
      for (const auto& c : s.checks) {
        const auto* info = sc::find_check(c.id);
        text += "  " + c.id + (info->lower_bound ? "  > " : "  < ") + sc::format_number(c.tolerance) + "  " + info->what + "\n";
      }
      return write(report, text);
    }

    const auto r = sc::run(s, opts);
    const int io = write(report, format == "json" ? sc::to_json(r).dump(2) + "\n" : sc::to_text(r));
    if (io) return io;
    return r.pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
