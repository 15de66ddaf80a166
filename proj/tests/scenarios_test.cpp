#include <gtest/gtest.h>

#include <cmath>
#include <regex>
#include <sstream>

#include "contact/scenarios.hpp"

using namespace contact::scenarios;

namespace {

json e4() { return builtin_json("E4_heisenberg_translation"); }

std::string load_error(const json& doc) {
  try {
    load_json(doc);
  } catch (const LoadError& e) {
    return e.what();
  }
  return "";
}

RunOptions serial() {
  RunOptions o;
  o.workers = 1;
  return o;
}

}  // namespace

TEST(Catalog, SevenBuiltins) {
  const auto names = builtin_names();
  ASSERT_EQ(names.size(), 7u);
  for (const auto& n : names) EXPECT_EQ(builtin(n).name, n);
  EXPECT_THROW(builtin("E9_nothing"), LoadError);
}

TEST(Catalog, CircleAveragesWithSixtyFourNodes) {
  const auto s = builtin("E2_circle");
  EXPECT_TRUE(s.cx.average);
  EXPECT_EQ(s.cx.quadrature, 64u);
  EXPECT_FALSE(s.quotient.contact);
  EXPECT_FALSE(s.quotient.holomorphic);
}

TEST(Catalog, HeisenbergFrame) {
  const auto s = builtin("E4_heisenberg_translation");
  ASSERT_TRUE(s.presentation);
  const auto fd = contact::potential::frame_decompose(s.eta, *s.presentation);
  for (double x : {-0.7, 0.0, 0.4}) {
    const std::vector<double> slice{x, 0.3};  // (x, z)
    EXPECT_DOUBLE_EQ(contact::expr::evaluate(fd.f[0], slice), x);
    EXPECT_DOUBLE_EQ(contact::expr::evaluate(fd.sigma[0], slice), 0.0);
    EXPECT_DOUBLE_EQ(contact::expr::evaluate(fd.sigma[1], slice), 1.0);
  }
}

TEST(Load, ParseErrorNamesTheField) {
  auto doc = e4();
  doc["one_form"]["R3"][1] = "coz(z)";
  const auto msg = load_error(doc);
  EXPECT_NE(msg.find("one_form.R3[1]"), std::string::npos) << msg;
  EXPECT_NE(msg.find("coz(z)"), std::string::npos) << msg;
}

TEST(Load, MissingFieldNamesTheCheck) {
  auto doc = e4();
  doc["quotient"].erase("section");
  doc["checks"] = {"contact_reduce"};
  EXPECT_EQ(load_error(doc), "quotient.section required by check contact_reduce");

  doc = e4();
  doc.erase("group");
  doc["checks"] = {"hamiltonian"};
  EXPECT_EQ(load_error(doc), "group required by check hamiltonian");
}

TEST(Load, StructuralErrors) {
  auto doc = e4();
  doc["colour"] = "blue";
  EXPECT_EQ(load_error(doc), "colour: unknown top-level field");

  doc = e4();
  doc.erase("atlas");
  EXPECT_EQ(load_error(doc), "atlas: required field missing");

  doc = e4();
  doc["checks"] = {"no_such_check"};
  EXPECT_NE(load_error(doc).find("checks[0]: unknown check"), std::string::npos);

  doc = e4();
  doc["checks"] = {"contact_min", "contact_min"};
  EXPECT_NE(load_error(doc).find("duplicate check"), std::string::npos);

  doc = e4();
  doc["one_form"]["R3"] = {"0", "x"};
  EXPECT_NE(load_error(doc).find("expected 3 expressions"), std::string::npos);

  doc = e4();
  doc["atlas"]["charts"][0]["box"][0] = {1, -1};
  EXPECT_NE(load_error(doc).find("empty interval"), std::string::npos);

  doc = e4();
  doc["group"]["kind"] = "lorentz";
  EXPECT_NE(load_error(doc).find("group.kind"), std::string::npos);
}

TEST(Load, TextAndFileErrors) {
  try {
    load_text("{\"name\": ");
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("JSON parse error", 0), 0u);
  }
  try {
    load("/nonexistent/scenario.json");
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_EQ(std::string(e.what()), "/nonexistent/scenario.json: file not found");
  }
}

TEST(Load, ToleranceOverrideInFile) {
  auto doc = e4();
  doc["checks"] = {json{{"id", "contact_min"}, {"tolerance", 0.5}}};
  const auto s = load_json(doc);
  ASSERT_EQ(s.checks.size(), 1u);
  EXPECT_EQ(s.checks[0].tolerance, 0.5);
}

TEST(Run, EmptyCheckListPasses) {
  auto doc = e4();
  doc["checks"] = json::array();
  const auto r = run(load_json(doc));
  EXPECT_TRUE(r.checks.empty());
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(to_json(r)["verdict"], "pass");
}

TEST(Run, FailedPrerequisiteSkipsDependents) {
  auto doc = e4();
  doc["checks"] = {"invariance_eta", "invariance_rho", "moment_equivariance", "contact_min"};
  auto o = serial();
  o.tolerances["invariance_eta"] = -1.0;  // unreachable
  const auto r = run(load_json(doc), o);
  EXPECT_EQ(r.find("invariance_eta")->status, Status::Fail);
  EXPECT_EQ(r.find("invariance_rho")->status, Status::Skipped);
  EXPECT_EQ(r.find("moment_equivariance")->status, Status::Skipped);
  EXPECT_EQ(r.find("contact_min")->status, Status::Pass);
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(to_json(r)["checks"][2]["status"], "skipped");
}

TEST(Run, AbsentPrerequisitesDoNotBlock) {
  auto doc = e4();
  doc["checks"] = {"contact_reduce"};
  const auto r = run(load_json(doc));
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].status, Status::Pass);
  EXPECT_LT(r.checks[0].residual, 1e-8);
}

TEST(Run, ConstructionErrorsBecomeFailures) {
  auto doc = e4();
  doc["complexification"] = {{"average", true}};  // translations are not compact
  doc["checks"] = {"contact_min", "spsh_min"};
  const auto r = run(load_json(doc));
  EXPECT_EQ(r.find("contact_min")->status, Status::Pass);
  const auto* spsh = r.find("spsh_min");
  EXPECT_EQ(spsh->status, Status::Fail);
  EXPECT_NE(spsh->note.find("compact"), std::string::npos) << spsh->note;
  EXPECT_TRUE(to_json(r)["checks"][1]["residual"].is_null());
}

TEST(Run, DeterministicAcrossRunsAndWorkers) {
  const auto s = builtin("E3_T3");
  const auto a = run(s, serial());
  const auto b = run(s, serial());
  RunOptions wide;
  wide.workers = 8;
  const auto c = run(s, wide);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(std::memcmp(&a.checks[i].residual, &b.checks[i].residual, sizeof(double)), 0) << a.checks[i].id;
    EXPECT_EQ(std::memcmp(&a.checks[i].residual, &c.checks[i].residual, sizeof(double)), 0) << a.checks[i].id;
    EXPECT_EQ(a.checks[i].samples, c.checks[i].samples);
  }
}

TEST(Run, SeedAndScaleOptions) {
  auto doc = e4();
  doc["checks"] = {"extension_pullback"};
  const auto s = load_json(doc);
  RunOptions o;
  o.seed = 7;
  o.sample_scale = 0.5;
  const auto r = run(s, o);
  EXPECT_EQ(r.seed, 7u);
  EXPECT_EQ(r.checks[0].samples, 125u);
  EXPECT_EQ(run(s).checks[0].samples, 1000u);
  o.sample_scale = 0.0;
  EXPECT_THROW(run(s, o), std::invalid_argument);
}

TEST(Report, SchemaOrderAndFormats) {
  auto doc = e4();
  doc["checks"] = {"contact_min", "extension_pullback", "moment_equivariance"};
  const auto r = run(load_json(doc));
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"scenario", "verdict", "checks", "seed", "version"}));
  keys.clear();
  for (auto it = j["checks"][0].begin(); it != j["checks"][0].end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"id", "residual", "tolerance", "status", "samples", "ms"}));
  EXPECT_EQ(j["seed"], 42u);
  EXPECT_EQ(j["version"], "0.1.0");

  // Text and JSON carry the same residual values.
  const auto reparsed = json::parse(j.dump());
  std::istringstream text(to_text(r));
  const std::regex line(R"(^\s+\w+\s+(\w+)\s+residual\s+(\S+))");
  std::string l;
  std::size_t seen = 0;
  while (std::getline(text, l)) {
    std::smatch m;
    if (!std::regex_search(l, m, line)) continue;
    const double from_text = std::stod(m[2]);
    EXPECT_EQ(from_text, reparsed["checks"][seen]["residual"].get<double>()) << m[1];
    EXPECT_EQ(m[1], r.checks[seen].id);
    ++seen;
  }
  EXPECT_EQ(seen, 3u);
}

TEST(Report, NumberFormattingRoundTrips) {
  for (double v : {0.0, 1e-300, 0.1, 2.220446049250313e-16, -241.08763183843772, 1.0 / 3.0}) EXPECT_EQ(std::stod(format_number(v)), v);
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(format_number(-INFINITY), "-inf");
}

TEST(Scenarios, FileRoundTripMatchesBuiltin) {
  const auto file = load(std::string(CONTACT_EXAMPLES_DIR) + "/scenarios/E4_heisenberg_translation.json");
  const auto a = run(file, serial());
  const auto b = run(builtin("E4_heisenberg_translation"), serial());
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].id, b.checks[i].id);
    EXPECT_EQ(a.checks[i].status, b.checks[i].status);
    EXPECT_NEAR(a.checks[i].residual, b.checks[i].residual, 1e-12) << a.checks[i].id;
  }
}

class Builtin : public testing::TestWithParam<std::string> {};

TEST_P(Builtin, AllChecksPass) {
  const auto r = run(builtin(GetParam()));
  for (const auto& c : r.checks) EXPECT_EQ(c.status, Status::Pass) << c.id << " residual " << c.residual << " " << c.note;
  EXPECT_TRUE(r.pass());
}

INSTANTIATE_TEST_SUITE_P(Catalog, Builtin, testing::ValuesIn(builtin_names()));

TEST(Scenarios, ExportedFilesMatchBuiltins) {
  for (const auto& n : builtin_names()) {
    const auto s = load(std::string(CONTACT_EXAMPLES_DIR) + "/scenarios/" + n + ".json");
    EXPECT_EQ(s.name, n);
    EXPECT_EQ(s.source, builtin_json(n)) << n;
  }
}
