#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "walkerpc/analyze.hpp"
#include "walkerpc/corpus.hpp"
#include "walkerpc/manifest.hpp"

namespace walkerpc {
namespace {

constexpr const char* kReeb = "xi1 = \"0\"\nxi2 = \"1\"\nxi3 = \"0\"\n";

bool inside(const Report& witness, const Manifest& m) {
  if (!witness.is_array() || witness.size() != 3) return false;
  return m.domain.box.contains({witness[0].get<double>(), witness[1].get<double>(), witness[2].get<double>()});
}

/// "path value" rows of a report, built independently of render_text.
void leaves(const Report& v, const std::string& path, std::set<std::string>& out) {
  const bool scalars = v.is_array() && std::all_of(v.begin(), v.end(), [](const Report& e) { return e.is_primitive(); });
  if (v.is_object() && !v.empty()) {
    for (const auto& [k, child] : v.items()) leaves(child, path.empty() ? k : path + "." + k, out);
  } else if (v.is_array() && !v.empty() && !scalars) {
    for (std::size_t i = 0; i < v.size(); ++i) leaves(v[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out.insert(path + " " + (v.is_string() ? v.get<std::string>() : v.dump()));
  }
}

std::set<std::string> text_rows(const std::string& text) {
  std::set<std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '[') continue;
    const std::size_t start = line.find_first_not_of(' ');
    const std::size_t gap = line.find("  ", start);
    if (gap == std::string::npos) {
      rows.insert(" " + line.substr(start));
      continue;
    }
    const std::size_t value = line.find_first_not_of(' ', gap);
    rows.insert(line.substr(start, gap - start) + " " + (value == std::string::npos ? "" : line.substr(value)));
  }
  return rows;
}

TEST(Analyze, NormalFixtureReport) {
  const Analysis a = run_example("normal-quotient");
  EXPECT_EQ(a.status, ExitStatus::Clean);
  EXPECT_TRUE(a.report["named_classes"]["normal"].get<bool>());
  EXPECT_EQ(a.report["basic_classes"]["classes"], Report::array({"G5", "G6"}));
  EXPECT_TRUE(a.report["route_agreement"]["all_agree"].get<bool>());
  EXPECT_TRUE(a.report["failures"].empty());
}

TEST(Analyze, EtaEinsteinFixtureReport) {
  const Analysis a = run_example("eta-einstein-x2");
  EXPECT_EQ(a.exit_code(), 0);
  const Report& c = a.report["curvature"];
  EXPECT_DOUBLE_EQ(c["scal"].get<double>(), 2.0);
  EXPECT_DOUBLE_EQ(c["eta_einstein"]["a"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(c["eta_einstein"]["b"].get<double>(), -1.0);
  EXPECT_EQ(c["segre"]["type"], "{11;1} degenerate");
}

TEST(Analyze, ParacontactAndParacosymplecticFixtures) {
  EXPECT_TRUE(run_example("paracontact-exponential").report["named_classes"]["paracontact_metric"].get<bool>());
  EXPECT_TRUE(run_example("paracosymplectic-linear").report["named_classes"]["paracosymplectic"].get<bool>());
}

TEST(Analyze, EveryFixtureRunsClean) {
  for (const Fixture& f : corpus()) {
    const Analysis a = run_example(f.name);
    EXPECT_EQ(a.status, ExitStatus::Clean) << f.name << ": " << a.message;
    EXPECT_TRUE(a.report["structure_validity"]["axioms_hold"].get<bool>()) << f.name;
  }
}

TEST(Analyze, MachineReportIsDeterministic) {
  for (const char* name : {"normal-quotient", "eta-einstein-x2"}) {
    EXPECT_EQ(render_machine(run_example(name).report), render_machine(run_example(name).report));
  }
  const Manifest m = parse_manifest(find_fixture("almost-paracosymplectic").manifest);
  EXPECT_EQ(render_machine(analyze(m).report), render_machine(analyze_text(to_text(m)).report));
}

TEST(Analyze, SeedChangesSamplesButNotVerdicts) {
  AnalysisOptions opts;
  opts.seed = 9;
  const Analysis a = run_example("normal-quotient", opts);
  const Analysis b = run_example("normal-quotient");
  EXPECT_NE(render_machine(a.report), render_machine(b.report));
  EXPECT_EQ(a.report["named_classes"], b.report["named_classes"]);
  EXPECT_EQ(a.report["manifest"]["seed"], 9);
}

TEST(Analyze, TextAndMachineRenderingsCarryTheSameData) {
  const Report r = run_example("eta-einstein-x2").report;
  std::set<std::string> expected;
  for (const auto& [section, body] : r.items()) leaves(body, "", expected);
  EXPECT_EQ(text_rows(render_text(r)), expected);
}

TEST(Analyze, NegativeEpsilonIsStructural) {
  const Analysis a = analyze_text(std::string("epsilon = -1\nf = \"x\"\n") + kReeb);
  EXPECT_EQ(a.status, ExitStatus::Structural);
  EXPECT_EQ(a.exit_code(), 1);
  EXPECT_NE(a.message.find("no almost paracontact metric structure"), std::string::npos);
}

TEST(Analyze, UnitViolationIsStructuralWithWitness) {
  const std::string text = "f = \"x\"\nxi1 = \"0\"\nxi2 = \"2\"\nxi3 = \"0\"\ndomain.x = [0, 3]\n";
  const Analysis a = analyze_text(text);
  EXPECT_EQ(a.exit_code(), 1);
  ASSERT_EQ(a.report["failures"].size(), 1u);
  const Report& f = a.report["failures"][0];
  EXPECT_TRUE(inside(f["witness"], parse_manifest(text)));
  EXPECT_NEAR(f["magnitude"].get<double>(), 3.0, 1e-12);
  EXPECT_FALSE(a.report["structure_validity"]["unit_constraint"].get<bool>());
}

TEST(Analyze, InputErrors) {
  const Analysis parse = analyze_text(std::string("f = \"x +\"\n") + kReeb);
  EXPECT_EQ(parse.exit_code(), 2);
  EXPECT_NE(parse.message.find("line 1"), std::string::npos);
  EXPECT_EQ(analyze_text(std::string("f = \"q\"\n") + kReeb).exit_code(), 2);
  EXPECT_EQ(run_example("no-such-fixture").exit_code(), 2);
  EXPECT_EQ(analyze_file("/nonexistent/manifest").exit_code(), 2);
  const Analysis nowhere = analyze_text(std::string("f = \"sqrt(-1 - x^2)\"\n") + kReeb);
  EXPECT_EQ(nowhere.exit_code(), 2);
  EXPECT_EQ(nowhere.report["status"]["outcome"], "input error");
}

TEST(Analyze, DegenerateInputIsAFailureEntryButClean) {
  const std::string text = std::string("f = \"x^3\"\n") + kReeb;
  const Analysis a = analyze_text(text);
  EXPECT_EQ(a.exit_code(), 0);
  EXPECT_EQ(a.report["curvature"]["eta_einstein"]["status"], "degenerate");
  ASSERT_EQ(a.report["failures"].size(), 1u);
  EXPECT_TRUE(inside(a.report["failures"][0]["witness"], parse_manifest(text)));
}

TEST(Analyze, OptionsOverrideManifestSampling) {
  AnalysisOptions opts;
  opts.samples = 8;
  opts.tol = 1e-8;
  const Analysis a = run_example("flat-yz", opts);
  EXPECT_EQ(a.report["manifest"]["samples"], 8);
  EXPECT_DOUBLE_EQ(a.report["manifest"]["tol"].get<double>(), 1e-8);
  EXPECT_EQ(a.exit_code(), 0);
}

TEST(Analyze, ExitStatusNames) {
  EXPECT_EQ(to_string(ExitStatus::Inconsistent), "internal consistency failure");
  EXPECT_EQ(static_cast<int>(ExitStatus::Inconsistent), 3);
}

}  // namespace
}  // namespace walkerpc
