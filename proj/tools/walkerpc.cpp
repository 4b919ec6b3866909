#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "walkerpc/analyze.hpp"
#include "walkerpc/corpus.hpp"
#include "walkerpc/error.hpp"
#include "walkerpc/report.hpp"

namespace {

struct Flags {
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::string format = "text";
};

void add_flags(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--samples", flags.samples, "Sample points per check")->check(CLI::Range(1, 100000));
  cmd->add_option("--seed", flags.seed, "Seed of the sampler");
  cmd->add_option("--tol", flags.tol, "Relative tolerance of zero tests")->check(CLI::Range(1e-300, 1.0));
  cmd->add_option("--report", flags.format, "Report format")->check(CLI::IsMember({"text", "machine"}));
}

int emit(const walkerpc::Analysis& a, const Flags& flags) {
  std::cout << (flags.format == "machine" ? walkerpc::render_machine(a.report) : walkerpc::render_text(a.report));
  if (a.status != walkerpc::ExitStatus::Clean) {
    std::cerr << "walkerpc: " << walkerpc::to_string(a.status) << ": " << a.message << '\n';
  }
  return a.exit_code();
}

walkerpc::AnalysisOptions options(const Flags& flags) { return {flags.samples, flags.seed, flags.tol}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Almost paracontact metric structures on three-dimensional Walker manifolds"};
  app.require_subcommand(1);

  Flags flags;
  std::string manifest_path;
  auto* analyze = app.add_subcommand("analyze", "Classify the structure described by a manifest");
  analyze->add_option("manifest", manifest_path, "Manifest file")->required();
  add_flags(analyze, flags);

  auto* examples = app.add_subcommand("examples", "Shipped fixtures");
  examples->require_subcommand(1);
  examples->add_subcommand("list", "List fixture names with a summary");
  std::string example_name;
  auto* run = examples->add_subcommand("run", "Analyse a fixture");
  run->add_option("name", example_name, "Fixture name")->required();
  add_flags(run, flags);
  std::string show_name;
  auto* show = examples->add_subcommand("show", "Print a fixture manifest");
  show->add_option("name", show_name, "Fixture name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(walkerpc::ExitStatus::Input);
  }

  if (analyze->parsed()) return emit(walkerpc::analyze_file(manifest_path, options(flags)), flags);
  if (run->parsed()) return emit(walkerpc::run_example(example_name, options(flags)), flags);
  if (show->parsed()) {
    try {
      std::cout << walkerpc::find_fixture(show_name).manifest;
      return 0;
    } catch (const walkerpc::Error& e) {
      std::cerr << "walkerpc: " << e.what() << '\n';
      return static_cast<int>(walkerpc::ExitStatus::Input);
    }
  }
  std::size_t width = 0;
  for (const auto& f : walkerpc::corpus()) width = std::max(width, f.name.size());
  for (const auto& f : walkerpc::corpus()) {
    std::cout << f.name << std::string(width - f.name.size() + 2, ' ') << f.description << '\n';
  }
  return 0;
}
