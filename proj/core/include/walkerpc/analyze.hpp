#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "walkerpc/manifest.hpp"
#include "walkerpc/report.hpp"

namespace walkerpc {

enum class ExitStatus : int {
  Clean = 0,
  /// epsilon = -1 or a Reeb field that is not g-unit.
  Structural = 1,
  /// Parse errors, unbound identifiers, domain violations, unreadable files.
  Input = 2,
  /// Two routes of the same decision disagree.
  Inconsistent = 3,
};

std::string to_string(ExitStatus s);

/// Overrides of the manifest sampling settings.
struct AnalysisOptions {
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
};

struct Analysis {
  ExitStatus status = ExitStatus::Clean;
  /// Empty on a clean run.
  std::string message;
  /// Sections: manifest, structure_validity, basic_classes, named_classes,
  /// class_details, invariants, curvature, route_agreement, failures, status.
  Report report;

  int exit_code() const { return static_cast<int>(status); }
};

/// Build, validate, compute F and its projections, classify, analyse
/// curvature. Errors become report entries; nothing is thrown.
Analysis analyze(const Manifest& m, const AnalysisOptions& opts = {});
Analysis analyze_text(std::string_view manifest_text, const AnalysisOptions& opts = {});
Analysis analyze_file(const std::filesystem::path& path, const AnalysisOptions& opts = {});
/// Unknown names yield an input error.
Analysis run_example(std::string_view name, const AnalysisOptions& opts = {});

}  // namespace walkerpc
