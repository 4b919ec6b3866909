#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "walkerpc/apct_structure.hpp"
#include "walkerpc/sampling.hpp"
#include "walkerpc/scalar_field.hpp"

namespace walkerpc {

/// Input document of one analysis. Text format, one entry per line:
///
///   # comment
///   name = "fixture"
///   epsilon = 1
///   const.C = 1/2                 exact rational
///   define.w = "exp(C*z)"         expression, may use constants and earlier defines
///   f = "x^2 + w"
///   xi1 = "0"
///   xi2 = "1"
///   xi3 = "0"
///   domain.y = [0.5, 2]           closed interval, default [-1, 1]
///   require_positive = ["y"]
///   require_nonzero = []
///   samples = 64
///   seed = 42
///   tol = 1e-9
///
/// f, xi1, xi2 and xi3 are required. Expressions use the scalar field
/// grammar; parse errors carry the line and column in the document.
struct Manifest {
  std::string name;
  int epsilon = 1;
  std::string f_text;
  std::array<std::string, 3> xi_text;
  ConstantMap constants;
  std::vector<std::pair<std::string, std::string>> definitions_text;
  std::vector<std::string> require_positive_text;
  std::vector<std::string> require_nonzero_text;
  SamplingConfig sampling;

  ScalarField f;
  ReebField xi;
  Domain domain;
};

/// Parses and compiles every expression; nothing is evaluated.
Manifest parse_manifest(std::string_view text);

/// Throws InputError when the file cannot be read.
Manifest load_manifest(const std::filesystem::path& path);

/// Canonical text; parse_manifest(to_text(m)) reproduces m.
std::string to_text(const Manifest& m);

}  // namespace walkerpc
