#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "walkerpc/point.hpp"
#include "walkerpc/sampling.hpp"

namespace walkerpc {

/// Machine-readable report tree; key order is insertion order.
using Report = nlohmann::ordered_json;

Report to_json(const Point3& p);
Report to_json(const std::optional<Point3>& p);
/// {zero, magnitude, witness}.
Report to_json(const ZeroVerdict& v);
/// Non-finite values become null.
Report number(double v);

/// Failure entry {check, witness, magnitude}.
Report failure(const std::string& check, const Point3& witness, std::optional<double> magnitude);

/// Indented JSON followed by a newline.
std::string render_machine(const Report& r);
/// One "path  value" line per leaf, grouped by top-level section.
std::string render_text(const Report& r);

}  // namespace walkerpc
