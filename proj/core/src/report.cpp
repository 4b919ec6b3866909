#include "walkerpc/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

namespace walkerpc {

Report number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

Report to_json(const Point3& p) { return Report::array({number(p.x), number(p.y), number(p.z)}); }

Report to_json(const std::optional<Point3>& p) {
  if (!p) return nullptr;
  return to_json(*p);
}

Report to_json(const ZeroVerdict& v) {
  Report out = Report::object();
  out["zero"] = v.zero;
  out["magnitude"] = number(v.magnitude);
  out["witness"] = to_json(v.witness);
  return out;
}

Report failure(const std::string& check, const Point3& witness, std::optional<double> magnitude) {
  Report out = Report::object();
  out["check"] = check;
  out["witness"] = to_json(witness);
  out["magnitude"] = magnitude ? number(*magnitude) : Report(nullptr);
  return out;
}

std::string render_machine(const Report& r) { return r.dump(2) + "\n"; }

namespace {

bool scalar_array(const Report& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const Report& e) { return e.is_primitive(); });
}

std::string leaf(const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const Report& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object() && !v.empty()) {
    for (const auto& [key, child] : v.items()) flatten(child, path.empty() ? key : path + "." + key, out);
  } else if (v.is_array() && !v.empty() && !scalar_array(v)) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(path, leaf(v));
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [section, body] : r.items()) {
    if (!first) out << '\n';
    first = false;
    out << "[" << section << "]\n";
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(body, "", rows);
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.first.size());
    for (const auto& [path, value] : rows) {
      out << "  " << path;
      if (!path.empty()) out << std::string(width - path.size() + 2, ' ');
      out << value << '\n';
    }
  }
  return out.str();
}

}  // namespace walkerpc
