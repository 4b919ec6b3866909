#pragma once

#include <array>
#include <cmath>
#include <string>

namespace walkerpc {

/// Coordinate axis of the local chart (x, y, z).
enum class Axis : int { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};

constexpr int index(Axis a) { return static_cast<int>(a); }
constexpr char axis_name(Axis a) { return "xyz"[index(a)]; }

/// A point (x, y, z) of the coordinate chart.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double operator[](Axis a) const { return (*this)[index(a)]; }
  bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }

  friend bool operator==(const Point3&, const Point3&) = default;
};

std::string to_string(const Point3& p);

}  // namespace walkerpc
