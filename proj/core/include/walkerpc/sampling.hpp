#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "walkerpc/point.hpp"
#include "walkerpc/scalar_field.hpp"
#include "walkerpc/tensor.hpp"

namespace walkerpc {

/// Closed interval [lo, hi]; samples are drawn from its interior.
struct Interval {
  double lo = -1.0;
  double hi = 1.0;

  bool contains(double v) const { return v >= lo && v <= hi; }
};

struct Box {
  std::array<Interval, 3> axes{};

  Interval& operator[](Axis a) { return axes[static_cast<std::size_t>(index(a))]; }
  const Interval& operator[](Axis a) const { return axes[static_cast<std::size_t>(index(a))]; }
  bool contains(const Point3& p) const;
};

/// A sampling box plus fields that must be positive or nonzero at every
/// admissible point.
struct Domain {
  Box box;
  std::vector<ScalarField> require_positive;
  std::vector<ScalarField> require_nonzero;

  /// True when p lies in the box and every constraint holds (constraints that
  /// cannot be evaluated at p count as violated).
  bool admits(const Point3& p) const;
};

struct SamplingConfig {
  int samples = 64;
  std::uint64_t seed = 42;
  double tol = 1e-9;
};

/// Deterministic random source for sample points and test vectors.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in the open interval (lo, hi); returns lo when lo == hi.
  double uniform(double lo, double hi);
  Point3 point(const Box& box);
  /// Vector with components uniform in (-1, 1).
  Vec3 vector();
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Draws `cfg.samples` admissible points. `accept` may reject further points
/// (e.g. where a derived structure cannot be evaluated). Throws
/// NoValidSampleError after a bounded number of failed draws.
std::vector<Point3> sample_points(const Domain& domain, const SamplingConfig& cfg,
                                  const std::function<bool(const Point3&)>& accept = {});

/// Outcome of a sampled "is this identically zero" test. `witness` is the
/// point with the largest relative violation (present iff !zero), and
/// `magnitude` the absolute value there.
struct ZeroVerdict {
  bool zero = true;
  std::optional<Point3> witness;
  double magnitude = 0.0;

  explicit operator bool() const { return zero; }
};

/// |value| <= tol * (1 + |scale|).
inline bool negligible(double value, double scale, double tol) {
  return std::abs(value) <= tol * (1.0 + std::abs(scale));
}

/// Zero test over explicit points. `probe` returns (value, scale) at a point.
ZeroVerdict zero_test(const std::vector<Point3>& points,
                      const std::function<ScaledValue(const Point3&)>& probe, double tol);

/// Zero test of a symbolic field over freshly sampled points of `domain`.
ZeroVerdict is_identically_zero(const ScalarField& e, const Domain& domain, const SamplingConfig& cfg);

/// |a - b| / (1 + max(|a|, |b|)).
inline double relative_discrepancy(double a, double b) {
  return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace walkerpc
