#include "walkerpc/sampling.hpp"

#include <cmath>
#include <cstdio>

#include "walkerpc/error.hpp"

namespace walkerpc {

std::string to_string(const Point3& p) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g, %.17g)", p.x, p.y, p.z);
  return buf;
}

bool Box::contains(const Point3& p) const {
  for (Axis a : kAxes) {
    if (!(*this)[a].contains(p[a])) return false;
  }
  return true;
}

bool Domain::admits(const Point3& p) const {
  if (!p.finite() || !box.contains(p)) return false;
  try {
    for (const auto& e : require_positive) {
      if (!(e.eval(p) > 0.0)) return false;
    }
    for (const auto& e : require_nonzero) {
      if (e.eval(p) == 0.0) return false;
    }
  } catch (const DomainError&) {
    return false;
  }
  return true;
}

double Rng::uniform(double lo, double hi) {
  if (lo == hi) return lo;
  // 53 random bits mapped to the open unit interval.
  const double u = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Point3 Rng::point(const Box& box) {
  Point3 p;
  p.x = uniform(box[Axis::X].lo, box[Axis::X].hi);
  p.y = uniform(box[Axis::Y].lo, box[Axis::Y].hi);
  p.z = uniform(box[Axis::Z].lo, box[Axis::Z].hi);
  return p;
}

Vec3 Rng::vector() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

std::vector<Point3> sample_points(const Domain& domain, const SamplingConfig& cfg,
                                  const std::function<bool(const Point3&)>& accept) {
  if (cfg.samples < 1) throw PreconditionError("sample count must be at least 1");
  Rng rng(cfg.seed);
  std::vector<Point3> points;
  points.reserve(static_cast<std::size_t>(cfg.samples));
  const long max_draws = 1000L + 200L * cfg.samples;
  long draws = 0;
  while (points.size() < static_cast<std::size_t>(cfg.samples)) {
    if (++draws > max_draws) {
      throw NoValidSampleError("found only " + std::to_string(points.size()) + " of " + std::to_string(cfg.samples) +
                               " admissible points after " + std::to_string(max_draws) + " draws");
    }
    const Point3 p = rng.point(domain.box);
    if (!domain.admits(p)) continue;
    if (accept && !accept(p)) continue;
    points.push_back(p);
  }
  return points;
}

ZeroVerdict zero_test(const std::vector<Point3>& points, const std::function<ScaledValue(const Point3&)>& probe,
                      double tol) {
  ZeroVerdict v;
  double worst = 0.0;
  for (const auto& p : points) {
    const ScaledValue s = probe(p);
    if (negligible(s.value, s.scale, tol)) continue;
    const double ratio = std::abs(s.value) / (1.0 + std::abs(s.scale));
    if (!v.witness || ratio > worst) {
      worst = ratio;
      v.witness = p;
      v.magnitude = std::abs(s.value);
    }
    v.zero = false;
  }
  return v;
}

ZeroVerdict is_identically_zero(const ScalarField& e, const Domain& domain, const SamplingConfig& cfg) {
  if (e.is_zero()) return {};
  const auto points = sample_points(domain, cfg, [&](const Point3& p) {
    try {
      return std::isfinite(e.eval(p));
    } catch (const DomainError&) {
      return false;
    }
  });
  return zero_test(points, [&](const Point3& p) { return e.eval_scaled(p); }, cfg.tol);
}

}  // namespace walkerpc
