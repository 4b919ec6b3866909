#include "walkerpc/walker_metric.hpp"

#include <cmath>

#include "walkerpc/error.hpp"

namespace walkerpc {

WalkerManifold::WalkerManifold(ScalarField f, int epsilon, Domain domain)
    : f_(std::move(f)), epsilon_(epsilon), domain_(std::move(domain)) {
  if (epsilon_ != 1 && epsilon_ != -1) throw PreconditionError("epsilon must be +1 or -1");
}

void WalkerManifold::require_in_domain(const Point3& p) const {
  if (!p.finite() || !domain_.box.contains(p)) throw PreconditionError("point " + to_string(p) + " outside the domain");
}

Jet3 WalkerManifold::f_jet(const Point3& p, int order) const {
  require_in_domain(p);
  return f_.jet(p, order);
}

namespace {

void require_lorentzian(const WalkerManifold& m) {
  if (m.epsilon() != 1) throw PreconditionError("connection and curvature are provided for epsilon = +1 only");
}

}  // namespace

MetricPair walker_metric(double f, int epsilon) {
  MetricPair r;
  r.g(0, 2) = r.g(2, 0) = 1.0;
  r.g(1, 1) = epsilon;
  r.g(2, 2) = f;
  r.inverse(0, 0) = -f;
  r.inverse(0, 2) = r.inverse(2, 0) = 1.0;
  r.inverse(1, 1) = epsilon;
  return r;
}

MetricPair metric_at(const WalkerManifold& m, const Point3& p) {
  m.require_in_domain(p);
  return walker_metric(m.f().eval(p), m.epsilon());
}

MetricJets walker_metric_jets(const Jet3& f, int epsilon) {
  const int o = f.order();
  MetricJets g;
  for (auto& row : g)
    for (auto& v : row) v = Jet3::constant(0.0, o);
  g[0][2] = g[2][0] = Jet3::constant(1.0, o);
  g[1][1] = Jet3::constant(epsilon, o);
  g[2][2] = f;
  return g;
}

Christoffel walker_christoffel(const Jet3& f) {
  const double fx = f.d(Axis::X);
  const double fy = f.d(Axis::Y);
  const double fz = f.d(Axis::Z);
  Christoffel c;
  c(0, 0, 2) = c(0, 2, 0) = 0.5 * fx;
  c(0, 1, 2) = c(0, 2, 1) = 0.5 * fy;
  c(0, 2, 2) = 0.5 * (f.value() * fx + fz);
  c(1, 2, 2) = -0.5 * fy;
  c(2, 2, 2) = -0.5 * fx;
  return c;
}

Christoffel christoffel_at(const WalkerManifold& m, const Point3& p) {
  require_lorentzian(m);
  return walker_christoffel(m.f_jet(p, 1));
}

Curvature walker_curvature(const Jet3& f) {
  const double v = f.value();
  const double fxx = f.d(Axis::X, Axis::X);
  const double fxy = f.d(Axis::X, Axis::Y);
  const double fyy = f.d(Axis::Y, Axis::Y);
  Curvature r;
  auto set = [&r](int l, int i, int j, int k, double value) {
    r(l, i, j, k) = value;
    r(l, j, i, k) = -value;
  };
  set(0, 0, 2, 0, -0.5 * fxx);
  set(0, 0, 2, 1, -0.5 * fxy);
  set(0, 0, 2, 2, -0.5 * v * fxx);
  set(1, 0, 2, 2, 0.5 * fxy);
  set(2, 0, 2, 2, 0.5 * fxx);
  set(0, 1, 2, 0, -0.5 * fxy);
  set(0, 1, 2, 1, -0.5 * fyy);
  set(0, 1, 2, 2, -0.5 * v * fxy);
  set(1, 1, 2, 2, 0.5 * fyy);
  set(2, 1, 2, 2, 0.5 * fxy);
  return r;
}

Curvature curvature_at(const WalkerManifold& m, const Point3& p) {
  require_lorentzian(m);
  return walker_curvature(m.f_jet(p, 2));
}

Ricci walker_ricci(const Jet3& f) {
  const double fxx = f.d(Axis::X, Axis::X);
  const double fxy = f.d(Axis::X, Axis::Y);
  const double fyy = f.d(Axis::Y, Axis::Y);
  Ricci r;
  r.rho(0, 2) = r.rho(2, 0) = 0.5 * fxx;
  r.rho(1, 2) = r.rho(2, 1) = 0.5 * fxy;
  r.rho(2, 2) = 0.5 * (f.value() * fxx - fyy);
  r.Q(0, 0) = 0.5 * fxx;
  r.Q(0, 1) = 0.5 * fxy;
  r.Q(0, 2) = -0.5 * fyy;
  r.Q(1, 2) = 0.5 * fxy;
  r.Q(2, 2) = 0.5 * fxx;
  r.scal = fxx;
  return r;
}

Ricci ricci_at(const WalkerManifold& m, const Point3& p) {
  require_lorentzian(m);
  return walker_ricci(m.f_jet(p, 2));
}

double curvature_form(const Curvature& r, const Metric& g, const Vec3& x, const Vec3& y, const Vec3& z,
                      const Vec3& w) {
  return dot(lower(g, act(r, x, y, z)), w);
}

std::string to_string(SegreType t) {
  switch (t) {
    case SegreType::Type11_1_degenerate:
      return "{11;1} degenerate";
    case SegreType::Flat:
      return "flat";
    case SegreType::Other:
      return "other";
  }
  return "other";
}

FlatnessVerdict is_flat(const WalkerManifold& m, const SamplingConfig& cfg) {
  const ScalarField fx = m.f().diff(Axis::X);
  FlatnessVerdict v;
  v.f_xx = is_identically_zero(fx.diff(Axis::X), m.domain(), cfg);
  v.f_xy = is_identically_zero(fx.diff(Axis::Y), m.domain(), cfg);
  v.f_yy = is_identically_zero(m.f().diff(Axis::Y).diff(Axis::Y), m.domain(), cfg);
  v.flat = v.f_xx.zero && v.f_xy.zero && v.f_yy.zero;
  return v;
}

SegreVerdict segre_type(const WalkerManifold& m, const Point3& p, const SamplingConfig& cfg) {
  require_lorentzian(m);
  SegreVerdict v;
  if (is_flat(m, cfg).flat) {
    v.type = SegreType::Flat;
    return v;
  }
  const Jet3 f = m.f_jet(p, 2);
  const double fxx = f.d(Axis::X, Axis::X);
  const double fxy = f.d(Axis::X, Axis::Y);
  const double fyy = f.d(Axis::Y, Axis::Y);
  const double disc = fxy * fxy - fxx * fyy;
  if (!negligible(disc, fxy * fxy + std::abs(fxx * fyy), cfg.tol) || negligible(fxx, 0.0, cfg.tol)) {
    v.type = SegreType::Other;
    return v;
  }
  v.type = SegreType::Type11_1_degenerate;
  v.lambda1 = 0.0;
  v.lambda23 = 0.5 * fxx;
  const double r = fxy / fxx;
  v.N = Vec3{-r, 1.0, 0.0};
  v.V1 = Vec3{1.0, 0.0, 0.0};
  v.V2 = Vec3{0.0, r, 1.0};
  const Endomorphism Q = walker_ricci(f).Q;
  v.eigen_residual = std::max({max_abs(act(Q, *v.N)), max_abs(act(Q, *v.V1) - v.lambda23 * *v.V1),
                               max_abs(act(Q, *v.V2) - v.lambda23 * *v.V2)});
  v.eigen_verified = v.eigen_residual <= 1e-10 * (1.0 + std::abs(fxx) + std::abs(fxy) + std::abs(fyy));
  return v;
}

ZeroVerdict is_strict_walker(const WalkerManifold& m, const SamplingConfig& cfg) {
  return is_identically_zero(m.f().diff(Axis::X), m.domain(), cfg);
}

}  // namespace walkerpc
