#include "walkerpc/apct_structure.hpp"

#include <algorithm>
#include <cmath>

#include "walkerpc/error.hpp"

namespace walkerpc {

ApctStructure::ApctStructure(WalkerManifold manifold, ReebField xi)
    : manifold_(std::move(manifold)), xi_(std::move(xi)) {
  const ScalarField& f = manifold_.f();
  const ScalarField& x1 = xi_.xi1;
  const ScalarField& x2 = xi_.xi2;
  const ScalarField& x3 = xi_.xi3;
  const ScalarField zero;
  const ScalarField x1_fx3 = x1 + f * x3;
  phi_ = {{{-x2, x1_fx3, -(f * x2)}, {x3, zero, -x1}, {zero, -x3, x2}}};
  eta_ = {x3, x2, x1_fx3};
}

ScalarField ApctStructure::unit_defect() const {
  const ScalarField& f = manifold_.f();
  return pow(xi_.xi2, 2) + f * pow(xi_.xi3, 2) + ScalarField(2) * xi_.xi1 * xi_.xi3 - ScalarField(1);
}

ApctStructure ApctStructure::build(WalkerManifold manifold, ReebField xi, const SamplingConfig& cfg) {
  if (manifold.epsilon() != 1) {
    throw NonExistenceError(
        "a Walker metric with epsilon = -1 carries no almost paracontact metric structure");
  }
  ApctStructure s(std::move(manifold), std::move(xi));
  const ScalarField defect = s.unit_defect();
  const auto points = s.sample(cfg);
  const ZeroVerdict v = zero_test(points, [&](const Point3& p) { return defect.eval_scaled(p); }, cfg.tol);
  if (!v.zero) {
    throw UnitConstraintError("xi is not g-unit: xi2^2 + f xi3^2 + 2 xi1 xi3 - 1 = " +
                                  std::to_string(defect.eval(*v.witness)),
                              *v.witness, v.magnitude);
  }
  return s;
}

ApctStructure ApctStructure::with_phi_entry(int row, int col, ScalarField value) const {
  ApctStructure copy = *this;
  copy.phi_.at(static_cast<std::size_t>(row)).at(static_cast<std::size_t>(col)) = std::move(value);
  copy.overridden_ = true;
  return copy;
}

StructureJets ApctStructure::jets_at(const Point3& p, int order) const {
  StructureJets j;
  j.point = p;
  j.f = manifold_.f_jet(p, order);
  double m = std::max(1.0, j.f.max_abs_derivative(2));
  for (int i = 0; i < 3; ++i) {
    j.xi[i] = xi_[i].jet(p, order);
    m = std::max(m, j.xi[i].max_abs_derivative(2));
    j.eta[i] = eta_[i].jet(p, order);
    j.xi_value[i] = j.xi[i].value();
    j.eta_value[i] = j.eta[i].value();
    for (int b = 0; b < 3; ++b) {
      j.phi[i][b] = phi_[i][b].jet(p, order);
      j.phi_value(i, b) = j.phi[i][b].value();
    }
  }
  const MetricPair g = walker_metric(j.f.value(), manifold_.epsilon());
  j.g = g.g;
  j.ginv = g.inverse;
  j.scale = m * m;
  return j;
}

bool ApctStructure::evaluable_at(const Point3& p) const {
  try {
    (void)jets_at(p);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

std::vector<Point3> ApctStructure::sample(const SamplingConfig& cfg) const {
  return sample_points(domain(), cfg, [this](const Point3& p) { return evaluable_at(p); });
}

bool AxiomReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

const AxiomCheck& AxiomReport::at(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw PreconditionError("no axiom check named '" + name + "'");
}

namespace {

constexpr double kAxiomTol = 1e-10;

struct Accumulator {
  AxiomCheck check;
  double worst = 0.0;

  explicit Accumulator(std::string name) { check.name = std::move(name); }

  void add(double residual, double magnitude, const Point3& p) {
    check.max_residual = std::max(check.max_residual, residual);
    if (negligible(residual, magnitude, kAxiomTol)) return;
    const double ratio = residual / (1.0 + magnitude);
    if (check.pass || ratio > worst) {
      worst = ratio;
      check.witness = p;
    }
    check.pass = false;
  }
};

double abs_sum(std::initializer_list<double> v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

}  // namespace

AxiomReport validate_axioms(const ApctStructure& s, const SamplingConfig& cfg) {
  const auto points = s.sample(cfg);
  Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  Accumulator phi_sq("phi_squared"), reeb("reeb_normalized"), compat("metric_compatible"),
      dual("eta_metric_dual"), skew("phi_skew"), unit("xi_unit");

  for (const auto& p : points) {
    const StructureJets j = s.jets_at(p, 0);
    const Endomorphism& phi = j.phi_value;
    const Vec3& xi = j.xi_value;
    const Vec3& eta = j.eta_value;
    const Vec3 x = rng.vector();
    const Vec3 y = rng.vector();
    const Vec3 px = act(phi, x);
    const Vec3 py = act(phi, y);
    const Vec3 ppx = act(phi, px);
    const double eta_x = dot(eta, x);
    const double eta_y = dot(eta, y);

    const Vec3 r1 = ppx - (x - eta_x * xi);
    phi_sq.add(max_abs(r1), max_abs(ppx) + max_abs(x) + std::abs(eta_x) * max_abs(xi), p);

    const Vec3 pxi = act(phi, xi);
    reeb.add(std::max(std::abs(dot(eta, xi) - 1.0), max_abs(pxi)), 1.0 + max_abs(xi) * max_abs(eta), p);

    const double gpp = eval(j.g, px, py);
    const double gxy = eval(j.g, x, y);
    compat.add(std::abs(gpp + gxy - eta_x * eta_y), abs_sum({gpp, gxy, eta_x * eta_y}), p);

    const double gxxi = eval(j.g, x, xi);
    dual.add(std::abs(eta_x - gxxi), abs_sum({eta_x, gxxi}), p);

    const double a = eval(j.g, px, y);
    const double b = eval(j.g, x, py);
    skew.add(std::abs(a + b), abs_sum({a, b}), p);

    const double gxixi = eval(j.g, xi, xi);
    unit.add(std::abs(gxixi - 1.0), 1.0 + std::abs(j.f.value()) * xi[2] * xi[2], p);
  }
  AxiomReport r;
  for (auto* acc : {&phi_sq, &reeb, &compat, &dual, &skew, &unit}) r.checks.push_back(acc->check);
  return r;
}

Vec3 nabla_xi(const StructureJets& j, const Vec3& x) {
  const Christoffel gamma = walker_christoffel(j.f);
  Vec3 r{0.0, 0.0, 0.0};
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      double s = j.xi[k].d(i);
      for (int l = 0; l < 3; ++l) s += gamma(k, i, l) * j.xi_value[l];
      r[k] += x[i] * s;
    }
  }
  return r;
}

Vec3 nabla_xi(const ApctStructure& s, const Vec3& x, const Point3& p) {
  s.manifold().require_in_domain(p);
  return nabla_xi(s.jets_at(p, 1), x);
}

}  // namespace walkerpc
