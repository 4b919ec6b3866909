#include "walkerpc/f_tensor.hpp"

#include <algorithm>
#include <cmath>

#include "walkerpc/levi_civita.hpp"

namespace walkerpc {
namespace {

void set_antisymmetric(Covariant3& F, int i, int j, int k, double v) {
  F(i, j, k) = v;
  F(i, k, j) = -v;
}

/// F(X, phi Y, xi) as a matrix over (X, Y) basis indices.
Covariant2 f_phi_xi(const Covariant3& F, const StructureJets& j) {
  Covariant2 r;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      double s = 0.0;
      for (int a = 0; a < 3; ++a)
        for (int k = 0; k < 3; ++k) s += F(x, a, k) * j.phi_value(a, y) * j.xi_value[k];
      r(x, y) = s;
    }
  return r;
}

template <class T>
double max_relative(const T& a, const T& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, relative_discrepancy(a.data()[i], b.data()[i]));
  return m;
}

}  // namespace

Covariant3 f_closed_form(const StructureJets& j) {
  const Jet3& f = j.f;
  const double fv = f.value();
  const double fx = f.d(Axis::X), fy = f.d(Axis::Y), fz = f.d(Axis::Z);
  const Jet3& a = j.xi[0];
  const Jet3& b = j.xi[1];
  const Jet3& c = j.xi[2];
  const double av = a.value(), bv = b.value(), cv = c.value();
  Covariant3 F;
  set_antisymmetric(F, 0, 0, 1, c.d(Axis::X));
  set_antisymmetric(F, 0, 0, 2, -b.d(Axis::X));
  set_antisymmetric(F, 0, 1, 2, a.d(Axis::X) + 0.5 * cv * fx);
  set_antisymmetric(F, 1, 0, 1, c.d(Axis::Y));
  set_antisymmetric(F, 1, 0, 2, -b.d(Axis::Y));
  set_antisymmetric(F, 1, 1, 2, a.d(Axis::Y) + 0.5 * cv * fy);
  set_antisymmetric(F, 2, 0, 1, c.d(Axis::Z) - 0.5 * cv * fx);
  set_antisymmetric(F, 2, 0, 2, -b.d(Axis::Z) + 0.5 * cv * fy);
  set_antisymmetric(F, 2, 1, 2, a.d(Axis::Z) + 0.5 * (av * fx + bv * fy + cv * fz + cv * fv * fx));
  return F;
}

Covariant3 f_from_nabla_phi(const StructureJets& j) {
  const Christoffel G = christoffel_values(levi_civita(walker_metric_jets(j.f.truncated(1), 1)));
  Covariant3 F;
  for (int i = 0; i < 3; ++i) {
    // (nabla_i phi)^a_b
    Endomorphism np;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        double v = j.phi[a][b].d(i);
        for (int c = 0; c < 3; ++c) v += G(a, i, c) * j.phi_value(c, b) - G(c, i, b) * j.phi_value(a, c);
        np(a, b) = v;
      }
    for (int b = 0; b < 3; ++b)
      for (int k = 0; k < 3; ++k) {
        double v = 0.0;
        for (int a = 0; a < 3; ++a) v += j.g(k, a) * np(a, b);
        F(i, b, k) = v;
      }
  }
  return F;
}

ThetaForms theta_contraction(const Covariant3& F, const StructureJets& j) {
  ThetaForms t;
  for (int i = 0; i < 3; ++i)
    for (int jj = 0; jj < 3; ++jj) {
      const double gij = j.ginv(i, jj);
      if (gij == 0.0) continue;
      for (int k = 0; k < 3; ++k) {
        t.theta += gij * F(i, jj, k) * j.xi_value[k];
        for (int a = 0; a < 3; ++a) t.theta_star += gij * j.phi_value(a, jj) * F(i, a, k) * j.xi_value[k];
      }
    }
  return t;
}

ThetaJets theta_closed_form(const StructureJets& j) {
  const int o = std::max(j.f.order() - 1, 0);
  const Jet3 f = j.f.truncated(o);
  const Jet3 fx = j.f.derivative(Axis::X), fy = j.f.derivative(Axis::Y), fz = j.f.derivative(Axis::Z);
  const Jet3 a = j.xi[0].truncated(o), b = j.xi[1].truncated(o), c = j.xi[2].truncated(o);
  const Jet3 ax = j.xi[0].derivative(Axis::X), ay = j.xi[0].derivative(Axis::Y), az = j.xi[0].derivative(Axis::Z);
  const Jet3 bx = j.xi[1].derivative(Axis::X), by = j.xi[1].derivative(Axis::Y), bz = j.xi[1].derivative(Axis::Z);
  const Jet3 cx = j.xi[2].derivative(Axis::X), cy = j.xi[2].derivative(Axis::Y), cz = j.xi[2].derivative(Axis::Z);
  const Jet3 fc_a = f * c + a;

  ThetaJets t;
  t.theta = a * (bx - cy) - b * (f * cx + ax + c * fx - cz) + c * (f * bx + ay + c * fy - bz);
  t.theta_star = a * (fc_a * cx + b * bx - c * by - c * (cz - 0.5 * c * fx)) +
                 b * (fc_a * cy - b * ax - b * cz + c * (ay + 0.5 * c * fy)) +
                 c * (-(fc_a * (ax + by)) + b * bz + c * (az + 0.5 * c * fz));
  return t;
}

FTensorValue f_tensor_at(const StructureJets& j) {
  FTensorValue v;
  v.F = f_closed_form(j);
  const ThetaJets t = theta_closed_form(j);
  v.theta = t.theta.value();
  v.theta_star = t.theta_star.value();
  for (int k = 0; k < 3; ++k) v.f_xi_xi[k] = eval(v.F, j.xi_value, j.xi_value, basis(k));
  return v;
}

FTensorValue f_tensor_at(const ApctStructure& s, const Point3& p) { return f_tensor_at(s.jets_at(p, 1)); }

ThetaForms theta_forms(const ApctStructure& s, const Point3& p) {
  const ThetaJets t = theta_closed_form(s.jets_at(p, 1));
  return {t.theta.value(), t.theta_star.value()};
}

Covariant2 fundamental_form(const StructureJets& j) {
  Covariant2 r;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      double s = 0.0;
      for (int a = 0; a < 3; ++a) s += j.phi_value(a, x) * j.g(a, y);
      r(x, y) = s;
    }
  return r;
}

DEtaRoutes d_eta(const StructureJets& j, const Covariant3& F) {
  DEtaRoutes r;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) r.coordinate(x, y) = 0.5 * (j.eta[y].d(x) - j.eta[x].d(y));

  const Covariant2 fp = f_phi_xi(F, j);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) r.via_f(x, y) = 0.5 * (-fp(x, y) + fp(y, x));

  const double fv = j.f.value();
  const Jet3 &a = j.xi[0], &b = j.xi[1], &c = j.xi[2];
  const double cv = c.value();
  const double dxy = 0.5 * (b.d(Axis::X) - c.d(Axis::Y));
  const double dxz = 0.5 * (a.d(Axis::X) + cv * j.f.d(Axis::X) + fv * c.d(Axis::X) - c.d(Axis::Z));
  const double dyz = 0.5 * (a.d(Axis::Y) + cv * j.f.d(Axis::Y) + fv * c.d(Axis::Y) - b.d(Axis::Z));
  r.components(0, 1) = dxy;
  r.components(1, 0) = -dxy;
  r.components(0, 2) = dxz;
  r.components(2, 0) = -dxz;
  r.components(1, 2) = dyz;
  r.components(2, 1) = -dyz;
  return r;
}

DEtaRoutes d_eta(const ApctStructure& s, const Point3& p) {
  const StructureJets j = s.jets_at(p, 1);
  return d_eta(j, f_closed_form(j));
}

DPhiRoutes d_phi(const StructureJets& j, const Covariant3& F) {
  DPhiRoutes r;
  const MetricJets g = walker_metric_jets(j.f, 1);
  // Phi_ab as jets.
  std::array<std::array<Jet3, 3>, 3> phi_form;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      Jet3 s(j.f.order());
      for (int a = 0; a < 3; ++a) s += j.phi[a][x] * g[a][y];
      phi_form[x][y] = s;
    }
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) {
        r.cyclic(x, y, z) = F(x, y, z) + F(y, z, x) + F(z, x, y);
        r.coordinate(x, y, z) = phi_form[y][z].d(x) + phi_form[z][x].d(y) + phi_form[x][y].d(z);
      }
  return r;
}

DPhiRoutes d_phi(const ApctStructure& s, const Point3& p) {
  const StructureJets j = s.jets_at(p, 1);
  return d_phi(j, f_closed_form(j));
}

LieRoutes lie_xi_g(const StructureJets& j, const Covariant3& F) {
  LieRoutes r;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) {
        s += j.g(k, y) * j.xi[k].d(x) + j.g(x, k) * j.xi[k].d(y);
      }
      if (x == 2 && y == 2) {
        for (int k = 0; k < 3; ++k) s += j.xi_value[k] * j.f.d(k);
      }
      r.coordinate(x, y) = s;
    }

  std::array<Vec3, 3> nxi;
  for (int i = 0; i < 3; ++i) nxi[i] = nabla_xi(j, basis(i));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) r.nabla_eta(x, y) = eval(j.g, nxi[x], basis(y)) + eval(j.g, nxi[y], basis(x));

  const Covariant2 fp = f_phi_xi(F, j);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) r.via_f(x, y) = -fp(x, y) - fp(y, x);
  return r;
}

LieRoutes lie_xi_g(const ApctStructure& s, const Point3& p) {
  const StructureJets j = s.jets_at(p, 1);
  return lie_xi_g(j, f_closed_form(j));
}

Vec3 nijenhuis(const StructureJets& j, const Vec3& x, const Vec3& y) {
  // For constant X, Y: [X,Y] = 0, [phiX, phiY]^a = (phiX)^b d_b(phiY)^a - (phiY)^b d_b(phiX)^a,
  // [phiX, Y] = -Y^b d_b(phiX), [X, phiY] = X^b d_b(phiY).
  const Vec3 px = act(j.phi_value, x);
  const Vec3 py = act(j.phi_value, y);
  auto directional = [&](const Vec3& dir, const Vec3& v) {
    // dir^b d_b (phi v)
    Vec3 r{0.0, 0.0, 0.0};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) r[a] += dir[b] * j.phi[a][c].d(b) * v[c];
    return r;
  };
  const Vec3 bracket_pp = directional(px, y) - directional(py, x);
  const Vec3 bracket_px_y = -1.0 * directional(y, x);
  const Vec3 bracket_x_py = directional(x, y);
  return bracket_pp - act(j.phi_value, bracket_px_y) - act(j.phi_value, bracket_x_py);
}

Vec3 nijenhuis(const ApctStructure& s, const Point3& p, const Vec3& x, const Vec3& y) {
  return nijenhuis(s.jets_at(p, 1), x, y);
}

Vec3 normality_defect(const StructureJets& j, const Covariant2& deta, const Vec3& x, const Vec3& y) {
  return nijenhuis(j, x, y) - (2.0 * eval(deta, x, y)) * j.xi_value;
}

ProjectionBundle project_components(const StructureJets& j, const FTensorValue& f) {
  ProjectionBundle pb;
  const Endomorphism& phi = j.phi_value;
  const Vec3& eta = j.eta_value;
  const Vec3& xi = j.xi_value;
  Covariant2 G;  // g(phi d_a, phi d_b)
  Covariant2 H;  // g(d_a, phi d_b)
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      G(a, b) = eval(j.g, act(phi, basis(a)), act(phi, basis(b)));
      H(a, b) = eval(j.g, basis(a), act(phi, basis(b)));
    }
  const Vec3& w = f.f_xi_xi;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) {
        pb.F5(x, y, z) = 0.5 * f.theta * (eta[y] * G(x, z) - eta[z] * G(x, y));
        pb.F6(x, y, z) = -0.5 * f.theta_star * (eta[y] * H(x, z) - eta[z] * H(x, y));
        pb.F12(x, y, z) = eta[x] * (eta[y] * w[z] - eta[z] * w[y]);
      }
  pb.F10 = f.F - pb.F5 - pb.F6 - pb.F12;
  pb.residual = f.F - (pb.F5 + pb.F6 + pb.F10 + pb.F12);

  Covariant2 T;  // F10(d_a, d_b, xi)
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += pb.F10(a, b, k) * xi[k];
      T(a, b) = s;
    }
  double v = 0.0;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      for (int z = 0; z < 3; ++z) {
        v = std::max(v, std::abs(pb.F10(x, y, z) + eta[y] * T(x, z) - eta[z] * T(x, y)));
      }
      v = std::max(v, std::abs(T(x, y) - T(y, x)));
      double tpp = 0.0;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) tpp += phi(a, x) * phi(b, y) * T(a, b);
      v = std::max(v, std::abs(T(x, y) - tpp));
    }
  pb.g10_violation = v;
  return pb;
}

ProjectionBundle project_components(const ApctStructure& s, const Point3& p) {
  const StructureJets j = s.jets_at(p, 1);
  return project_components(j, f_tensor_at(j));
}

double antisymmetry_defect(const Covariant3& F) {
  double m = 0.0;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) m = std::max(m, std::abs(F(x, y, z) + F(x, z, y)));
  return m;
}

double f_space_defect(const Covariant3& F, const StructureJets& j) {
  const Endomorphism& phi = j.phi_value;
  const Vec3& eta = j.eta_value;
  const Vec3& xi = j.xi_value;
  double m = 0.0;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) {
        const double lhs = eval(F, basis(x), act(phi, basis(y)), act(phi, basis(z)));
        const double rhs = F(x, y, z) + eta[y] * eval(F, basis(x), basis(z), xi) - eta[z] * eval(F, basis(x), basis(y), xi);
        m = std::max(m, std::abs(lhs - rhs));
      }
  return m;
}

std::vector<RouteDiscrepancy> route_discrepancies(const ApctStructure& s, const std::vector<Point3>& points) {
  std::vector<RouteDiscrepancy> out;
  for (const char* name : {"F closed form vs nabla phi", "theta closed form vs contraction",
                           "theta* closed form vs contraction", "d eta coordinate vs F",
                           "d eta coordinate vs components", "d phi cyclic F vs coordinate",
                           "Lie derivative coordinate vs nabla eta", "Lie derivative coordinate vs F"}) {
    out.emplace_back().name = name;
  }
  auto record = [&](std::size_t i, double d, const Point3& p) {
    if (!out[i].witness || d > out[i].max_discrepancy) {
      out[i].max_discrepancy = d;
      out[i].witness = p;
    }
  };
  for (const auto& p : points) {
    const StructureJets j = s.jets_at(p, 2);
    const Covariant3 F = f_closed_form(j);
    record(0, max_relative(F, f_from_nabla_phi(j)), p);
    const ThetaJets tc = theta_closed_form(j);
    const ThetaForms tk = theta_contraction(F, j);
    record(1, relative_discrepancy(tc.theta.value(), tk.theta), p);
    record(2, relative_discrepancy(tc.theta_star.value(), tk.theta_star), p);
    const DEtaRoutes de = d_eta(j, F);
    record(3, max_relative(de.coordinate, de.via_f), p);
    record(4, max_relative(de.coordinate, de.components), p);
    const DPhiRoutes dp = d_phi(j, F);
    record(5, max_relative(dp.cyclic, dp.coordinate), p);
    const LieRoutes lr = lie_xi_g(j, F);
    record(6, max_relative(lr.coordinate, lr.nabla_eta), p);
    record(7, max_relative(lr.coordinate, lr.via_f), p);
  }
  return out;
}

}  // namespace walkerpc
