#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walkerpc/apct_structure.hpp"
#include "walkerpc/tensor.hpp"

namespace walkerpc {

/// Structure tensor F(X,Y,Z) = g((nabla_X phi) Y, Z) at a point, with the
/// contractions used by the class conditions.
struct FTensorValue {
  /// (i, j, k) = F(d_i, d_j, d_k).
  Covariant3 F;
  /// theta(xi) = g^ij F(e_i, e_j, xi).
  double theta = 0.0;
  /// theta*(xi) = g^ij F(e_i, phi e_j, xi).
  double theta_star = 0.0;
  /// w_k = F(xi, xi, d_k).
  Vec3 f_xi_xi{};
};

/// F from the closed coordinate expansion in terms of f and xi.
Covariant3 f_closed_form(const StructureJets& j);
/// F from its definition: covariant derivative of phi under the
/// Levi-Civita connection computed from the metric jets.
Covariant3 f_from_nabla_phi(const StructureJets& j);

FTensorValue f_tensor_at(const StructureJets& j);
FTensorValue f_tensor_at(const ApctStructure& s, const Point3& p);

struct ThetaForms {
  double theta = 0.0;
  double theta_star = 0.0;
};

/// Contraction route for theta(xi), theta*(xi).
ThetaForms theta_contraction(const Covariant3& F, const StructureJets& j);

/// Closed forms of theta(xi) and theta*(xi) as jets (one order below `j`),
/// so their gradients are available.
struct ThetaJets {
  Jet3 theta;
  Jet3 theta_star;
};
ThetaJets theta_closed_form(const StructureJets& j);
ThetaForms theta_forms(const ApctStructure& s, const Point3& p);

/// Fundamental 2-form Phi(X,Y) = g(phi X, Y).
Covariant2 fundamental_form(const StructureJets& j);

/// d eta(X,Y) = 1/2((nabla_X eta)Y - (nabla_Y eta)X) by three routes.
struct DEtaRoutes {
  /// Coordinate exterior derivative of the components of eta.
  Covariant2 coordinate;
  /// 1/2(-F(X, phi Y, xi) + F(Y, phi X, xi)).
  Covariant2 via_f;
  /// Explicit components in terms of f and xi.
  Covariant2 components;
};
DEtaRoutes d_eta(const StructureJets& j, const Covariant3& F);
DEtaRoutes d_eta(const ApctStructure& s, const Point3& p);

/// d Phi by two routes.
struct DPhiRoutes {
  /// F(X,Y,Z) + F(Y,Z,X) + F(Z,X,Y).
  Covariant3 cyclic;
  /// Coordinate exterior derivative of Phi.
  Covariant3 coordinate;
};
DPhiRoutes d_phi(const StructureJets& j, const Covariant3& F);
DPhiRoutes d_phi(const ApctStructure& s, const Point3& p);

/// Lie derivative of g along xi by three routes.
struct LieRoutes {
  Covariant2 coordinate;
  /// (nabla_X eta)Y + (nabla_Y eta)X.
  Covariant2 nabla_eta;
  /// -F(X, phi Y, xi) - F(Y, phi X, xi).
  Covariant2 via_f;
};
LieRoutes lie_xi_g(const StructureJets& j, const Covariant3& F);
LieRoutes lie_xi_g(const ApctStructure& s, const Point3& p);

/// Nijenhuis torsion N(X,Y) of phi for constant-coefficient fields X, Y.
Vec3 nijenhuis(const StructureJets& j, const Vec3& x, const Vec3& y);
Vec3 nijenhuis(const ApctStructure& s, const Point3& p, const Vec3& x, const Vec3& y);
/// N(X,Y) - 2 d eta(X,Y) xi; vanishes identically exactly on normal structures.
Vec3 normality_defect(const StructureJets& j, const Covariant2& deta, const Vec3& x, const Vec3& y);

/// Split of F along the four three-dimensional basic classes.
struct ProjectionBundle {
  Covariant3 F5;
  Covariant3 F6;
  Covariant3 F10;
  Covariant3 F12;
  /// F - (F5 + F6 + F10 + F12).
  Covariant3 residual;
  /// Largest violation of the identities F10 must satisfy:
  /// F10(X,Y,Z) = -eta(Y) F10(X,Z,xi) + eta(Z) F10(X,Y,xi),
  /// F10(X,Y,xi) = F10(Y,X,xi) = F10(phiX, phiY, xi).
  double g10_violation = 0.0;
};

/// F5, F6 from theta, theta*; F12 from F(xi,xi,.); F10 as the remainder.
ProjectionBundle project_components(const StructureJets& j, const FTensorValue& f);
ProjectionBundle project_components(const ApctStructure& s, const Point3& p);

/// Largest violation of F(X,Y,Z) = -F(X,Z,Y).
double antisymmetry_defect(const Covariant3& F);
/// Largest violation of F(X, phiY, phiZ) = F(X,Y,Z) + eta(Y)F(X,Z,xi) - eta(Z)F(X,Y,xi).
double f_space_defect(const Covariant3& F, const StructureJets& j);

/// Worst relative disagreement between two routes over a set of points.
struct RouteDiscrepancy {
  std::string name;
  double max_discrepancy = 0.0;
  std::optional<Point3> witness;
};

/// All dual-route comparisons of this module over `points`.
std::vector<RouteDiscrepancy> route_discrepancies(const ApctStructure& s, const std::vector<Point3>& points);

}  // namespace walkerpc
