#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "walkerpc/jet.hpp"
#include "walkerpc/sampling.hpp"
#include "walkerpc/scalar_field.hpp"
#include "walkerpc/tensor.hpp"
#include "walkerpc/walker_metric.hpp"

namespace walkerpc {

/// Components of the Reeb field xi = xi1 d_x + xi2 d_y + xi3 d_z.
struct ReebField {
  ScalarField xi1;
  ScalarField xi2;
  ScalarField xi3;

  const ScalarField& operator[](int i) const { return i == 0 ? xi1 : (i == 1 ? xi2 : xi3); }
};

/// phi[a][b] is the component phi^a_b, i.e. phi(d_b) = phi^a_b d_a.
using FieldMatrix = std::array<std::array<ScalarField, 3>, 3>;

/// Jets of every structure function at one point, plus their values.
struct StructureJets {
  Point3 point;
  Jet3 f;
  std::array<Jet3, 3> xi;
  std::array<std::array<Jet3, 3>, 3> phi;
  std::array<Jet3, 3> eta;

  Metric g;
  InverseMetric ginv;
  Endomorphism phi_value;
  Vec3 xi_value{};
  Vec3 eta_value{};
  /// Square of the largest magnitude among f, xi and their derivatives up to
  /// order 2 (at least 1). Zero tests of structure quantities are relative
  /// to it.
  double scale = 1.0;
};

/// Almost paracontact metric structure (phi, xi, eta, g) on an epsilon = +1
/// Walker manifold, determined by f and a g-unit Reeb field:
///
///   phi = | -xi2  xi1 + f xi3  -f xi2 |      eta = xi3 dx + xi2 dy + (xi1 + f xi3) dz
///         |  xi3  0            -xi1   |
///         |  0    -xi3          xi2   |
///
/// with xi2^2 + f xi3^2 + 2 xi1 xi3 = 1.
class ApctStructure {
 public:
  /// Throws NonExistenceError for epsilon = -1 and UnitConstraintError (with
  /// a witness point) when xi is not g-unit on the sampled domain.
  static ApctStructure build(WalkerManifold manifold, ReebField xi, const SamplingConfig& cfg = {});

  const WalkerManifold& manifold() const { return manifold_; }
  const ReebField& xi() const { return xi_; }
  const FieldMatrix& phi() const { return phi_; }
  const std::array<ScalarField, 3>& eta() const { return eta_; }
  const Domain& domain() const { return manifold_.domain(); }
  /// True when phi was replaced through with_phi_entry().
  bool phi_overridden() const { return overridden_; }

  /// xi2^2 + f xi3^2 + 2 xi1 xi3 - 1.
  ScalarField unit_defect() const;

  /// Copy with phi^row_col replaced (0-based indices); for negative controls.
  ApctStructure with_phi_entry(int row, int col, ScalarField value) const;

  /// Throws DomainError where a structure function cannot be evaluated.
  StructureJets jets_at(const Point3& p, int order = Jet3::kMaxOrder) const;
  bool evaluable_at(const Point3& p) const;
  /// Admissible points at which every structure function is evaluable.
  std::vector<Point3> sample(const SamplingConfig& cfg) const;

 private:
  ApctStructure(WalkerManifold manifold, ReebField xi);

  WalkerManifold manifold_;
  ReebField xi_;
  FieldMatrix phi_;
  std::array<ScalarField, 3> eta_;
  bool overridden_ = false;
};

struct AxiomCheck {
  std::string name;
  bool pass = true;
  double max_residual = 0.0;
  std::optional<Point3> witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_pass() const;
  const AxiomCheck& at(const std::string& name) const;
};

/// Checks at every sample point with random arguments X, Y:
///   phi_squared           phi^2 X = X - eta(X) xi
///   reeb_normalized       eta(xi) = 1, phi xi = 0
///   metric_compatible     g(phiX, phiY) = -g(X,Y) + eta(X) eta(Y)
///   eta_metric_dual       eta(X) = g(X, xi)
///   phi_skew              g(phiX, Y) = -g(X, phiY)
///   xi_unit               g(xi, xi) = 1
AxiomReport validate_axioms(const ApctStructure& s, const SamplingConfig& cfg = {});

/// nabla_X xi at p, from the derivatives of the xi components and the
/// closed-form connection.
Vec3 nabla_xi(const ApctStructure& s, const Vec3& x, const Point3& p);
Vec3 nabla_xi(const StructureJets& j, const Vec3& x);

}  // namespace walkerpc
