#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "walkerpc/apct_structure.hpp"
#include "walkerpc/classifier.hpp"
#include "walkerpc/walker_metric.hpp"

namespace walkerpc {

/// rho = a g + b eta (x) eta with a = -b = f_xx/2 != 0.
struct EtaEinsteinVerdict {
  bool is_eta_einstein = false;
  /// Coefficients at the first sample point; meaningful when is_eta_einstein.
  double a = 0.0;
  double b = 0.0;
  /// Residual rho - (a g + b eta (x) eta), componentwise.
  ZeroVerdict residual;
  /// Point where f_xx is smallest in magnitude when it is not bounded away from zero.
  std::optional<Point3> f_xx_degenerate_at;
  bool residual_route = false;
  /// xi3 = 0, xi2 = s, xi1 f_xx + s f_xy = 0, f_xy^2 - f_xx f_yy = 0, f_xx != 0.
  bool condition_route = false;
  /// Q xi = 0.
  ZeroVerdict q_xi;
  SegreVerdict segre;
  /// +1 when xi = N, -1 when xi = -N.
  std::optional<int> xi_matches_N;
  bool routes_agree = true;
};

/// Throws DegenerateInputError when xi is horizontal and f_xx changes sign
/// or vanishes on the sampled domain without vanishing identically.
EtaEinsteinVerdict eta_einstein_check(const ApctStructure& s, const SampledStructure& ss,
                                      const SamplingConfig& cfg = {});
EtaEinsteinVerdict eta_einstein_check(const ApctStructure& s, const SamplingConfig& cfg = {});

/// Domain-wide flat / eta-Einstein alternative.
enum class FlatOrEtaEinstein { Flat, EtaEinstein, Neither, Mixed };
std::string to_string(FlatOrEtaEinstein v);

struct CurvatureEquivalences {
  /// Q phi = phi Q.
  ZeroVerdict q_commutes;
  FlatOrEtaEinstein flat_or_eta_einstein = FlatOrEtaEinstein::Neither;
  /// R(X,Y) phi Z = phi R(X,Y) Z.
  ZeroVerdict r_commutes;
  /// rho(phiX, phiY) = -rho(X,Y).
  ZeroVerdict rho_anti_invariant;
  /// R(X,Y) xi = 0.
  ZeroVerdict r_xi;

  /// The five flags in order; the second is false for Neither and Mixed.
  std::vector<bool> flags() const;
  /// False only when the flags disagree outside the mixed case.
  bool agree() const;
  /// Mixed flat / eta-Einstein domains are reported without asserting agreement.
  bool asserted() const { return flat_or_eta_einstein != FlatOrEtaEinstein::Mixed; }
};

CurvatureEquivalences curvature_equivalences(const ApctStructure& s, const SampledStructure& ss,
                                             const SamplingConfig& cfg = {});
CurvatureEquivalences curvature_equivalences(const ApctStructure& s, const SamplingConfig& cfg = {});

/// Plane sections through X, with X projected orthogonally to xi.
struct SectionalReport {
  /// K(X, xi) = R(X,xi,xi,X) / (g(X,X) g(xi,xi) - g(X,xi)^2).
  double K_xi = 0.0;
  /// K(X, phiX) with the same pattern.
  double K_phi = 0.0;
  double scal = 0.0;
};

/// Throws DegenerateSectionError when either denominator is below 1e-8 of
/// |g(X,X) g(Y,Y)| + g(X,Y)^2.
SectionalReport sectional_curvatures(const ApctStructure& s, const Vec3& x, const Point3& p);

/// Sectional curvatures over sample points and random directions.
struct SectionalSurvey {
  double K_xi_min = 0.0, K_xi_max = 0.0;
  double K_phi_min = 0.0, K_phi_max = 0.0;
  double scal_min = 0.0, scal_max = 0.0;
  /// Largest variance of K(X, phiX) across directions at one point, relative to 1 + mean^2.
  double K_phi_direction_variance = 0.0;
  int evaluated = 0;
  /// Directions whose plane is within 1e-3 of degenerate, measured before
  /// cancellation in g; these are skipped.
  int skipped = 0;
  /// Constancy over the sampled domain, relative to `tol`.
  bool K_xi_constant = true;
  bool K_phi_constant = true;
  bool scal_constant = true;
};

SectionalSurvey sectional_survey(const SampledStructure& ss, int directions = 50, std::uint64_t seed = 42);

/// Consequences of the eta-Einstein condition.
struct EtaEinsteinReport {
  /// f_xx at the first sample point; the constant scalar curvature when scal_constant.
  double C = 0.0;
  ZeroVerdict f_xx_gradient;
  bool scal_constant = false;
  double a = 0.0;
  double b = 0.0;
  SectionalSurvey sections;
  bool K_xi_zero = false;
  /// K(X, phiX) = -C/2 everywhere.
  bool K_phi_matches = false;
  /// 2 f_xyz + f_x f_xy - C f_y.
  ZeroVerdict discriminant;
  /// Paracosymplectic when the discriminant vanishes, almost paracosymplectic otherwise.
  bool paracosymplectic = false;
  /// Agreement of the discriminant decision with named_classes.
  bool classifier_agrees = false;
};

/// Throws PreconditionError unless the structure is eta-Einstein.
EtaEinsteinReport eta_einstein_report(const ApctStructure& s, const SamplingConfig& cfg = {});

}  // namespace walkerpc
