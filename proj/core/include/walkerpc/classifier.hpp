#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "walkerpc/apct_structure.hpp"
#include "walkerpc/f_tensor.hpp"
#include "walkerpc/sampling.hpp"

namespace walkerpc {

/// Everything the decision procedures need at one sample point.
struct SampledPoint {
  StructureJets jets;
  FTensorValue f;
  ProjectionBundle parts;
  ThetaJets theta;
  /// Magnitude that structure quantities at this point are compared against.
  double scale = 1.0;
};

/// A structure evaluated once on its sample points.
struct SampledStructure {
  std::vector<Point3> points;
  std::vector<SampledPoint> data;
  double tol = 1e-9;
};

SampledStructure sample_structure(const ApctStructure& s, const SamplingConfig& cfg = {});

/// Zero test of a per-point quantity over a sampled structure; the probe
/// returns (value, scale).
ZeroVerdict zero_over(const SampledStructure& ss, const std::function<ScaledValue(const SampledPoint&)>& probe);

/// Zero test of a symbolic field at the given points; points where it cannot
/// be evaluated count as nonzero.
ZeroVerdict symbolic_zero(const ScalarField& e, const std::vector<Point3>& points, double tol);

enum class BasicClass { G0, G5, G5bar, G6, G10, G12 };
std::string to_string(BasicClass c);

/// Basic-class membership from the projection components.
struct BasicVerdict {
  /// Nonzero components. G5bar replaces G5 when theta(xi) = 2; G0 alone when F = 0.
  std::set<BasicClass> classes;
  /// zero = the component vanishes on the sampled domain.
  ZeroVerdict g5, g6, g10, g12;
  /// Zero test of theta(xi) - 2.
  ZeroVerdict theta_minus_two;
  double decomposition_residual = 0.0;
  double g10_violation = 0.0;
  bool decomposition_ok = true;

  /// G5 also matches G5bar.
  bool has(BasicClass c) const;
  /// Direct-sum label such as "G5 + G6".
  std::string label() const;
};

BasicVerdict classify_basic(const SampledStructure& ss);
BasicVerdict classify_basic(const ApctStructure& s, const SamplingConfig& cfg = {});

enum class NamedClass {
  ParacontactMetric,
  ParaSasakian,
  KParacontact,
  QuasiParaSasakian,
  Normal,
  AlmostAlphaParacosymplectic,
  AlphaParacosymplectic,
  AlmostAlphaParaKenmotsu,
  AlphaParaKenmotsu,
  AlmostParacosymplectic,
  Paracosymplectic,
};
std::string to_string(NamedClass c);
const std::vector<NamedClass>& all_named_classes();

struct NamedVerdict {
  bool value = false;
  /// Point at which a defining quantity fails, when one exists.
  std::optional<Point3> witness;
};

/// Agreement between two independent decisions of the same property.
struct CrossCheck {
  std::string name;
  bool agree = true;
  std::string detail;
  std::optional<Point3> witness;
};

/// Coordinate settings with dedicated closed-form conditions.
enum class ReebSetting {
  General,
  /// xi3 = 0, xi2 = +1 or -1.
  Horizontal,
  /// xi1 = xi2 = 0, xi3 = 1/sqrt(f).
  Vertical,
};
std::string to_string(ReebSetting s);

struct SettingInfo {
  ReebSetting setting = ReebSetting::General;
  /// Value of xi2 in the horizontal setting.
  int sign = 0;
};
SettingInfo detect_setting(const ApctStructure& s, const SampledStructure& ss);

struct ParacontactVerdict {
  bool value = false;
  std::optional<Point3> witness;
  /// dEta = Phi expressed as three first-order conditions on f and xi.
  bool pde_route = false;
  /// dEta(X,Y) = g(phi X, Y) evaluated numerically.
  bool form_route = false;
  /// xi3 = 0 or xi1 = xi2 = 0, where the answer is known to be negative.
  bool fast_path = false;
  std::vector<CrossCheck> checks;
};
ParacontactVerdict is_paracontact_metric(const ApctStructure& s, const SampledStructure& ss);
ParacontactVerdict is_paracontact_metric(const ApctStructure& s, const SamplingConfig& cfg = {});

struct NormalVerdict {
  bool value = false;
  std::optional<Point3> witness;
  /// N(X,Y) - 2 dEta(X,Y) xi = 0.
  bool nijenhuis_route = false;
  /// F has no G10 or G12 component.
  bool class_route = false;
  /// Closed-form conditions in the horizontal setting.
  std::optional<bool> coordinate_route;
  std::vector<CrossCheck> checks;
};
NormalVerdict is_normal(const ApctStructure& s, const SampledStructure& ss);
NormalVerdict is_normal(const ApctStructure& s, const SamplingConfig& cfg = {});

/// alpha = -theta*(xi)/2 on the sampled domain.
struct AlphaReport {
  double min = 0.0;
  double max = 0.0;
  /// Zero test of the gradient of theta*(xi); only the sampled domain is covered.
  ZeroVerdict gradient;
  bool constant() const { return gradient.zero; }
};
AlphaReport alpha_report(const SampledStructure& ss);

/// Relations that each basic component obeys, checked on the full F:
///   theta(xi) is carried by F5 and theta*(xi) by F6;
///   dEta = theta/2 Phi + 1/2(eta(X) F(xi,xi,phiY) - eta(Y) F(xi,xi,phiX));
///   dPhi = -theta*(xi) eta ^ Phi.
struct VanishingLaws {
  ZeroVerdict theta_outside_g5;
  ZeroVerdict theta_star_outside_g6;
  ZeroVerdict d_eta_law;
  ZeroVerdict d_phi_law;
  bool all_hold() const {
    return theta_outside_g5.zero && theta_star_outside_g6.zero && d_eta_law.zero && d_phi_law.zero;
  }
};
VanishingLaws vanishing_laws(const SampledStructure& ss);

/// (eta ^ Phi)(X,Y,Z) = eta(Y) g(X,phiZ) - eta(Z) g(X,phiY) - eta(X) g(Y,phiZ).
Covariant3 eta_wedge_phi(const StructureJets& j);

struct ClassVerdict {
  BasicVerdict basic;
  std::map<NamedClass, NamedVerdict> named;
  SettingInfo setting;
  AlphaReport alpha;
  VanishingLaws laws;
  std::vector<CrossCheck> checks;
  bool routes_agree = true;

  bool is(NamedClass c) const { return named.at(c).value; }
};

ClassVerdict named_classes(const ApctStructure& s, const SampledStructure& ss);
ClassVerdict named_classes(const ApctStructure& s, const SamplingConfig& cfg = {});

/// f = 2 psi'(z) x + m(z), xi = ((1 - f xi3^2) / (2 xi3), 0, exp(-2y + psi(z))).
/// psi and m must depend on z only; throws PreconditionError otherwise.
ApctStructure exponential_paracontact_family(const ScalarField& psi, const ScalarField& m, Domain domain = {},
                                             const SamplingConfig& cfg = {});

}  // namespace walkerpc
