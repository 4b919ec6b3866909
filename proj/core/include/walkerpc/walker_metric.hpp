#pragma once

#include <optional>
#include <string>

#include "walkerpc/jet.hpp"
#include "walkerpc/levi_civita.hpp"
#include "walkerpc/sampling.hpp"
#include "walkerpc/scalar_field.hpp"
#include "walkerpc/tensor.hpp"

namespace walkerpc {

/// Three-dimensional Walker manifold with metric
///
///   g = | 0  0    1 |
///       | 0  eps  0 |
///       | 1  0    f |
///
/// in coordinates (x, y, z); d_x spans the parallel null distribution.
class WalkerManifold {
 public:
  WalkerManifold(ScalarField f, int epsilon = 1, Domain domain = {});

  const ScalarField& f() const { return f_; }
  int epsilon() const { return epsilon_; }
  const Domain& domain() const { return domain_; }

  /// Jet of f at p. Throws PreconditionError outside the domain box.
  Jet3 f_jet(const Point3& p, int order = Jet3::kMaxOrder) const;
  void require_in_domain(const Point3& p) const;

 private:
  ScalarField f_;
  int epsilon_;
  Domain domain_;
};

struct MetricPair {
  Metric g;
  InverseMetric inverse;
};

MetricPair metric_at(const WalkerManifold& m, const Point3& p);
MetricPair walker_metric(double f, int epsilon = 1);
/// Metric components as jets, for the generic Levi-Civita route.
MetricJets walker_metric_jets(const Jet3& f, int epsilon = 1);

/// Closed-form connection of the epsilon = +1 Walker metric.
Christoffel christoffel_at(const WalkerManifold& m, const Point3& p);
Christoffel walker_christoffel(const Jet3& f);

/// Closed-form curvature, R(X,Y)Z = nabla_[X,Y]Z - nabla_X nabla_Y Z + nabla_Y nabla_X Z.
Curvature curvature_at(const WalkerManifold& m, const Point3& p);
Curvature walker_curvature(const Jet3& f);

/// rho(Y,Z) = trace(X -> R(Y,X)Z), Q with g(QX,Y) = rho(X,Y), scal = tr Q.
struct Ricci {
  Covariant2 rho;
  Endomorphism Q;
  double scal = 0.0;
};

Ricci ricci_at(const WalkerManifold& m, const Point3& p);
Ricci walker_ricci(const Jet3& f);

/// R(X,Y,Z,W) = g(R(X,Y)Z, W).
double curvature_form(const Curvature& r, const Metric& g, const Vec3& x, const Vec3& y, const Vec3& z,
                      const Vec3& w);

enum class SegreType { Type11_1_degenerate, Flat, Other };

std::string to_string(SegreType t);

/// Ricci-operator type at a point. In the degenerate {11;1} case the
/// eigenvalues are 0 and f_xx/2 (double) with eigenvectors
/// N = -(f_xy/f_xx) d_x + d_y, V1 = d_x, V2 = (f_xy/f_xx) d_y + d_z.
struct SegreVerdict {
  SegreType type = SegreType::Other;
  double lambda1 = 0.0;
  double lambda23 = 0.0;
  std::optional<Vec3> N;
  std::optional<Vec3> V1;
  std::optional<Vec3> V2;
  /// max |Q N|, |Q V_i - lambda23 V_i| in the degenerate case.
  double eigen_residual = 0.0;
  bool eigen_verified = false;
};

/// Flatness is a domain-wide verdict (f_xx, f_xy, f_yy identically zero);
/// the remaining cases are decided at p.
SegreVerdict segre_type(const WalkerManifold& m, const Point3& p, const SamplingConfig& cfg = {});

/// Zero tests of f_xx, f_xy, f_yy: all curvature components vanish.
struct FlatnessVerdict {
  bool flat = true;
  ZeroVerdict f_xx;
  ZeroVerdict f_xy;
  ZeroVerdict f_yy;
};

FlatnessVerdict is_flat(const WalkerManifold& m, const SamplingConfig& cfg = {});

/// d_x parallel, i.e. f_x identically zero.
ZeroVerdict is_strict_walker(const WalkerManifold& m, const SamplingConfig& cfg = {});

}  // namespace walkerpc
