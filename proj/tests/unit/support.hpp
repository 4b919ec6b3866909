#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "walkerpc/apct_structure.hpp"
#include "walkerpc/corpus.hpp"
#include "walkerpc/manifest.hpp"
#include "walkerpc/scalar_field.hpp"
#include "walkerpc/walker_metric.hpp"

namespace walkerpc::testing {

/// Structure of a shipped fixture.
inline ApctStructure fixture_structure(const std::string& name) {
  const Manifest m = parse_manifest(find_fixture(name).manifest);
  return ApctStructure::build(WalkerManifold(m.f, m.epsilon, m.domain), m.xi, m.sampling);
}

inline ApctStructure make_structure(const std::string& f, const std::string& xi1, const std::string& xi2,
                                    const std::string& xi3, Domain domain = {}) {
  return ApctStructure::build(WalkerManifold(parse_expr(f), 1, std::move(domain)),
                              {parse_expr(xi1), parse_expr(xi2), parse_expr(xi3)});
}

/// Small deterministic generator for symbolic test data.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Point3 point(double lo = -1.0, double hi = 1.0) { return {real(lo, hi), real(lo, hi), real(lo, hi)}; }
  Vec3 vector() { return {real(-1, 1), real(-1, 1), real(-1, 1)}; }

  /// Monomial x^a y^b z^c with a + b + c <= degree.
  ScalarField monomial(int degree) {
    ScalarField m(1);
    int left = degree;
    for (Axis a : kAxes) {
      const int e = integer(0, left);
      left -= e;
      if (e > 0) m = m * pow(ScalarField::variable(a), e);
    }
    return m;
  }

  /// Sum of `terms` monomials with coefficients p/q, |p| <= 3, q in 1..3.
  /// `l1` receives the sum of the absolute coefficients.
  ScalarField polynomial(int terms, int degree, double* l1 = nullptr) {
    ScalarField p(0);
    double sum = 0.0;
    for (int i = 0; i < terms; ++i) {
      const Rational c(integer(-3, 3), integer(1, 3));
      sum += std::abs(c.to_double());
      p = p + ScalarField(c) * monomial(degree);
    }
    if (l1) *l1 = sum;
    return p;
  }

  /// g-unit Reeb field on [-1, 1]^3: either xi3 bounded away from zero with
  /// xi1 solved from the unit constraint, or xi3 = 0, xi2 = +-1 and free xi1.
  ApctStructure structure() {
    const ScalarField f = polynomial(integer(1, 4), 3);
    if (coin()) {
      const ScalarField xi1 = polynomial(integer(1, 3), 2);
      const ScalarField xi2(coin() ? 1 : -1);
      return ApctStructure::build(WalkerManifold(f), {xi1, xi2, ScalarField(0)});
    }
    double l1 = 0.0;
    const ScalarField wiggle = polynomial(integer(0, 2), 2, &l1);
    const ScalarField xi3 = ScalarField(Rational(static_cast<std::int64_t>(std::ceil(l1 + 1.0)) * (coin() ? 1 : -1))) + wiggle;
    const ScalarField xi2 = polynomial(integer(1, 2), 2);
    const ScalarField xi1 = (ScalarField(1) - pow(xi2, 2) - f * pow(xi3, 2)) / (ScalarField(2) * xi3);
    return ApctStructure::build(WalkerManifold(f), {xi1, xi2, xi3});
  }

 private:
  std::mt19937_64 rng_;
};

/// Walker metric at p from f alone.
inline std::array<std::array<double, 3>, 3> metric_matrix(const ScalarField& f, const Point3& p) {
  return {{{0.0, 0.0, 1.0}, {0.0, 1.0, 0.0}, {1.0, 0.0, f.eval(p)}}};
}

inline std::array<std::array<double, 3>, 3> inverse3(const std::array<std::array<double, 3>, 3>& a) {
  const double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                     a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                     a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  std::array<std::array<double, 3>, 3> inv{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) / det;
    }
  }
  return inv;
}

inline Point3 shifted(const Point3& p, int axis, double h) {
  Point3 q = p;
  (axis == 0 ? q.x : (axis == 1 ? q.y : q.z)) += h;
  return q;
}

/// Gamma^k_ij from central differences of the metric components.
inline std::array<std::array<std::array<double, 3>, 3>, 3> christoffel_by_differences(const ScalarField& f,
                                                                                      const Point3& p,
                                                                                      double h = 1e-5) {
  std::array<std::array<std::array<double, 3>, 3>, 3> dg{};
  for (int l = 0; l < 3; ++l) {
    const auto plus = metric_matrix(f, shifted(p, l, h));
    const auto minus = metric_matrix(f, shifted(p, l, -h));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) dg[l][i][j] = (plus[i][j] - minus[i][j]) / (2 * h);
    }
  }
  const auto ginv = inverse3(metric_matrix(f, p));
  std::array<std::array<std::array<double, 3>, 3>, 3> gamma{};
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int l = 0; l < 3; ++l) s += ginv[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
        gamma[k][i][j] = 0.5 * s;
      }
    }
  }
  return gamma;
}

inline double relative(double a, double b) { return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b))); }

}  // namespace walkerpc::testing
