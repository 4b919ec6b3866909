#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "walkerpc/f_tensor.hpp"

namespace walkerpc {
namespace {

using testing::Generator;
using testing::fixture_structure;

/// F(d_i, d_j, d_k) = g((nabla_i phi) d_j, d_k) from differences of phi and
/// of the metric.
Covariant3 f_by_differences(const ApctStructure& s, const Point3& p) {
  const double h = 1e-5;
  const auto gamma = testing::christoffel_by_differences(s.manifold().f(), p);
  const auto g = testing::metric_matrix(s.manifold().f(), p);
  double phi[3][3];
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) phi[a][b] = s.phi()[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].eval(p);
  }
  Covariant3 out;
  for (int i = 0; i < 3; ++i) {
    double nabla[3][3];
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        const ScalarField& e = s.phi()[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        double v = (e.eval(testing::shifted(p, i, h)) - e.eval(testing::shifted(p, i, -h))) / (2 * h);
        for (int l = 0; l < 3; ++l) v += gamma[a][i][l] * phi[l][b] - phi[a][l] * gamma[l][i][b];
        nabla[a][b] = v;
      }
    }
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        double v = 0.0;
        for (int a = 0; a < 3; ++a) v += nabla[a][j] * g[a][k];
        out(i, j, k) = v;
      }
    }
  }
  return out;
}

TEST(FTensor, ClosedFormMatchesDifferenceOracle) {
  Generator gen(301);
  for (int n = 0; n < 40; ++n) {
    const ApctStructure s = gen.structure();
    const Point3 p = gen.point(-0.8, 0.8);
    const Covariant3 closed = f_closed_form(s.jets_at(p, 2));
    const Covariant3 oracle = f_by_differences(s, p);
    EXPECT_LE((closed - oracle).max_abs(), 1e-6 * (1 + oracle.max_abs())) << s.manifold().f().to_string();
  }
}

TEST(FTensor, SymmetriesOfTheStructureTensor) {
  Generator gen(303);
  for (int n = 0; n < 40; ++n) {
    const ApctStructure s = gen.structure();
    const StructureJets j = s.jets_at(gen.point(), 2);
    const Covariant3 F = f_closed_form(j);
    const double scale = 1 + F.max_abs() * (1 + j.scale);
    EXPECT_LE(antisymmetry_defect(F), 1e-10 * scale);
    EXPECT_LE(f_space_defect(F, j), 1e-10 * scale);
  }
}

TEST(FTensor, NormalQuotientExplicitTensor) {
  const ApctStructure s = fixture_structure("normal-quotient");
  Generator gen(305);
  for (int n = 0; n < 100; ++n) {
    const Point3 p{gen.real(-1, 1), gen.real(0.5, 2), gen.real(-1, 1)};
    const FTensorValue v = f_tensor_at(s, p);
    EXPECT_LE(testing::relative(v.theta, -1 / p.y), 1e-9);
    EXPECT_LE(testing::relative(v.theta_star, -1 / p.y), 1e-9);
    Covariant3 expected;
    expected(0, 1, 2) = 1 / p.y;
    expected(0, 2, 1) = -1 / p.y;
    expected(1, 2, 1) = p.x / (p.y * p.y);
    expected(1, 1, 2) = -p.x / (p.y * p.y);
    EXPECT_LE((v.F - expected).max_abs(), 1e-9 * (1 + expected.max_abs()));
  }
}

TEST(FTensor, AlmostParacosymplecticExplicitTensor) {
  const ApctStructure s = fixture_structure("almost-paracosymplectic");
  const Point3 p{0.3, -0.2, 0.6};
  const FTensorValue v = f_tensor_at(s, p);
  const double c = std::exp(p.z / 2);
  Covariant3 expected;
  expected(2, 2, 1) = -c;
  expected(2, 1, 2) = c;
  EXPECT_LE((v.F - expected).max_abs(), 1e-12);
  EXPECT_NEAR(v.theta, 0.0, 1e-12);
  EXPECT_NEAR(v.theta_star, 0.0, 1e-12);
}

TEST(FTensor, AlmostAlphaExplicitTensor) {
  const ApctStructure s = fixture_structure("almost-alpha-paracosymplectic");
  Generator gen(307);
  for (int n = 0; n < 50; ++n) {
    const Point3 p{gen.real(0.5, 2), gen.real(-1, 1), gen.real(0.5, 2)};
    const FTensorValue v = f_tensor_at(s, p);
    const double ts = -1 / (2 * p.z * std::sqrt(p.x / p.z));
    EXPECT_LE(testing::relative(v.theta_star, ts), 1e-12);
    EXPECT_NEAR(v.theta, 0.0, 1e-12);
    Covariant3 expected;
    expected(0, 0, 1) = ts * p.z / p.x;
    expected(0, 1, 0) = -ts * p.z / p.x;
    expected(0, 2, 1) = ts;
    expected(0, 1, 2) = -ts;
    EXPECT_LE((v.F - expected).max_abs(), 1e-12 * (1 + expected.max_abs()));
  }
}

TEST(FTensor, G12ExplicitTensorAndProjection) {
  const ApctStructure s = fixture_structure("g12-linear");
  Generator gen(309);
  for (int n = 0; n < 50; ++n) {
    const Point3 p = gen.point();
    const FTensorValue v = f_tensor_at(s, p);
    const double xi1 = p.y;
    Covariant3 expected;
    expected(1, 1, 2) = 1.0;
    expected(1, 2, 1) = -1.0;
    expected(2, 1, 2) = xi1;
    expected(2, 2, 1) = -xi1;
    EXPECT_LE((v.F - expected).max_abs(), 1e-12);
    const ProjectionBundle parts = project_components(s, p);
    EXPECT_LE((v.F - parts.F12).max_abs(), 1e-9);
    EXPECT_LE(parts.F5.max_abs() + parts.F6.max_abs() + parts.F10.max_abs(), 1e-9);
  }
}

TEST(FTensor, ParacosymplecticFixtureHasZeroTensor) {
  const ApctStructure s = fixture_structure("paracosymplectic-linear");
  Generator gen(311);
  for (int n = 0; n < 20; ++n) EXPECT_LE(f_tensor_at(s, gen.point()).F.max_abs(), 1e-12);
}

TEST(FTensor, ThetaRoutesAgree) {
  Generator gen(313);
  for (int n = 0; n < 40; ++n) {
    const ApctStructure s = gen.structure();
    const StructureJets j = s.jets_at(gen.point(), 2);
    const ThetaForms contraction = theta_contraction(f_closed_form(j), j);
    const ThetaJets closed = theta_closed_form(j);
    EXPECT_LE(testing::relative(contraction.theta, closed.theta.value()), 1e-9);
    EXPECT_LE(testing::relative(contraction.theta_star, closed.theta_star.value()), 1e-9);
  }
}

TEST(FTensor, DecompositionReassemblesF) {
  Generator gen(315);
  for (int n = 0; n < 40; ++n) {
    const ApctStructure s = gen.structure();
    const Point3 p = gen.point();
    const FTensorValue v = f_tensor_at(s, p);
    const ProjectionBundle parts = project_components(s, p);
    const Covariant3 sum = parts.F5 + parts.F6 + parts.F10 + parts.F12;
    EXPECT_LE((v.F - sum).max_abs(), 1e-9 * (1 + v.F.max_abs()));
    EXPECT_LE(parts.g10_violation, 1e-9 * (1 + v.F.max_abs()));
  }
}

TEST(FTensor, RouteDiscrepanciesAreTiny) {
  Generator gen(317);
  for (int n = 0; n < 20; ++n) {
    const ApctStructure s = gen.structure();
    SamplingConfig cfg;
    cfg.samples = 16;
    const auto rows = route_discrepancies(s, s.sample(cfg));
    EXPECT_EQ(rows.size(), 8u);
    for (const RouteDiscrepancy& r : rows) EXPECT_LE(r.max_discrepancy, 1e-9) << r.name;
  }
}

TEST(FTensor, NormalityDefectVanishesOnNormalFixture) {
  const ApctStructure s = fixture_structure("normal-quotient");
  Generator gen(319);
  for (int n = 0; n < 20; ++n) {
    const Point3 p{gen.real(-1, 1), gen.real(0.5, 2), gen.real(-1, 1)};
    const StructureJets j = s.jets_at(p, 2);
    const Covariant2 deta = d_eta(j, f_closed_form(j)).coordinate;
    EXPECT_LE(max_abs(normality_defect(j, deta, gen.vector(), gen.vector())), 1e-10 * (1 + j.scale));
  }
}

}  // namespace
}  // namespace walkerpc
