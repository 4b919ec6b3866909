#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "walkerpc/curvature_analysis.hpp"
#include "walkerpc/error.hpp"

namespace walkerpc {
namespace {

using testing::fixture_structure;
using testing::make_structure;

TEST(EtaEinstein, SquareFunctionWithVerticalPlaneReeb) {
  const EtaEinsteinVerdict v = eta_einstein_check(fixture_structure("eta-einstein-x2"));
  EXPECT_TRUE(v.is_eta_einstein);
  EXPECT_TRUE(v.residual_route);
  EXPECT_TRUE(v.condition_route);
  EXPECT_TRUE(v.routes_agree);
  EXPECT_DOUBLE_EQ(v.a, 1.0);
  EXPECT_DOUBLE_EQ(v.b, -1.0);
  EXPECT_TRUE(v.q_xi.zero);
  EXPECT_EQ(v.segre.type, SegreType::Type11_1_degenerate);
  ASSERT_TRUE(v.xi_matches_N.has_value());
  EXPECT_EQ(*v.xi_matches_N, 1);
}

TEST(EtaEinstein, OppositeReebFieldMatchesMinusN) {
  const EtaEinsteinVerdict v = eta_einstein_check(make_structure("x^2", "0", "-1", "0"));
  EXPECT_TRUE(v.is_eta_einstein);
  ASSERT_TRUE(v.xi_matches_N.has_value());
  EXPECT_EQ(*v.xi_matches_N, -1);
}

TEST(EtaEinstein, ShearedSquare) {
  const EtaEinsteinVerdict v = eta_einstein_check(make_structure("(x + y)^2", "-1", "1", "0"));
  EXPECT_TRUE(v.is_eta_einstein);
  EXPECT_TRUE(v.routes_agree);
  EXPECT_DOUBLE_EQ(v.a, 1.0);
  const EtaEinsteinVerdict off = eta_einstein_check(make_structure("(x + y)^2", "0", "1", "0"));
  EXPECT_FALSE(off.is_eta_einstein);
  EXPECT_FALSE(off.residual_route);
  EXPECT_FALSE(off.condition_route);
  EXPECT_TRUE(off.residual.witness.has_value());
}

TEST(EtaEinstein, VanishingSecondDerivativeIsDegenerate) {
  const ApctStructure s = make_structure("x^3", "0", "1", "0");
  try {
    eta_einstein_check(s);
    FAIL() << "expected DegenerateInputError";
  } catch (const DegenerateInputError& e) {
    EXPECT_TRUE(s.domain().admits(e.witness()));
  }
}

TEST(EtaEinstein, FlatAndNormalFixturesAreNot) {
  EXPECT_FALSE(eta_einstein_check(fixture_structure("flat-yz")).is_eta_einstein);
  const EtaEinsteinVerdict v = eta_einstein_check(fixture_structure("normal-quotient"));
  EXPECT_FALSE(v.is_eta_einstein);
  EXPECT_TRUE(v.routes_agree);
}

TEST(Sectional, SquareFunctionValues) {
  const ApctStructure s = fixture_structure("eta-einstein-x2");
  const SectionalReport r = sectional_curvatures(s, {1.0, 0.0, -1.0}, {0.2, 0.1, 0.3});
  EXPECT_NEAR(r.K_xi, 0.0, 1e-12);
  EXPECT_NEAR(r.K_phi, -1.0, 1e-12);
  EXPECT_NEAR(r.scal, 2.0, 1e-12);
  EXPECT_THROW(sectional_curvatures(s, {1.0, 0.0, 0.0}, {0.2, 0.1, 0.3}), DegenerateSectionError);
  EXPECT_THROW(sectional_curvatures(s, {0.0, 1.0, 0.0}, {0.2, 0.1, 0.3}), DegenerateSectionError);
}

TEST(Sectional, SurveyOnSquareFunction) {
  const SectionalSurvey survey = sectional_survey(sample_structure(fixture_structure("eta-einstein-x2")));
  EXPECT_GT(survey.evaluated, 1000);
  EXPECT_LE(survey.K_phi_direction_variance, 1e-9);
  EXPECT_NEAR(survey.K_phi_min, -1.0, 1e-9);
  EXPECT_NEAR(survey.K_phi_max, -1.0, 1e-9);
  EXPECT_NEAR(survey.K_xi_min, 0.0, 1e-9);
  EXPECT_NEAR(survey.K_xi_max, 0.0, 1e-9);
  EXPECT_TRUE(survey.scal_constant);
}

TEST(EtaEinsteinReport, ConsequencesForSquareFunction) {
  const EtaEinsteinReport r = eta_einstein_report(fixture_structure("eta-einstein-x2"));
  EXPECT_DOUBLE_EQ(r.C, 2.0);
  EXPECT_TRUE(r.f_xx_gradient.zero);
  EXPECT_TRUE(r.scal_constant);
  EXPECT_TRUE(r.K_xi_zero);
  EXPECT_TRUE(r.K_phi_matches);
  EXPECT_TRUE(r.discriminant.zero);
  EXPECT_TRUE(r.paracosymplectic);
  EXPECT_TRUE(r.classifier_agrees);
}

TEST(EtaEinsteinReport, ScaledAndShearedFunctions) {
  const EtaEinsteinReport scaled = eta_einstein_report(make_structure("3*x^2", "0", "1", "0"));
  EXPECT_DOUBLE_EQ(scaled.C, 6.0);
  EXPECT_TRUE(scaled.K_phi_matches);
  EXPECT_NEAR(scaled.sections.K_phi_min, -3.0, 1e-9);
  const EtaEinsteinReport sheared = eta_einstein_report(make_structure("(x + y)^2", "-1", "1", "0"));
  EXPECT_TRUE(sheared.K_phi_matches);
  EXPECT_TRUE(sheared.classifier_agrees);
}

TEST(EtaEinsteinReport, NonzeroDiscriminantMeansAlmostParacosymplectic) {
  const EtaEinsteinReport r = eta_einstein_report(make_structure("x^2 + y*z", "0", "1", "0"));
  EXPECT_FALSE(r.discriminant.zero);
  EXPECT_TRUE(r.discriminant.witness.has_value());
  EXPECT_FALSE(r.paracosymplectic);
  EXPECT_TRUE(r.classifier_agrees);
}

TEST(EtaEinsteinReport, RequiresEtaEinstein) {
  EXPECT_THROW(eta_einstein_report(fixture_structure("normal-quotient")), PreconditionError);
}

TEST(Equivalences, FlagsAgreeOnFixtures) {
  for (const Fixture& f : corpus()) {
    const CurvatureEquivalences eq = curvature_equivalences(fixture_structure(f.name));
    EXPECT_TRUE(eq.asserted()) << f.name;
    EXPECT_TRUE(eq.agree()) << f.name;
  }
}

TEST(Equivalences, AllTrueOnSquareAndFlat) {
  for (const char* name : {"eta-einstein-x2", "flat-yz"}) {
    const CurvatureEquivalences eq = curvature_equivalences(fixture_structure(name));
    for (bool flag : eq.flags()) EXPECT_TRUE(flag) << name;
  }
  EXPECT_EQ(curvature_equivalences(fixture_structure("flat-yz")).flat_or_eta_einstein, FlatOrEtaEinstein::Flat);
  EXPECT_EQ(curvature_equivalences(fixture_structure("eta-einstein-x2")).flat_or_eta_einstein,
            FlatOrEtaEinstein::EtaEinstein);
}

TEST(Equivalences, AllFalseOnNormalFixture) {
  const CurvatureEquivalences eq = curvature_equivalences(fixture_structure("normal-quotient"));
  for (bool flag : eq.flags()) EXPECT_FALSE(flag);
  EXPECT_TRUE(eq.r_xi.witness.has_value());
}

TEST(Equivalences, MixedCaseIsNamed) {
  EXPECT_NE(to_string(FlatOrEtaEinstein::Mixed).find("mixed"), std::string::npos);
}

}  // namespace
}  // namespace walkerpc
