#include <gtest/gtest.h>

#include "support.hpp"
#include "walkerpc/classifier.hpp"
#include "walkerpc/curvature_analysis.hpp"
#include "walkerpc/f_tensor.hpp"

namespace walkerpc {
namespace {

using testing::Generator;

constexpr int kStructures = 200;

SamplingConfig small_config(std::uint64_t seed) {
  SamplingConfig cfg;
  cfg.samples = 12;
  cfg.seed = seed;
  return cfg;
}

TEST(Properties, RandomStructuresAreValidAndRoutesAgree) {
  Generator gen(401);
  for (int n = 0; n < kStructures; ++n) {
    const ApctStructure s = gen.structure();
    const SamplingConfig cfg = small_config(static_cast<std::uint64_t>(n));
    ASSERT_TRUE(validate_axioms(s, cfg).all_pass()) << s.manifold().f().to_string();
    const SampledStructure ss = sample_structure(s, cfg);
    for (const RouteDiscrepancy& r : route_discrepancies(s, ss.points)) {
      EXPECT_LE(r.max_discrepancy, 1e-9) << r.name << " on f = " << s.manifold().f().to_string();
    }
    const ClassVerdict v = named_classes(s, ss);
    EXPECT_TRUE(v.basic.decomposition_ok);
    EXPECT_LE(v.basic.decomposition_residual, 1e-9);
    EXPECT_TRUE(v.laws.all_hold());
    EXPECT_TRUE(v.routes_agree) << s.manifold().f().to_string();
  }
}

TEST(Properties, NormalAndParacontactNeverTogether) {
  Generator gen(403);
  int normal = 0;
  for (int n = 0; n < kStructures; ++n) {
    const ApctStructure s = gen.structure();
    const ClassVerdict v = named_classes(s, small_config(static_cast<std::uint64_t>(n)));
    EXPECT_FALSE(v.is(NamedClass::Normal) && v.is(NamedClass::ParacontactMetric));
    normal += v.is(NamedClass::Normal) ? 1 : 0;
  }
  for (const Fixture& f : corpus()) {
    const ClassVerdict v = named_classes(testing::fixture_structure(f.name));
    EXPECT_FALSE(v.is(NamedClass::Normal) && v.is(NamedClass::ParacontactMetric)) << f.name;
  }
  EXPECT_GT(normal, 0);
}

TEST(Properties, ParacontactStructuresLieInG5barPlusG10) {
  Generator gen(405);
  for (int n = 0; n < 40; ++n) {
    const ScalarField psi = ScalarField(Rational(gen.integer(-2, 2), 2)) * pow(ScalarField::z(), gen.integer(1, 2));
    const ScalarField m = ScalarField(Rational(gen.integer(-3, 3), 2)) * pow(ScalarField::z(), gen.integer(0, 2));
    const ApctStructure s = exponential_paracontact_family(psi, m, {}, small_config(7));
    const ClassVerdict v = named_classes(s, small_config(static_cast<std::uint64_t>(n)));
    ASSERT_TRUE(v.is(NamedClass::ParacontactMetric)) << psi.to_string() << " / " << m.to_string();
    EXPECT_TRUE(v.basic.has(BasicClass::G5bar));
    for (BasicClass c : v.basic.classes) EXPECT_TRUE(c == BasicClass::G5bar || c == BasicClass::G10);
    EXPECT_TRUE(v.routes_agree);
  }
}

TEST(Properties, CurvatureEquivalencesAgree) {
  Generator gen(407);
  int checked = 0;
  for (int n = 0; n < 60; ++n) {
    const ApctStructure s = gen.structure();
    const CurvatureEquivalences eq = curvature_equivalences(s, small_config(static_cast<std::uint64_t>(n)));
    if (!eq.asserted()) continue;
    ++checked;
    EXPECT_TRUE(eq.agree()) << s.manifold().f().to_string();
  }
  EXPECT_GT(checked, 40);
}

TEST(Properties, ParacosymplecticImpliesFlatOrEtaEinstein) {
  Generator gen(409);
  int asserted = 0;
  for (int n = 0; n < kStructures; ++n) {
    const ApctStructure s = gen.structure();
    const SamplingConfig cfg = small_config(static_cast<std::uint64_t>(n));
    const SampledStructure ss = sample_structure(s, cfg);
    if (!named_classes(s, ss).is(NamedClass::Paracosymplectic)) continue;
    const CurvatureEquivalences eq = curvature_equivalences(s, ss, cfg);
    if (!eq.asserted()) continue;
    ++asserted;
    EXPECT_TRUE(eq.flat_or_eta_einstein == FlatOrEtaEinstein::Flat ||
                eq.flat_or_eta_einstein == FlatOrEtaEinstein::EtaEinstein)
        << s.manifold().f().to_string();
  }
  EXPECT_GT(asserted, 0);
  for (const Fixture& f : corpus()) {
    const ApctStructure s = testing::fixture_structure(f.name);
    if (!named_classes(s).is(NamedClass::Paracosymplectic)) continue;
    const FlatOrEtaEinstein v = curvature_equivalences(s).flat_or_eta_einstein;
    EXPECT_TRUE(v == FlatOrEtaEinstein::Flat || v == FlatOrEtaEinstein::EtaEinstein) << f.name;
  }
}

TEST(Properties, HorizontalThetaIsSignedThetaStar) {
  Generator gen(411);
  for (int n = 0; n < 60; ++n) {
    const int sign = gen.coin() ? 1 : -1;
    const ApctStructure s = ApctStructure::build(WalkerManifold(gen.polynomial(3, 3)),
                                                 {gen.polynomial(2, 2), ScalarField(sign), ScalarField(0)});
    const ThetaForms t = theta_forms(s, gen.point());
    EXPECT_LE(testing::relative(t.theta, sign * t.theta_star), 1e-12);
  }
}

}  // namespace
}  // namespace walkerpc
