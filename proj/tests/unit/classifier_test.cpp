#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "support.hpp"
#include "walkerpc/classifier.hpp"
#include "walkerpc/error.hpp"

namespace walkerpc {
namespace {

using testing::fixture_structure;
using testing::make_structure;

std::set<NamedClass> holding(const ClassVerdict& v) {
  std::set<NamedClass> out;
  for (const auto& [c, verdict] : v.named) {
    if (verdict.value) out.insert(c);
  }
  return out;
}

void expect_consistent(const ClassVerdict& v) {
  EXPECT_TRUE(v.routes_agree);
  for (const CrossCheck& c : v.checks) EXPECT_TRUE(c.agree) << c.name << ": " << c.detail;
  EXPECT_TRUE(v.basic.decomposition_ok);
  EXPECT_TRUE(v.laws.all_hold());
}

TEST(Classifier, ParacosymplecticFixture) {
  const ClassVerdict v = named_classes(fixture_structure("paracosymplectic-linear"));
  expect_consistent(v);
  EXPECT_EQ(v.basic.label(), "G0");
  EXPECT_EQ(holding(v), (std::set<NamedClass>{NamedClass::Normal, NamedClass::Paracosymplectic}));
}

TEST(Classifier, NormalFixture) {
  const ClassVerdict v = named_classes(fixture_structure("normal-quotient"));
  expect_consistent(v);
  EXPECT_EQ(v.basic.classes, (std::set<BasicClass>{BasicClass::G5, BasicClass::G6}));
  EXPECT_EQ(holding(v), std::set<NamedClass>{NamedClass::Normal});
  EXPECT_FALSE(v.basic.g5.zero);
  EXPECT_FALSE(v.basic.g6.zero);
  EXPECT_EQ(v.setting.setting, ReebSetting::Horizontal);
  EXPECT_EQ(v.setting.sign, 1);
}

TEST(Classifier, AlmostParacosymplecticFixture) {
  const ClassVerdict v = named_classes(fixture_structure("almost-paracosymplectic"));
  expect_consistent(v);
  EXPECT_EQ(v.basic.label(), "G10");
  EXPECT_EQ(holding(v), std::set<NamedClass>{NamedClass::AlmostParacosymplectic});
  ASSERT_TRUE(v.named.at(NamedClass::Paracosymplectic).witness.has_value());
}

TEST(Classifier, AlmostAlphaFixture) {
  const ApctStructure s = fixture_structure("almost-alpha-paracosymplectic");
  const SampledStructure ss = sample_structure(s);
  const ClassVerdict v = named_classes(s, ss);
  expect_consistent(v);
  EXPECT_EQ(v.basic.classes, (std::set<BasicClass>{BasicClass::G6, BasicClass::G10}));
  EXPECT_FALSE(v.basic.g6.zero);
  EXPECT_EQ(holding(v), std::set<NamedClass>{NamedClass::AlmostAlphaParacosymplectic});
  EXPECT_EQ(v.setting.setting, ReebSetting::Vertical);
  EXPECT_FALSE(v.alpha.constant());
  for (std::size_t i = 0; i < ss.points.size(); ++i) {
    const Point3& p = ss.points[i];
    const double alpha = 1 / (4 * p.z * std::sqrt(p.x / p.z));
    EXPECT_GE(alpha, v.alpha.min - 1e-12);
    EXPECT_LE(alpha, v.alpha.max + 1e-12);
  }
}

TEST(Classifier, G12Fixture) {
  const ClassVerdict v = named_classes(fixture_structure("g12-linear"));
  expect_consistent(v);
  EXPECT_EQ(v.basic.label(), "G12");
  EXPECT_TRUE(holding(v).empty());
}

TEST(Classifier, ExponentialFamilyIsParacontact) {
  for (const auto& [psi, m] : {std::pair{"z", "0"}, std::pair{"0", "1"}, std::pair{"z/2", "z^2"}}) {
    const ApctStructure s = exponential_paracontact_family(parse_expr(psi), parse_expr(m));
    const ParacontactVerdict pc = is_paracontact_metric(s);
    EXPECT_TRUE(pc.value) << psi << ", " << m;
    EXPECT_TRUE(pc.pde_route);
    EXPECT_TRUE(pc.form_route);
    const ClassVerdict v = named_classes(s);
    expect_consistent(v);
    EXPECT_TRUE(v.is(NamedClass::ParacontactMetric));
    EXPECT_TRUE(v.basic.has(BasicClass::G5bar));
    EXPECT_TRUE(v.basic.theta_minus_two.zero);
    EXPECT_FALSE(v.is(NamedClass::Normal));
  }
}

TEST(Classifier, PerturbedFamilyIsNotParacontact) {
  const ScalarField f = parse_expr("2*x + x^2");
  const ScalarField xi3 = parse_expr("exp(-2*y + z)");
  const ScalarField xi1 = (ScalarField(1) - f * pow(xi3, 2)) / (ScalarField(2) * xi3);
  const ApctStructure s = ApctStructure::build(WalkerManifold(f), {xi1, ScalarField(0), xi3});
  const ParacontactVerdict pc = is_paracontact_metric(s);
  EXPECT_FALSE(pc.value);
  EXPECT_FALSE(pc.pde_route);
  EXPECT_FALSE(pc.form_route);
  ASSERT_TRUE(pc.witness.has_value());
  EXPECT_TRUE(s.domain().admits(*pc.witness));
}

TEST(Classifier, FamilyRejectsPlanarDependence) {
  EXPECT_THROW(exponential_paracontact_family(parse_expr("x*z"), parse_expr("0")), PreconditionError);
  EXPECT_THROW(exponential_paracontact_family(parse_expr("z"), parse_expr("y")), PreconditionError);
}

TEST(Classifier, HorizontalSettingCases) {
  EXPECT_EQ(named_classes(make_structure("x^2", "0", "1", "0")).basic.label(), "G0");
  EXPECT_EQ(named_classes(make_structure("x^2", "0", "-1", "0")).basic.label(), "G0");
  EXPECT_EQ(named_classes(make_structure("(x + y)^2", "-1", "1", "0")).basic.label(), "G0");
  const ClassVerdict yz = named_classes(make_structure("y*z", "0", "1", "0"));
  expect_consistent(yz);
  EXPECT_EQ(yz.basic.label(), "G10");
  const ClassVerdict negative = named_classes(make_structure("-2*x", "y", "-1", "0"));
  expect_consistent(negative);
  EXPECT_EQ(negative.basic.label(), "G12");
  EXPECT_EQ(negative.setting.sign, -1);
}

TEST(Classifier, VerticalSettingCases) {
  const ClassVerdict g12 = named_classes(make_structure("x + 2", "0", "0", "1/sqrt(x + 2)"));
  expect_consistent(g12);
  EXPECT_EQ(g12.setting.setting, ReebSetting::Vertical);
  EXPECT_EQ(g12.basic.label(), "G12");
}

TEST(Classifier, VerticalReebFieldWithConstantFunctionIsParacosymplectic) {
  const ClassVerdict v = named_classes(make_structure("3", "0", "0", "1/sqrt(3)"));
  expect_consistent(v);
  EXPECT_EQ(v.setting.setting, ReebSetting::Vertical);
  EXPECT_EQ(v.basic.label(), "G0");
  EXPECT_TRUE(v.is(NamedClass::Paracosymplectic));
}

TEST(Classifier, GenericStructureHasAllFourComponents) {
  const ClassVerdict v = named_classes(make_structure("x*y + z^2", "(1 - y^2 - (x*y + z^2)*4)/4", "y", "2"));
  expect_consistent(v);
  EXPECT_EQ(v.basic.classes,
            (std::set<BasicClass>{BasicClass::G5, BasicClass::G6, BasicClass::G10, BasicClass::G12}));
  EXPECT_TRUE(holding(v).empty());
}

TEST(Classifier, NormalityRoutesAgree) {
  for (const char* name : {"normal-quotient", "almost-paracosymplectic", "g12-linear", "eta-einstein-x2"}) {
    const NormalVerdict n = is_normal(fixture_structure(name));
    EXPECT_EQ(n.nijenhuis_route, n.class_route) << name;
    if (n.coordinate_route) EXPECT_EQ(*n.coordinate_route, n.class_route) << name;
    if (!n.value) EXPECT_TRUE(n.witness.has_value()) << name;
  }
}

TEST(Classifier, SymbolicZeroTest) {
  const std::vector<Point3> pts{{0.1, 0.2, 0.3}, {-0.4, 0.5, 0.6}};
  EXPECT_TRUE(symbolic_zero(parse_expr("x*y - y*x"), pts, 1e-9).zero);
  const ZeroVerdict v = symbolic_zero(parse_expr("x - 0.1"), pts, 1e-9);
  EXPECT_FALSE(v.zero);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(*v.witness, pts[1]);
}

TEST(Classifier, NamesAreStable) {
  EXPECT_EQ(to_string(BasicClass::G5bar), "G5bar");
  EXPECT_EQ(to_string(NamedClass::AlmostAlphaParaKenmotsu), "almost_alpha_para_kenmotsu");
  EXPECT_EQ(all_named_classes().size(), 11u);
}

}  // namespace
}  // namespace walkerpc
