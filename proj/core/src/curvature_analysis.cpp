#include "walkerpc/curvature_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "walkerpc/error.hpp"

namespace walkerpc {
namespace {

constexpr double kDegenerateSection = 1e-8;
constexpr double kSurveyConditioning = 1e-3;
constexpr int kDrawsPerPoint = 4;

struct FSecond {
  double xx, xy, yy;
};

FSecond second_derivatives(const Jet3& f) {
  return {f.d(Axis::X, Axis::X), f.d(Axis::X, Axis::Y), f.d(Axis::Y, Axis::Y)};
}

/// Largest |rho - (a g + b eta (x) eta)| with a = -b = f_xx/2.
double eta_einstein_residual(const StructureJets& j) {
  const Ricci r = walker_ricci(j.f);
  const double a = 0.5 * r.scal;
  double m = 0.0;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      m = std::max(m, std::abs(r.rho(x, y) - a * (j.g(x, y) - j.eta_value[x] * j.eta_value[y])));
  return m;
}

double curvature_scale(const SampledPoint& p, const Curvature& R) { return p.scale * (1.0 + R.max_abs()); }

/// sum |g_ij x^i y^j|, the size of g(x, y) before cancellation.
double abs_form(const Metric& g, const Vec3& x, const Vec3& y) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += std::abs(g(i, j) * x[i] * y[j]);
  return s;
}

/// With `cancellation_free`, the threshold is measured against abs_form
/// magnitudes, which also rejects planes that are only nearly degenerate.
std::optional<double> sectional(const Curvature& R, const Metric& g, const Vec3& x, const Vec3& y,
                                 double threshold = kDegenerateSection, bool cancellation_free = false) {
  const double gxx = eval(g, x, x), gyy = eval(g, y, y), gxy = eval(g, x, y);
  const double den = gxx * gyy - gxy * gxy;
  const double scale = cancellation_free
                           ? abs_form(g, x, x) * abs_form(g, y, y) + abs_form(g, x, y) * abs_form(g, x, y)
                           : std::abs(gxx * gyy) + gxy * gxy;
  if (scale == 0.0 || std::abs(den) < threshold * scale) return std::nullopt;
  return curvature_form(R, g, x, y, y, x) / den;
}

struct Sections {
  std::optional<double> K_xi;
  std::optional<double> K_phi;
};

Sections sections_at(const StructureJets& j, const Curvature& R, const Vec3& x,
                     double threshold = kDegenerateSection, bool cancellation_free = false) {
  const Vec3 xp = x - dot(j.eta_value, x) * j.xi_value;
  return {sectional(R, j.g, xp, j.xi_value, threshold, cancellation_free),
          sectional(R, j.g, xp, act(j.phi_value, xp), threshold, cancellation_free)};
}

}  // namespace

EtaEinsteinVerdict eta_einstein_check(const ApctStructure& s, const SampledStructure& ss, const SamplingConfig& cfg) {
  EtaEinsteinVerdict v;
  const WalkerManifold& m = s.manifold();
  if (m.epsilon() != 1) throw PreconditionError("eta-Einstein check needs epsilon = +1");

  v.residual = zero_over(ss, [](const SampledPoint& p) -> ScaledValue {
    return {eta_einstein_residual(p.jets), p.scale * (1.0 + std::abs(p.jets.f.value()))};
  });

  // f_xx must stay away from zero.
  bool positive = false, negative = false, all_zero = true;
  double smallest = std::numeric_limits<double>::infinity();
  std::optional<Point3> smallest_at;
  for (std::size_t i = 0; i < ss.data.size(); ++i) {
    const SampledPoint& p = ss.data[i];
    const double fxx = second_derivatives(p.jets.f).xx;
    const bool tiny = negligible(fxx, p.jets.scale, ss.tol);
    all_zero = all_zero && tiny;
    if (!tiny) (fxx > 0 ? positive : negative) = true;
    if (std::abs(fxx) < smallest) {
      smallest = std::abs(fxx);
      smallest_at = ss.points[i];
    }
    if (tiny && !v.f_xx_degenerate_at) v.f_xx_degenerate_at = ss.points[i];
  }
  if (positive && negative && !v.f_xx_degenerate_at) v.f_xx_degenerate_at = smallest_at;
  const bool fxx_bounded = !all_zero && !v.f_xx_degenerate_at;

  v.residual_route = v.residual.zero && fxx_bounded;

  const SettingInfo setting = detect_setting(s, ss);
  if (setting.setting == ReebSetting::Horizontal) {
    if (!all_zero && v.f_xx_degenerate_at) {
      throw DegenerateInputError("f_xx vanishes on the domain of a horizontal Reeb field", *v.f_xx_degenerate_at);
    }
    const ScalarField& f = m.f();
    const ScalarField fxx = f.diff(Axis::X).diff(Axis::X);
    const ScalarField fxy = f.diff(Axis::X).diff(Axis::Y);
    const ScalarField fyy = f.diff(Axis::Y).diff(Axis::Y);
    const ZeroVerdict reeb = symbolic_zero(s.xi().xi1 * fxx + ScalarField(setting.sign) * fxy, ss.points, ss.tol);
    const ZeroVerdict degenerate = symbolic_zero(fxy * fxy - fxx * fyy, ss.points, ss.tol);
    v.condition_route = fxx_bounded && reeb.zero && degenerate.zero;
  }
  v.routes_agree = v.residual_route == v.condition_route;
  v.is_eta_einstein = v.residual_route && v.condition_route;

  v.q_xi = zero_over(ss, [](const SampledPoint& p) -> ScaledValue {
    return {max_abs(act(walker_ricci(p.jets.f).Q, p.jets.xi_value)), p.scale};
  });

  if (!ss.points.empty()) {
    const SampledPoint& p0 = ss.data.front();
    v.a = 0.5 * second_derivatives(p0.jets.f).xx;
    v.b = -v.a;
    v.segre = segre_type(m, ss.points.front(), cfg);
  }
  if (v.is_eta_einstein) v.xi_matches_N = setting.sign;
  return v;
}

EtaEinsteinVerdict eta_einstein_check(const ApctStructure& s, const SamplingConfig& cfg) {
  return eta_einstein_check(s, sample_structure(s, cfg), cfg);
}

std::string to_string(FlatOrEtaEinstein v) {
  switch (v) {
    case FlatOrEtaEinstein::Flat:
      return "flat";
    case FlatOrEtaEinstein::EtaEinstein:
      return "eta-Einstein";
    case FlatOrEtaEinstein::Neither:
      return "neither";
    case FlatOrEtaEinstein::Mixed:
      return "mixed, equivalence not asserted";
  }
  return "?";
}

std::vector<bool> CurvatureEquivalences::flags() const {
  const bool second =
      flat_or_eta_einstein == FlatOrEtaEinstein::Flat || flat_or_eta_einstein == FlatOrEtaEinstein::EtaEinstein;
  return {q_commutes.zero, second, r_commutes.zero, rho_anti_invariant.zero, r_xi.zero};
}

bool CurvatureEquivalences::agree() const {
  if (!asserted()) return true;
  const auto f = flags();
  return std::all_of(f.begin(), f.end(), [&](bool b) { return b == f.front(); });
}

CurvatureEquivalences curvature_equivalences(const ApctStructure& s, const SampledStructure& ss,
                                             const SamplingConfig& cfg) {
  CurvatureEquivalences e;
  const WalkerManifold& m = s.manifold();
  if (m.epsilon() != 1) throw PreconditionError("curvature equivalences need epsilon = +1");

  std::vector<Curvature> R;
  std::vector<Ricci> ric;
  R.reserve(ss.data.size());
  ric.reserve(ss.data.size());
  for (const auto& p : ss.data) {
    R.push_back(walker_curvature(p.jets.f));
    ric.push_back(walker_ricci(p.jets.f));
  }
  auto index_of = [&ss](const SampledPoint& p) { return static_cast<std::size_t>(&p - ss.data.data()); };

  e.q_commutes = zero_over(ss, [&](const SampledPoint& p) -> ScaledValue {
    const Endomorphism& Q = ric[index_of(p)].Q;
    return {(compose(Q, p.jets.phi_value) - compose(p.jets.phi_value, Q)).max_abs(), p.scale};
  });

  // Random arguments per point, drawn once so the three tests see the same vectors.
  Rng rng(cfg.seed ^ 0x5851f42d4c957f2dULL);
  std::vector<std::array<Vec3, 3 * kDrawsPerPoint>> draws(ss.data.size());
  for (auto& d : draws)
    for (auto& v : d) v = rng.vector();

  e.r_commutes = zero_over(ss, [&](const SampledPoint& p) -> ScaledValue {
    const std::size_t i = index_of(p);
    const Endomorphism& phi = p.jets.phi_value;
    double worst = 0.0;
    for (int k = 0; k < kDrawsPerPoint; ++k) {
      const Vec3 &x = draws[i][3 * k], &y = draws[i][3 * k + 1], &z = draws[i][3 * k + 2];
      worst = std::max(worst, max_abs(act(R[i], x, y, act(phi, z)) - act(phi, act(R[i], x, y, z))));
    }
    return {worst, curvature_scale(p, R[i])};
  });
  e.rho_anti_invariant = zero_over(ss, [&](const SampledPoint& p) -> ScaledValue {
    const std::size_t i = index_of(p);
    const Endomorphism& phi = p.jets.phi_value;
    double worst = 0.0;
    for (int k = 0; k < kDrawsPerPoint; ++k) {
      const Vec3 &x = draws[i][3 * k], &y = draws[i][3 * k + 1];
      worst = std::max(worst, std::abs(eval(ric[i].rho, act(phi, x), act(phi, y)) + eval(ric[i].rho, x, y)));
    }
    return {worst, curvature_scale(p, R[i])};
  });
  e.r_xi = zero_over(ss, [&](const SampledPoint& p) -> ScaledValue {
    const std::size_t i = index_of(p);
    double worst = 0.0;
    for (int k = 0; k < kDrawsPerPoint; ++k) {
      worst = std::max(worst, max_abs(act(R[i], draws[i][3 * k], draws[i][3 * k + 1], p.jets.xi_value)));
    }
    return {worst, curvature_scale(p, R[i])};
  });

  const bool flat = is_flat(m, cfg).flat;
  bool eta = false;
  try {
    eta = eta_einstein_check(s, ss, cfg).is_eta_einstein;
  } catch (const DegenerateInputError&) {
    eta = false;
  }
  if (flat) {
    e.flat_or_eta_einstein = FlatOrEtaEinstein::Flat;
  } else if (eta) {
    e.flat_or_eta_einstein = FlatOrEtaEinstein::EtaEinstein;
  } else {
    // Each point flat or eta-Einstein on its own, with neither holding throughout.
    const ZeroVerdict pointwise = zero_over(ss, [&](const SampledPoint& p) -> ScaledValue {
      const std::size_t i = index_of(p);
      const bool flat_here = negligible(R[i].max_abs(), p.scale, ss.tol);
      const double fxx = second_derivatives(p.jets.f).xx;
      const bool eta_here = !negligible(fxx, p.jets.scale, ss.tol) &&
                            negligible(eta_einstein_residual(p.jets), p.scale, ss.tol);
      return {flat_here || eta_here ? 0.0 : 1.0, 0.0};
    });
    e.flat_or_eta_einstein = pointwise.zero ? FlatOrEtaEinstein::Mixed : FlatOrEtaEinstein::Neither;
  }
  return e;
}

CurvatureEquivalences curvature_equivalences(const ApctStructure& s, const SamplingConfig& cfg) {
  return curvature_equivalences(s, sample_structure(s, cfg), cfg);
}

SectionalReport sectional_curvatures(const ApctStructure& s, const Vec3& x, const Point3& p) {
  s.manifold().require_in_domain(p);
  if (s.manifold().epsilon() != 1) throw PreconditionError("sectional curvatures need epsilon = +1");
  const StructureJets j = s.jets_at(p, 2);
  const Curvature R = walker_curvature(j.f);
  const Sections k = sections_at(j, R, x);
  if (!k.K_xi) throw DegenerateSectionError("degenerate plane {X, xi}");
  if (!k.K_phi) throw DegenerateSectionError("degenerate plane {X, phi X}");
  SectionalReport r;
  r.K_xi = *k.K_xi;
  r.K_phi = *k.K_phi;
  r.scal = walker_ricci(j.f).scal;
  return r;
}

SectionalSurvey sectional_survey(const SampledStructure& ss, int directions, std::uint64_t seed) {
  SectionalSurvey sv;
  Rng rng(seed ^ 0x2545f4914f6cdd1dULL);
  bool first = true;
  for (const auto& p : ss.data) {
    const Curvature R = walker_curvature(p.jets.f);
    const double scal = walker_ricci(p.jets.f).scal;
    if (&p == &ss.data.front()) sv.scal_min = sv.scal_max = scal;
    sv.scal_min = std::min(sv.scal_min, scal);
    sv.scal_max = std::max(sv.scal_max, scal);
    std::vector<double> k_phi;
    for (int d = 0; d < directions; ++d) {
      const Sections k = sections_at(p.jets, R, rng.vector(), kSurveyConditioning, true);
      if (!k.K_xi || !k.K_phi) {
        ++sv.skipped;
        continue;
      }
      ++sv.evaluated;
      if (first) {
        sv.K_xi_min = sv.K_xi_max = *k.K_xi;
        sv.K_phi_min = sv.K_phi_max = *k.K_phi;
        first = false;
      }
      sv.K_xi_min = std::min(sv.K_xi_min, *k.K_xi);
      sv.K_xi_max = std::max(sv.K_xi_max, *k.K_xi);
      sv.K_phi_min = std::min(sv.K_phi_min, *k.K_phi);
      sv.K_phi_max = std::max(sv.K_phi_max, *k.K_phi);
      k_phi.push_back(*k.K_phi);
    }
    if (k_phi.size() > 1) {
      double mean = 0.0;
      for (double v : k_phi) mean += v;
      mean /= static_cast<double>(k_phi.size());
      double var = 0.0;
      for (double v : k_phi) var += (v - mean) * (v - mean);
      var /= static_cast<double>(k_phi.size());
      sv.K_phi_direction_variance = std::max(sv.K_phi_direction_variance, var / (1.0 + mean * mean));
    }
  }
  auto constant = [&ss](double lo, double hi) {
    return negligible(hi - lo, std::max(std::abs(lo), std::abs(hi)), ss.tol);
  };
  sv.K_xi_constant = constant(sv.K_xi_min, sv.K_xi_max);
  sv.K_phi_constant = constant(sv.K_phi_min, sv.K_phi_max);
  sv.scal_constant = constant(sv.scal_min, sv.scal_max);
  return sv;
}

EtaEinsteinReport eta_einstein_report(const ApctStructure& s, const SamplingConfig& cfg) {
  const SampledStructure ss = sample_structure(s, cfg);
  const EtaEinsteinVerdict ev = eta_einstein_check(s, ss, cfg);
  if (!ev.is_eta_einstein) throw PreconditionError("structure is not eta-Einstein");

  EtaEinsteinReport r;
  const ScalarField& f = s.manifold().f();
  const ScalarField fx = f.diff(Axis::X);
  const ScalarField fxx = fx.diff(Axis::X);
  for (Axis a : kAxes) {
    const ZeroVerdict g = symbolic_zero(fxx.diff(a), ss.points, ss.tol);
    if (!g.zero && r.f_xx_gradient.zero) r.f_xx_gradient = g;
  }
  r.scal_constant = r.f_xx_gradient.zero;
  r.C = ev.a * 2.0;
  r.a = ev.a;
  r.b = ev.b;
  r.sections = sectional_survey(ss, 50, cfg.seed);
  r.K_xi_zero = negligible(std::max(std::abs(r.sections.K_xi_min), std::abs(r.sections.K_xi_max)), 0.0, ss.tol);
  r.K_phi_matches = negligible(r.sections.K_phi_min + 0.5 * r.C, r.C, ss.tol) &&
                    negligible(r.sections.K_phi_max + 0.5 * r.C, r.C, ss.tol);

  const ScalarField fxy = fx.diff(Axis::Y);
  r.discriminant = symbolic_zero(ScalarField(2) * fxy.diff(Axis::Z) + fx * fxy - fxx * f.diff(Axis::Y), ss.points,
                                 ss.tol);
  r.paracosymplectic = r.discriminant.zero;
  const ClassVerdict cv = named_classes(s, ss);
  r.classifier_agrees = r.paracosymplectic ? cv.is(NamedClass::Paracosymplectic)
                                           : cv.is(NamedClass::AlmostParacosymplectic);
  return r;
}

}  // namespace walkerpc
