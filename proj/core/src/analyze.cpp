#include "walkerpc/analyze.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "walkerpc/apct_structure.hpp"
#include "walkerpc/classifier.hpp"
#include "walkerpc/corpus.hpp"
#include "walkerpc/curvature_analysis.hpp"
#include "walkerpc/error.hpp"
#include "walkerpc/f_tensor.hpp"
#include "walkerpc/walker_metric.hpp"

namespace walkerpc {

std::string to_string(ExitStatus s) {
  switch (s) {
    case ExitStatus::Clean:
      return "clean";
    case ExitStatus::Structural:
      return "structural rejection";
    case ExitStatus::Input:
      return "input error";
    case ExitStatus::Inconsistent:
      return "internal consistency failure";
  }
  return "unknown";
}

namespace {

Report manifest_json(const Manifest& m) {
  Report out = Report::object();
  out["name"] = m.name;
  out["epsilon"] = m.epsilon;
  out["f"] = m.f_text;
  out["xi"] = Report::array({m.xi_text[0], m.xi_text[1], m.xi_text[2]});
  Report constants = Report::object();
  for (const auto& [name, value] : m.constants) constants[name] = value.to_string();
  out["constants"] = constants;
  Report definitions = Report::object();
  for (const auto& [name, text] : m.definitions_text) definitions[name] = text;
  out["definitions"] = definitions;
  Report domain = Report::object();
  for (Axis a : kAxes) {
    const Interval& iv = m.domain.box[a];
    domain[std::string(1, axis_name(a))] = Report::array({number(iv.lo), number(iv.hi)});
  }
  out["domain"] = domain;
  out["require_positive"] = m.require_positive_text;
  out["require_nonzero"] = m.require_nonzero_text;
  out["samples"] = m.sampling.samples;
  out["seed"] = m.sampling.seed;
  out["tol"] = number(m.sampling.tol);
  return out;
}

/// Accumulates failures and the most severe status.
class Outcome {
 public:
  void fail(ExitStatus s, const std::string& check, const Point3& witness, std::optional<double> magnitude) {
    failures_.push_back(failure(check, witness, magnitude));
    raise(s, check);
  }
  void raise(ExitStatus s, const std::string& message) {
    if (s == ExitStatus::Clean || static_cast<int>(s) <= static_cast<int>(status_)) return;
    status_ = s;
    message_ = message;
  }
  ExitStatus status() const { return status_; }
  const std::string& message() const { return message_; }
  const Report& failures() const { return failures_; }

 private:
  Report failures_ = Report::array();
  ExitStatus status_ = ExitStatus::Clean;
  std::string message_;
};

double range_min(const std::vector<double>& v) { return v.empty() ? 0.0 : *std::min_element(v.begin(), v.end()); }
double range_max(const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); }

Report range_json(const std::vector<double>& v) {
  Report out = Report::object();
  out["min"] = number(range_min(v));
  out["max"] = number(range_max(v));
  return out;
}

void structure_section(const ApctStructure& s, const SamplingConfig& cfg, Report& report, Outcome& outcome) {
  const AxiomReport axioms = validate_axioms(s, cfg);
  Report section = Report::object();
  section["unit_constraint"] = true;
  section["axioms_hold"] = axioms.all_pass();
  Report list = Report::array();
  for (const AxiomCheck& c : axioms.checks) {
    Report entry = Report::object();
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    entry["max_residual"] = number(c.max_residual);
    entry["witness"] = to_json(c.witness);
    list.push_back(entry);
    if (!c.pass && c.witness) outcome.fail(ExitStatus::Inconsistent, "axiom " + c.name, *c.witness, c.max_residual);
  }
  section["axioms"] = list;
  report["structure_validity"] = section;
}

void class_sections(const SampledStructure& ss, const ClassVerdict& cv, Report& report, Outcome& outcome) {
  const BasicVerdict& b = cv.basic;
  Report basic = Report::object();
  Report classes = Report::array();
  for (BasicClass c : b.classes) classes.push_back(to_string(c));
  basic["classes"] = classes;
  basic["label"] = b.label();
  basic["theta_equals_two"] = b.theta_minus_two.zero;
  Report components = Report::object();
  components["G5"] = to_json(b.g5);
  components["G6"] = to_json(b.g6);
  components["G10"] = to_json(b.g10);
  components["G12"] = to_json(b.g12);
  basic["components"] = components;
  basic["decomposition_residual"] = number(b.decomposition_residual);
  basic["g10_identity_violation"] = number(b.g10_violation);
  basic["decomposition_ok"] = b.decomposition_ok;
  report["basic_classes"] = basic;

  Report named = Report::object();
  Report witnesses = Report::object();
  for (NamedClass c : all_named_classes()) {
    const NamedVerdict& v = cv.named.at(c);
    named[to_string(c)] = v.value;
    if (!v.value && v.witness) witnesses[to_string(c)] = to_json(*v.witness);
  }
  report["named_classes"] = named;

  Report details = Report::object();
  details["reeb_setting"] = to_string(cv.setting.setting);
  if (cv.setting.setting == ReebSetting::Horizontal) details["xi2_sign"] = cv.setting.sign;
  Report alpha = Report::object();
  alpha["min"] = number(cv.alpha.min);
  alpha["max"] = number(cv.alpha.max);
  alpha["constant_on_sampled_domain"] = cv.alpha.constant();
  alpha["gradient"] = to_json(cv.alpha.gradient);
  details["alpha"] = alpha;
  Report laws = Report::object();
  laws["theta_outside_g5"] = to_json(cv.laws.theta_outside_g5);
  laws["theta_star_outside_g6"] = to_json(cv.laws.theta_star_outside_g6);
  laws["d_eta"] = to_json(cv.laws.d_eta_law);
  laws["d_phi"] = to_json(cv.laws.d_phi_law);
  laws["all_hold"] = cv.laws.all_hold();
  details["component_laws"] = laws;
  details["witnesses"] = witnesses;
  report["class_details"] = details;

  std::vector<double> theta;
  std::vector<double> theta_star;
  for (const SampledPoint& p : ss.data) {
    theta.push_back(p.f.theta);
    theta_star.push_back(p.f.theta_star);
  }
  Report invariants = Report::object();
  invariants["theta"] = range_json(theta);
  invariants["theta_star"] = range_json(theta_star);
  invariants["at_first_point"] = Report::object();
  if (!ss.data.empty()) {
    invariants["at_first_point"]["point"] = to_json(ss.points.front());
    invariants["at_first_point"]["theta"] = number(ss.data.front().f.theta);
    invariants["at_first_point"]["theta_star"] = number(ss.data.front().f.theta_star);
  }
  report["invariants"] = invariants;

  if (!b.decomposition_ok) {
    const Point3 w = b.g5.witness.value_or(ss.points.front());
    outcome.fail(ExitStatus::Inconsistent, "decomposition outside G5 + G6 + G10 + G12", w,
                 std::max(b.decomposition_residual, b.g10_violation));
  }
  for (const auto* law : {&cv.laws.theta_outside_g5, &cv.laws.theta_star_outside_g6, &cv.laws.d_eta_law,
                          &cv.laws.d_phi_law}) {
    if (!law->zero && law->witness) outcome.fail(ExitStatus::Inconsistent, "component law", *law->witness, law->magnitude);
  }
}

void route_section(const ApctStructure& s, const SampledStructure& ss, const ClassVerdict& cv, Report& report,
                   Outcome& outcome) {
  Report section = Report::object();
  Report routes = Report::array();
  bool all_agree = true;
  for (const RouteDiscrepancy& d : route_discrepancies(s, ss.points)) {
    const bool pass = d.max_discrepancy <= ss.tol;
    Report entry = Report::object();
    entry["name"] = d.name;
    entry["max_discrepancy"] = number(d.max_discrepancy);
    entry["pass"] = pass;
    entry["witness"] = to_json(d.witness);
    routes.push_back(entry);
    if (!pass) {
      all_agree = false;
      outcome.fail(ExitStatus::Inconsistent, "route " + d.name, d.witness.value_or(ss.points.front()),
                   d.max_discrepancy);
    }
  }
  section["routes"] = routes;
  Report checks = Report::array();
  for (const CrossCheck& c : cv.checks) {
    Report entry = Report::object();
    entry["name"] = c.name;
    entry["agree"] = c.agree;
    entry["detail"] = c.detail;
    checks.push_back(entry);
    if (!c.agree) {
      all_agree = false;
      outcome.fail(ExitStatus::Inconsistent, "cross-check " + c.name, c.witness.value_or(ss.points.front()),
                   std::nullopt);
    }
  }
  section["cross_checks"] = checks;
  section["all_agree"] = all_agree;
  report["route_agreement"] = section;
}

Report sectional_json(const SectionalSurvey& s) {
  Report out = Report::object();
  out["K_xi"] = Report::object({{"min", number(s.K_xi_min)}, {"max", number(s.K_xi_max)}, {"constant", s.K_xi_constant}});
  out["K_phi"] =
      Report::object({{"min", number(s.K_phi_min)}, {"max", number(s.K_phi_max)}, {"constant", s.K_phi_constant}});
  out["K_phi_direction_variance"] = number(s.K_phi_direction_variance);
  out["evaluated"] = s.evaluated;
  out["skipped_degenerate"] = s.skipped;
  return out;
}

void curvature_section(const ApctStructure& s, const SampledStructure& ss, const SamplingConfig& cfg, Report& report,
                       Outcome& outcome) {
  const WalkerManifold& m = s.manifold();
  Report section = Report::object();

  const SectionalSurvey survey = sectional_survey(ss, 50, cfg.seed);
  const double scal = m.f_jet(ss.points.front(), 2).d(Axis::X, Axis::X);
  section["scal"] = number(scal);
  section["scal_range"] = Report::object({{"min", number(survey.scal_min)}, {"max", number(survey.scal_max)}});
  section["scal_constant"] = survey.scal_constant;

  const FlatnessVerdict flat = is_flat(m, cfg);
  Report flatness = Report::object();
  flatness["flat"] = flat.flat;
  flatness["f_xx"] = to_json(flat.f_xx);
  flatness["f_xy"] = to_json(flat.f_xy);
  flatness["f_yy"] = to_json(flat.f_yy);
  flatness["decided_by"] = "f_xx, f_xy, f_yy; f_zz does not enter the curvature";
  section["flatness"] = flatness;
  section["strict_walker"] = is_strict_walker(m, cfg).zero;

  const SegreVerdict segre = segre_type(m, ss.points.front(), cfg);
  Report sg = Report::object();
  sg["type"] = to_string(segre.type);
  sg["point"] = to_json(ss.points.front());
  if (segre.type == SegreType::Type11_1_degenerate) {
    sg["lambda1"] = number(segre.lambda1);
    sg["lambda23"] = number(segre.lambda23);
    sg["N"] = Report::array({number((*segre.N)[0]), number((*segre.N)[1]), number((*segre.N)[2])});
    sg["eigen_verified"] = segre.eigen_verified;
  }
  section["segre"] = sg;

  Report ee = Report::object();
  try {
    const EtaEinsteinVerdict v = eta_einstein_check(s, ss, cfg);
    ee["status"] = "decided";
    ee["is_eta_einstein"] = v.is_eta_einstein;
    ee["a"] = v.is_eta_einstein ? number(v.a) : Report(nullptr);
    ee["b"] = v.is_eta_einstein ? number(v.b) : Report(nullptr);
    ee["residual_route"] = v.residual_route;
    ee["condition_route"] = v.condition_route;
    ee["residual"] = to_json(v.residual);
    ee["q_xi_zero"] = v.q_xi.zero;
    ee["xi_matches_N"] = v.xi_matches_N ? Report(*v.xi_matches_N) : Report(nullptr);
    ee["routes_agree"] = v.routes_agree;
    if (!v.routes_agree) {
      outcome.fail(ExitStatus::Inconsistent, "eta-Einstein routes", v.residual.witness.value_or(ss.points.front()),
                   v.residual.magnitude);
    }
    if (v.is_eta_einstein) {
      const EtaEinsteinReport r = eta_einstein_report(s, cfg);
      Report c = Report::object();
      c["C"] = number(r.C);
      c["scal_constant"] = r.scal_constant;
      c["K_xi_zero"] = r.K_xi_zero;
      c["K_phi_matches_minus_C_over_2"] = r.K_phi_matches;
      c["discriminant"] = to_json(r.discriminant);
      c["paracosymplectic"] = r.paracosymplectic;
      c["classifier_agrees"] = r.classifier_agrees;
      ee["consequences"] = c;
      if (!r.classifier_agrees) {
        outcome.fail(ExitStatus::Inconsistent, "eta-Einstein discriminant vs classes",
                     r.discriminant.witness.value_or(ss.points.front()), r.discriminant.magnitude);
      }
    }
  } catch (const DegenerateInputError& e) {
    ee["status"] = "degenerate";
    ee["message"] = e.what();
    ee["witness"] = to_json(e.witness());
    const double fxx = m.f_jet(e.witness(), 2).d(Axis::X, Axis::X);
    outcome.fail(ExitStatus::Clean, "eta-Einstein: f_xx vanishes or changes sign", e.witness(), std::abs(fxx));
  }
  section["eta_einstein"] = ee;

  const CurvatureEquivalences eq = curvature_equivalences(s, ss, cfg);
  Report equivalences = Report::object();
  equivalences["q_commutes_with_phi"] = eq.q_commutes.zero;
  equivalences["flat_or_eta_einstein"] = to_string(eq.flat_or_eta_einstein);
  equivalences["r_commutes_with_phi"] = eq.r_commutes.zero;
  equivalences["rho_anti_invariant"] = eq.rho_anti_invariant.zero;
  equivalences["r_xi_zero"] = eq.r_xi.zero;
  equivalences["asserted"] = eq.asserted();
  equivalences["agree"] = eq.agree();
  section["equivalences"] = equivalences;
  if (!eq.agree()) {
    std::optional<Point3> w;
    for (const ZeroVerdict* z : {&eq.q_commutes, &eq.r_commutes, &eq.rho_anti_invariant, &eq.r_xi}) {
      if (!w && z->witness) w = z->witness;
    }
    outcome.fail(ExitStatus::Inconsistent, "curvature equivalence flags", w.value_or(ss.points.front()), std::nullopt);
  }

  section["sectional"] = sectional_json(survey);
  report["curvature"] = section;
}

void finish(Analysis& a, const Outcome& outcome) {
  a.status = outcome.status();
  a.message = outcome.message();
  Report status = Report::object();
  status["exit_code"] = a.exit_code();
  status["outcome"] = to_string(a.status);
  status["message"] = a.message;
  a.report["failures"] = outcome.failures();
  a.report["status"] = status;
}

Manifest with_options(Manifest m, const AnalysisOptions& opts) {
  if (opts.samples) m.sampling.samples = *opts.samples;
  if (opts.seed) m.sampling.seed = *opts.seed;
  if (opts.tol) m.sampling.tol = *opts.tol;
  return m;
}

Analysis input_error(const std::string& message) {
  Analysis a;
  Outcome outcome;
  outcome.raise(ExitStatus::Input, message);
  finish(a, outcome);
  return a;
}

}  // namespace

Analysis analyze(const Manifest& manifest, const AnalysisOptions& opts) {
  const Manifest m = with_options(manifest, opts);
  const SamplingConfig& cfg = m.sampling;
  Analysis a;
  a.report["manifest"] = manifest_json(m);
  Outcome outcome;
  try {
    if (cfg.samples < 1) throw InputError("samples must be positive");
    if (!(cfg.tol > 0.0 && cfg.tol < 1.0)) throw InputError("tol must be in (0, 1)");
    const ApctStructure s = ApctStructure::build(WalkerManifold(m.f, m.epsilon, m.domain), m.xi, cfg);
    structure_section(s, cfg, a.report, outcome);
    const SampledStructure ss = sample_structure(s, cfg);
    const ClassVerdict cv = named_classes(s, ss);
    class_sections(ss, cv, a.report, outcome);
    curvature_section(s, ss, cfg, a.report, outcome);
    route_section(s, ss, cv, a.report, outcome);
  } catch (const NonExistenceError& e) {
    outcome.raise(ExitStatus::Structural, e.what());
  } catch (const UnitConstraintError& e) {
    a.report["structure_validity"] = Report::object({{"unit_constraint", false}});
    outcome.raise(ExitStatus::Structural, e.what());
    outcome.fail(ExitStatus::Structural, "unit constraint xi2^2 + f xi3^2 + 2 xi1 xi3 = 1", e.witness(),
                 e.magnitude());
  } catch (const DomainError& e) {
    outcome.raise(ExitStatus::Input, e.what());
    outcome.fail(ExitStatus::Input, "domain violation in '" + e.subexpression() + "'", e.point(), std::nullopt);
  } catch (const Error& e) {
    outcome.raise(ExitStatus::Input, e.what());
  }
  finish(a, outcome);
  return a;
}

Analysis analyze_text(std::string_view manifest_text, const AnalysisOptions& opts) {
  try {
    return analyze(parse_manifest(manifest_text), opts);
  } catch (const Error& e) {
    return input_error(e.what());
  }
}

Analysis analyze_file(const std::filesystem::path& path, const AnalysisOptions& opts) {
  try {
    return analyze(load_manifest(path), opts);
  } catch (const Error& e) {
    return input_error(e.what());
  }
}

Analysis run_example(std::string_view name, const AnalysisOptions& opts) {
  try {
    return analyze_text(find_fixture(name).manifest, opts);
  } catch (const Error& e) {
    return input_error(e.what());
  }
}

}  // namespace walkerpc
