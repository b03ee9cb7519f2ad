#include "seceval/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "seceval/econ_scores.hpp"

namespace seceval {

ScenarioBundle ponemon_bundle() {
  ScenarioBundle b;
  b.name = "ponemon";
  b.fit_constraints = BreachFitConstraints{197.0, 30.0, 3.09e6, 4.25e6};
  b.notes = {
      "Detection time fixed at the reported 197-day mean; no distribution "
      "over detection times is modeled.",
      "The published fitted shape parameter (12007.3 day^2) does not solve "
      "the stated window-average constraint with a $3.09M early average; the "
      "constraint is only satisfied with a $3.25M early average.  The fit "
      "here solves the constraint as stated."};
  return b;
}

ScenarioBundle virtue_bundle() {
  ScenarioBundle b;
  b.name = "virtue";
  b.scoring = ScoringConfig{};  // defaults are the competition parameters
  b.labor.triage_per_alert = 80.0;
  b.labor.ir_model = IncidentResponseModel::flat(400.0);
  return b;
}

namespace {

// Monthly figures for the anomaly-detector adoption case study, per
// instance.  Several are configured constants reproduced from the source
// analysis rather than derived; see the notes.
constexpr double kHardware = 7500.0 * 1.15;         // incl. racks and cabling
constexpr double kSetupLabor = 70.0 * 8.0;          // one analyst day
constexpr long kFpAsTested = 2454;                  // 86,400 events x 2.84%
constexpr long kFpReconfigured = 14;                // published figure
constexpr double kTriageFee = 80.0;
constexpr double kIrAttackMonthly = 2400.0;         // configured constant
constexpr double kBaselineLaborMonthly = 280.0;     // weekly retuning hour
constexpr double kNoToolPublished = 12905.0;
constexpr double kNoToolRemediation = 480.0;
constexpr double kNoToolDetectMinutes = 10.0;

}  // namespace

GraphPrintsReport graphprints_report() {
  GraphPrintsReport r;
  r.initial_hardware = kHardware;
  r.initial_labor = kSetupLabor;
  r.initial_total = r.initial_hardware + r.initial_labor;

  r.fp_as_tested = kFpAsTested;
  r.fp_reconfigured = kFpReconfigured;
  r.triage_as_tested = kTriageFee * r.fp_as_tested;
  r.triage_reconfigured = kTriageFee * r.fp_reconfigured;
  r.ir_attack_monthly = kIrAttackMonthly;
  r.baseline_labor_monthly = kBaselineLaborMonthly;

  r.as_tested_monthly =
      r.triage_as_tested + r.ir_attack_monthly + r.baseline_labor_monthly;
  r.reconfigured_monthly =
      r.triage_reconfigured + r.ir_attack_monthly + r.baseline_labor_monthly;

  const ScoringConfig virtue;  // the breach curve is reused from the competition
  r.no_tool_recomputed =
      kNoToolRemediation + s_curve_cost(virtue.attack_curve, kNoToolDetectMinutes);
  r.no_tool_published = kNoToolPublished;
  r.no_tool_deviation =
      (r.no_tool_published - r.no_tool_recomputed) / r.no_tool_recomputed;

  r.gl_bound_monthly = gl_bound(r.no_tool_published);
  r.gl_bound_annual = 12.0 * r.gl_bound_monthly;
  r.annual_savings = 12.0 * (r.no_tool_published - r.reconfigured_monthly);

  r.notes = {
      "The $2,400 monthly incident-response/attack component is a configured "
      "constant with no stated derivation (one $480 incident per month does "
      "not produce it).",
      "The reconfigured scenario uses the published 14 false positives per "
      "month; 86,400 events x 0.56% would give 484.",
      "The published no-tool baseline ($12,905) differs from the recomputed "
      "$480 + breach(10 min) value; the deviation is printed below."};
  return r;
}

namespace {

std::string dollars(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string render_report(const GraphPrintsReport& r) {
  std::ostringstream os;
  os << "GraphPrints adoption report (monthly, per instance)\n";
  os << "  one-time setup:    hardware " << dollars(r.initial_hardware)
     << " + labor " << dollars(r.initial_labor) << " = "
     << dollars(r.initial_total) << "\n";
  os << "  as-tested:         triage " << dollars(r.triage_as_tested) << " ("
     << r.fp_as_tested << " alerts) + incident/attack "
     << dollars(r.ir_attack_monthly) << " + baseline labor "
     << dollars(r.baseline_labor_monthly) << " = "
     << dollars(r.as_tested_monthly) << "\n";
  os << "  reconfigured:      triage " << dollars(r.triage_reconfigured)
     << " (" << r.fp_reconfigured << " alerts) + incident/attack "
     << dollars(r.ir_attack_monthly) << " + baseline labor "
     << dollars(r.baseline_labor_monthly) << " = "
     << dollars(r.reconfigured_monthly) << "\n";
  os << "  no-tool baseline:  recomputed " << dollars(r.no_tool_recomputed)
     << ", published " << dollars(r.no_tool_published) << " (deviation ";
  char dev[32];
  std::snprintf(dev, sizeof(dev), "%+.2f%%", 100.0 * r.no_tool_deviation);
  os << dev << ")\n";
  os << "  GL spending bound: " << dollars(r.gl_bound_monthly) << "/month ("
     << dollars(r.gl_bound_annual) << "/year)\n";
  os << "  annual savings:    12 x (" << dollars(r.no_tool_published) << " - "
     << dollars(r.reconfigured_monthly) << ") = " << dollars(r.annual_savings)
     << "\n";
  for (const auto& note : r.notes) os << "  note: " << note << "\n";
  return os.str();
}

std::string render_bundle_report(const ScenarioBundle& bundle) {
  const DefenseBreakdown b =
      defense_breakdown(bundle.labor, bundle.resources, bundle.usage);
  const TotalCost t =
      total_cost(bundle.breach_costs, b.labor(), b.resource());

  std::ostringstream os;
  os << "Cost report: " << bundle.name << "\n";
  os << "  initial labor:      " << dollars(b.initial_labor) << "\n";
  os << "  initial resources:  " << dollars(b.initial_resource) << "\n";
  os << "  baseline labor:     " << dollars(b.baseline_labor) << "\n";
  os << "  baseline resources: " << dollars(b.baseline_resource) << "\n";
  os << "  triage labor:       " << dollars(b.triage_labor) << "\n";
  os << "  triage resources:   " << dollars(b.triage_resource) << "\n";
  os << "  incident labor:     " << dollars(b.ir_labor) << "\n";
  os << "  incident resources: " << dollars(b.ir_resource) << "\n";
  os << "  breaches:           " << dollars(t.breach_sum) << " ("
     << t.breach_costs.size() << " breaches)\n";
  os << "  total:              " << dollars(t.total) << "\n";
  for (const auto& note : bundle.notes) os << "  note: " << note << "\n";
  return os.str();
}

}  // namespace seceval
