#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seceval/cost_curves.hpp"
#include "seceval/defense_ledger.hpp"
#include "seceval/scoring_engine.hpp"

namespace seceval {

/// A packaged, named evaluation setup: curves, rates, scoring parameters,
/// and the notes documenting any deviations baked into its constants.
struct ScenarioBundle {
  std::string name;
  std::vector<std::string> notes;
  std::optional<BreachFitConstraints> fit_constraints;
  std::optional<ScoringConfig> scoring;
  LaborRates labor;
  ResourceRates resources;
  DefenseUsage usage;
  std::vector<double> breach_costs;
};

/// Mean-statistics breach-cost fit inputs (197-day detection, 30-day
/// containment window, $3.09M early / $4.25M asymptotic averages).
ScenarioBundle ponemon_bundle();

/// The one-hour competition configuration ($150/MB, $80/alert, $400/TP,
/// half-cost-at-5-minutes attack curve).
ScenarioBundle virtue_bundle();

/// Line items of the network anomaly-detector adoption case study, monthly
/// per instance.
struct GraphPrintsReport {
  double initial_hardware = 0.0;
  double initial_labor = 0.0;
  double initial_total = 0.0;
  long fp_as_tested = 0;
  long fp_reconfigured = 0;
  double triage_as_tested = 0.0;
  double triage_reconfigured = 0.0;
  double ir_attack_monthly = 0.0;
  double baseline_labor_monthly = 0.0;
  double as_tested_monthly = 0.0;
  double reconfigured_monthly = 0.0;
  double no_tool_published = 0.0;
  double no_tool_recomputed = 0.0;
  double no_tool_deviation = 0.0;  // relative, signed
  double gl_bound_monthly = 0.0;
  double gl_bound_annual = 0.0;
  double annual_savings = 0.0;
  std::vector<std::string> notes;
};

GraphPrintsReport graphprints_report();

std::string render_report(const GraphPrintsReport& report);

/// Generic itemized cost table for a bundle: the eight defense summands
/// plus breach costs.
std::string render_bundle_report(const ScenarioBundle& bundle);

}  // namespace seceval
