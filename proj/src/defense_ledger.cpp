#include "seceval/defense_ledger.hpp"

#include <numeric>

namespace seceval {

IncidentResponseModel IncidentResponseModel::flat(double fee) {
  if (fee < 0.0) throw ValidationError("IncidentResponseModel: fee must be >= 0");
  IncidentResponseModel m;
  m.flat_fee_ = fee;
  return m;
}

IncidentResponseModel IncidentResponseModel::curve(const SCurve& c) {
  IncidentResponseModel m;
  m.curve_ = c;
  return m;
}

double IncidentResponseModel::cost(double response_duration) const {
  if (curve_) return s_curve_cost(*curve_, response_duration);
  return flat_fee_;
}

void LaborRates::validate() const {
  if (initial_analyst < 0 || initial_user < 0 || baseline_analyst_rate < 0 ||
      baseline_user_rate < 0 || triage_per_alert < 0)
    throw ValidationError("LaborRates: coefficients must be >= 0");
}

void ResourceRates::validate() const {
  if (licensing_initial < 0)
    throw ValidationError("ResourceRates: coefficients must be >= 0");
  for (double x : baseline)
    if (x < 0) throw ValidationError("ResourceRates: coefficients must be >= 0");
  for (double y : triage)
    if (y < 0) throw ValidationError("ResourceRates: coefficients must be >= 0");
}

void DefenseUsage::validate() const {
  if (elapsed < 0) throw ValidationError("DefenseUsage: elapsed must be >= 0");
  if (n_alerts < 0) throw ValidationError("DefenseUsage: n_alerts must be >= 0");
}

DefenseBreakdown defense_breakdown(const LaborRates& labor,
                                   const ResourceRates& resources,
                                   const DefenseUsage& usage) {
  labor.validate();
  resources.validate();
  usage.validate();

  DefenseBreakdown b;
  b.initial_labor = labor.initial_analyst + labor.initial_user;
  b.baseline_labor =
      (labor.baseline_analyst_rate + labor.baseline_user_rate) * usage.elapsed;
  b.triage_labor = labor.triage_per_alert * static_cast<double>(usage.n_alerts);
  for (double d : usage.incident_durations) b.ir_labor += labor.ir_model.cost(d);

  b.initial_resource = resources.licensing_initial;
  for (double x : resources.baseline) b.baseline_resource += x * usage.elapsed;
  for (double y : resources.triage)
    b.triage_resource += y * static_cast<double>(usage.n_alerts);
  b.ir_resource = 0.0;  // incident response carries no resource cost
  return b;
}

double labor_cost(const LaborRates& rates, const DefenseUsage& usage) {
  ResourceRates none;
  return defense_breakdown(rates, none, usage).labor();
}

double resource_cost(const ResourceRates& rates, const DefenseUsage& usage) {
  LaborRates none;
  return defense_breakdown(none, rates, usage).resource();
}

TotalCost total_cost(std::vector<double> breach_costs, double labor,
                     double resources) {
  TotalCost t;
  t.breach_costs = std::move(breach_costs);
  t.labor = labor;
  t.resources = resources;
  t.breach_sum =
      std::accumulate(t.breach_costs.begin(), t.breach_costs.end(), 0.0);
  t.total = t.breach_sum + t.labor + t.resources;
  return t;
}

}  // namespace seceval
