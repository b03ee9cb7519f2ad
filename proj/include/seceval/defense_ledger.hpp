#pragma once

#include <array>
#include <optional>
#include <vector>

#include "seceval/cost_curves.hpp"
#include "seceval/errors.hpp"

namespace seceval {

/// Incident-response labor model: either a flat per-incident fee or an
/// S-curve of the response duration.
class IncidentResponseModel {
 public:
  static IncidentResponseModel flat(double fee);
  static IncidentResponseModel curve(const SCurve& c);
  IncidentResponseModel() : flat_fee_(0.0) {}  // default: free

  double cost(double response_duration) const;
  bool is_flat() const { return !curve_.has_value(); }
  double flat_fee() const { return flat_fee_; }
  const std::optional<SCurve>& s_curve() const { return curve_; }

 private:
  double flat_fee_ = 0.0;
  std::optional<SCurve> curve_;
};

/// Labor cost coefficients: initial, baseline, triage, and incident-response
/// categories for analysts and end users.
struct LaborRates {
  double initial_analyst = 0.0;       // c1, dollars
  double initial_user = 0.0;          // c2, dollars
  double baseline_analyst_rate = 0.0; // x1, dollars/time
  double baseline_user_rate = 0.0;    // x2, dollars/time
  double triage_per_alert = 0.0;      // y1, dollars/alert; end-user triage is 0
  IncidentResponseModel ir_model;

  void validate() const;
};

/// Resource cost coefficients, sub-divided by resource type.
struct ResourceRates {
  double licensing_initial = 0.0;  // c1, dollars
  // baseline dollars/time: licensing, storage, cpu, memory, disk_io,
  // bandwidth, space, power
  std::array<double, 8> baseline{};
  // triage dollars/alert: storage, disk_io, bandwidth
  std::array<double, 3> triage{};

  void validate() const;
};

/// What actually happened over the costed period.
struct DefenseUsage {
  double elapsed = 0.0;
  long n_alerts = 0;
  std::vector<double> incident_durations;  // response duration per incident

  void validate() const;
};

/// The eight individually retrievable defense-cost summands.
struct DefenseBreakdown {
  double initial_labor = 0.0;
  double baseline_labor = 0.0;
  double triage_labor = 0.0;
  double ir_labor = 0.0;
  double initial_resource = 0.0;
  double baseline_resource = 0.0;
  double triage_resource = 0.0;
  double ir_resource = 0.0;  // fixed 0 by the model

  double labor() const {
    return initial_labor + baseline_labor + triage_labor + ir_labor;
  }
  double resource() const {
    return initial_resource + baseline_resource + triage_resource + ir_resource;
  }
  double total() const { return labor() + resource(); }
};

DefenseBreakdown defense_breakdown(const LaborRates& labor,
                                   const ResourceRates& resources,
                                   const DefenseUsage& usage);

double labor_cost(const LaborRates& rates, const DefenseUsage& usage);
double resource_cost(const ResourceRates& rates, const DefenseUsage& usage);

/// Itemized grand total: breaches plus defense.
struct TotalCost {
  std::vector<double> breach_costs;
  double labor = 0.0;
  double resources = 0.0;
  double breach_sum = 0.0;
  double total = 0.0;
};

TotalCost total_cost(std::vector<double> breach_costs, double labor,
                     double resources);

}  // namespace seceval
