#include <doctest.h>

#include "seceval/defense_ledger.hpp"

using namespace seceval;

namespace {

LaborRates sample_labor() {
  LaborRates r;
  r.initial_analyst = 560.0;
  r.initial_user = 40.0;
  r.baseline_analyst_rate = 70.0;
  r.baseline_user_rate = 2.0;
  r.triage_per_alert = 80.0;
  r.ir_model = IncidentResponseModel::flat(400.0);
  return r;
}

ResourceRates sample_resources() {
  ResourceRates r;
  r.licensing_initial = 8625.0;
  r.baseline = {1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0};
  r.triage = {0.5, 0.25, 0.125};
  return r;
}

}  // namespace

TEST_CASE("labor cost sums the four categories") {
  DefenseUsage usage;
  usage.elapsed = 10.0;
  usage.n_alerts = 3;
  usage.incident_durations = {1.0, 2.0};

  const LaborRates labor = sample_labor();
  const double expect = (560.0 + 40.0)      // initial
                        + (70.0 + 2.0) * 10.0  // baseline
                        + 80.0 * 3           // triage
                        + 400.0 * 2;         // flat incident response
  CHECK(labor_cost(labor, usage) == doctest::Approx(expect));
}

TEST_CASE("curve-based incident response costs by duration") {
  LaborRates labor;
  labor.ir_model = IncidentResponseModel::curve(SCurve(1000.0, 4.0));
  DefenseUsage usage;
  usage.incident_durations = {2.0};
  CHECK(labor_cost(labor, usage) ==
        doctest::Approx(s_curve_cost(SCurve(1000.0, 4.0), 2.0)));
}

TEST_CASE("resource cost covers licensing, baseline, and triage") {
  DefenseUsage usage;
  usage.elapsed = 2.0;
  usage.n_alerts = 4;
  const ResourceRates res = sample_resources();
  const double expect = 8625.0 + (1 + 2 + 3 + 4 + 5 + 6 + 7 + 8) * 2.0 +
                        (0.5 + 0.25 + 0.125) * 4;
  CHECK(resource_cost(res, usage) == doctest::Approx(expect));
}

TEST_CASE("breakdown summands add exactly to the totals") {
  DefenseUsage usage;
  usage.elapsed = 7.5;
  usage.n_alerts = 11;
  usage.incident_durations = {0.5, 1.5, 4.0};
  const LaborRates labor = sample_labor();
  const ResourceRates res = sample_resources();

  const DefenseBreakdown b = defense_breakdown(labor, res, usage);
  CHECK(b.labor() == b.initial_labor + b.baseline_labor + b.triage_labor +
                         b.ir_labor);
  CHECK(b.resource() == b.initial_resource + b.baseline_resource +
                            b.triage_resource + b.ir_resource);
  CHECK(b.total() == b.labor() + b.resource());
  CHECK(b.labor() == doctest::Approx(labor_cost(labor, usage)));
  CHECK(b.resource() == doctest::Approx(resource_cost(res, usage)));
  CHECK(b.ir_resource == 0.0);
}

TEST_CASE("total cost is breaches plus defense") {
  TotalCost t = total_cost({100.0, 250.0}, 30.0, 20.0);
  CHECK(t.breach_sum == doctest::Approx(350.0));
  CHECK(t.total == doctest::Approx(400.0));
  CHECK(t.breach_costs.size() == 2);
}

TEST_CASE("zero usage costs only the initial outlay") {
  const DefenseBreakdown b =
      defense_breakdown(sample_labor(), sample_resources(), DefenseUsage{});
  CHECK(b.total() == doctest::Approx(560.0 + 40.0 + 8625.0));
}

TEST_CASE("negative rates and usage are rejected") {
  LaborRates bad = sample_labor();
  bad.triage_per_alert = -1.0;
  CHECK_THROWS_AS(bad.validate(), ValidationError);

  ResourceRates badr = sample_resources();
  badr.baseline[3] = -0.5;
  CHECK_THROWS_AS(badr.validate(), ValidationError);

  DefenseUsage badu;
  badu.n_alerts = -2;
  CHECK_THROWS_AS(badu.validate(), ValidationError);
  CHECK_THROWS_AS(IncidentResponseModel::flat(-1.0), ValidationError);
}

TEST_CASE("one extra alert adds exactly the triage rates") {
  const LaborRates labor = sample_labor();
  const ResourceRates res = sample_resources();
  DefenseUsage usage;
  usage.elapsed = 5.0;
  usage.n_alerts = 9;
  const double before =
      labor_cost(labor, usage) + resource_cost(res, usage);
  usage.n_alerts = 10;
  const double after = labor_cost(labor, usage) + resource_cost(res, usage);
  CHECK(after - before == doctest::Approx(80.0 + 0.5 + 0.25 + 0.125));
}
