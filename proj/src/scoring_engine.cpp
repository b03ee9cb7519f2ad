#include "seceval/scoring_engine.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "seceval/serialization.hpp"

namespace seceval {

void ScoringConfig::validate() const {
  if (!(data_rate > 0.0) || !(triage_fee > 0.0) || !(remediation_fee > 0.0) ||
      !(duration > 0.0) || n_classes <= 0)
    throw ValidationError("ScoringConfig: all parameters must be positive");
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

CostLedger score_run(const ScoringConfig& config,
                     std::vector<AttackRecord> attacks,
                     std::vector<AlertEvent> alerts,
                     const std::vector<DataUsageEvent>& data) {
  config.validate();

  std::unordered_set<std::string> known(config.entities.begin(),
                                        config.entities.end());
  for (auto& a : attacks) {
    if (a.attack_class < 1 || a.attack_class > config.n_classes)
      throw DataError("score_run: attack class out of range for entity " +
                      a.entity);
    if (a.start < 0.0 || a.start >= config.duration)
      throw DataError("score_run: attack start outside [0, duration) for entity " +
                      a.entity);
    a.detected_at.reset();
    known.insert(a.entity);
  }

  CostLedger ledger;

  for (const auto& d : data) {
    if (d.megabytes < 0.0)
      throw DataError("score_run: negative data volume");
    const double charge = config.data_rate * d.megabytes;
    ledger.data_cost += charge;
    ledger.rows.push_back({ChargeRow::Kind::Data, d.time,
                           fmt(d.megabytes) + " MB at " + fmt(config.data_rate) +
                               "/MB",
                           charge});
  }

  // Same-timestamp alerts keep input order (stable sort).
  if (!std::is_sorted(alerts.begin(), alerts.end(),
                      [](const AlertEvent& a, const AlertEvent& b) {
                        return a.time < b.time;
                      })) {
    std::stable_sort(alerts.begin(), alerts.end(),
                     [](const AlertEvent& a, const AlertEvent& b) {
                       return a.time < b.time;
                     });
    ledger.unsorted_input_warning = true;
  }

  for (const auto& alert : alerts) {
    if (!known.count(alert.entity))
      throw DataError("score_run: alert references unknown entity " +
                      alert.entity);
    if (alert.attack_class < 1 || alert.attack_class > config.n_classes)
      throw DataError("score_run: alert class out of range");
    if (alert.time < 0.0 || alert.time > config.duration)
      throw DataError("score_run: alert time outside [0, duration]");

    ledger.triage_cost += config.triage_fee;
    ledger.rows.push_back({ChargeRow::Kind::Triage, alert.time,
                           "alert on " + alert.entity, config.triage_fee});

    // True positive: earliest-started undetected attack matching entity,
    // class, and start <= alert time.  Anything else is a false positive.
    AttackRecord* match = nullptr;
    for (auto& atk : attacks) {
      if (atk.detected_at || atk.entity != alert.entity ||
          atk.attack_class != alert.attack_class || atk.start > alert.time)
        continue;
      if (!match || atk.start < match->start) match = &atk;
    }
    if (match) {
      match->detected_at = alert.time;
      ++ledger.true_positives;
      ledger.remediation_cost += config.remediation_fee;
      ledger.rows.push_back({ChargeRow::Kind::Remediation, alert.time,
                             "remediation on " + alert.entity,
                             config.remediation_fee});
      const double breach =
          s_curve_cost(config.attack_curve, alert.time - match->start);
      ledger.breach_cost += breach;
      ledger.rows.push_back({ChargeRow::Kind::Breach, alert.time,
                             "attack on " + match->entity + " detected after " +
                                 fmt(alert.time - match->start) + " min",
                             breach});
    } else {
      ++ledger.false_positives;
    }
  }

  // Undetected attacks run to the end of the competition.
  for (const auto& atk : attacks) {
    if (atk.detected_at) continue;
    const double breach =
        s_curve_cost(config.attack_curve, config.duration - atk.start);
    ledger.breach_cost += breach;
    ledger.rows.push_back({ChargeRow::Kind::Breach, config.duration,
                           "undetected attack on " + atk.entity + " ran " +
                               fmt(config.duration - atk.start) + " min",
                           breach});
  }

  ledger.attacks = std::move(attacks);
  ledger.total = ledger.data_cost + ledger.triage_cost +
                 ledger.remediation_cost + ledger.breach_cost;
  return ledger;
}

CostLedger score_stream(const ScoringConfig& config, const std::string& path) {
  EventLog log = read_event_log(path);
  return score_run(config, std::move(log.attacks), std::move(log.alerts),
                   log.data);
}

}  // namespace seceval
