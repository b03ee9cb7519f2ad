#pragma once

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "seceval/cost_curves.hpp"
#include "seceval/defense_ledger.hpp"
#include "seceval/scoring_engine.hpp"

namespace seceval {

// -- curves -----------------------------------------------------------------
// {"kind": "s_curve", "b": ..., "alpha": ...}
// {"kind": "phase", "a": ..., "b": ..., "alpha": ..., "start": ...}

nlohmann::json to_json(const SCurve& curve);
nlohmann::json to_json(const PhaseCurve& curve, double start);
SCurve s_curve_from_json(const nlohmann::json& j);
BreachCurve breach_curve_from_json(const nlohmann::json& j);  // array of phases

// -- rates ------------------------------------------------------------------

nlohmann::json to_json(const LaborRates& rates);
nlohmann::json to_json(const ResourceRates& rates);
LaborRates labor_rates_from_json(const nlohmann::json& j);
ResourceRates resource_rates_from_json(const nlohmann::json& j);

// -- scoring config ---------------------------------------------------------

nlohmann::json to_json(const ScoringConfig& config);
ScoringConfig scoring_config_from_json(const nlohmann::json& j);
ScoringConfig read_scoring_config(const std::string& path);

// -- event logs -------------------------------------------------------------
// UTF-8 JSONL, one record per line, "type" in {attack, alert, data}:
//   {"type":"attack","entity":"v0","class":3,"start":12.0}
//   {"type":"alert","time":12.5,"entity":"v0","class":3}
//   {"type":"data","time":0.0,"megabytes":6.2}

struct EventLog {
  std::vector<AttackRecord> attacks;
  std::vector<AlertEvent> alerts;
  std::vector<DataUsageEvent> data;
};

EventLog read_event_log(const std::string& path);
EventLog parse_event_log(const std::string& text);
void write_event_log(const EventLog& log, const std::string& path);

// -- ledgers ----------------------------------------------------------------

std::string ledger_csv(const CostLedger& ledger);

}  // namespace seceval
