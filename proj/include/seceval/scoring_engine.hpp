#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seceval/cost_curves.hpp"
#include "seceval/errors.hpp"

namespace seceval {

/// Competition scoring parameters.  Defaults reproduce the VirtUE challenge
/// configuration: $150/MB data, $80 triage, $400 remediation, and a breach
/// curve reaching half of $14,800 at five minutes.
struct ScoringConfig {
  double data_rate = 150.0;        // dollars per MB
  double triage_fee = 80.0;        // dollars per alert
  double remediation_fee = 400.0;  // dollars per true positive
  SCurve attack_curve{14800.0, 25.0 * 0.6931471805599453094};  // 25 ln 2, min^2
  double duration = 60.0;          // minutes
  int n_classes = 16;
  /// Entities alerts may reference in addition to those named by attacks.
  /// Alerts naming an entity outside this union are a data error.  Defaults
  /// to the six-virtue competition roster.
  std::vector<std::string> entities{"v0", "v1", "v2", "v3", "v4", "v5"};

  void validate() const;
};

struct AttackRecord {
  std::string entity;
  int attack_class = 1;
  double start = 0.0;                 // minutes
  std::optional<double> detected_at;  // output: time of correct detection
};

struct AlertEvent {
  double time = 0.0;  // minutes
  std::string entity;
  int attack_class = 1;
};

struct DataUsageEvent {
  double time = 0.0;
  double megabytes = 0.0;
};

/// One line item of a scored run.
struct ChargeRow {
  enum class Kind { Data, Triage, Remediation, Breach };
  Kind kind;
  double time = 0.0;     // when the charge accrued (end of run for misses)
  std::string cause;     // human-readable reason
  double amount = 0.0;
};

/// Itemized dollar outcome of one scored run.
struct CostLedger {
  double data_cost = 0.0;
  double triage_cost = 0.0;
  double remediation_cost = 0.0;
  double breach_cost = 0.0;
  double total = 0.0;
  std::vector<ChargeRow> rows;
  std::vector<AttackRecord> attacks;  // with detected_at filled in
  long true_positives = 0;
  long false_positives = 0;
  bool unsorted_input_warning = false;
};

/// Scores one run: charges data volume, triage per alert, and remediation
/// plus time-dependent breach cost per detected attack; undetected attacks
/// are charged for the full remaining duration at end of run.
CostLedger score_run(const ScoringConfig& config,
                     std::vector<AttackRecord> attacks,
                     std::vector<AlertEvent> alerts,
                     const std::vector<DataUsageEvent>& data);

/// File-driven wrapper: parses a JSONL event log (records typed "attack",
/// "alert", "data") and scores it.  Malformed lines raise ParseError with
/// the offending line number.
CostLedger score_stream(const ScoringConfig& config, const std::string& path);

}  // namespace seceval
