#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seceval/metrics.hpp"
#include "seceval/scoring_engine.hpp"
#include "seceval/serialization.hpp"

namespace seceval {

/// One simulated competition setup.
struct Scenario {
  int n_attacks = 12;
  double duration = 60.0;        // minutes
  double time_grid = 2.0;        // attack starts are rounded to this grid
  int non_attack_events = 720;   // negatives for the standard confusion counts
  double ctu_window = 0.25;      // minutes per time-dependent metric window
  double ctu_alpha = 1.0;

  void validate() const;
};

struct DetectorPolicy {
  enum class Type { Null, Periodic, FixedDelay };
  Type type = Type::Null;
  double interval = 0.0;      // periodic: minutes between scans
  double first_offset = 0.0;  // periodic: time of the first scan
  double delay = 0.0;         // fixed-delay: detection latency per attack
};

/// A simulated detector: affine data and alert volumes in the number of
/// attacks, plus a detection policy.
struct DetectorStrategy {
  std::string name;
  double data_base = 0.0;
  double data_per_attack = 0.0;
  double alerts_base = 0.0;
  double alerts_per_attack = 0.0;
  DetectorPolicy policy;

  double data_mb(int n_attacks) const {
    return data_base + data_per_attack * n_attacks;
  }
  double alerts(int n_attacks) const {
    return alerts_base + alerts_per_attack * n_attacks;
  }
  void validate() const;
};

/// SplitMix64: a splittable counter-style generator with a published
/// algorithm, so seeded runs reproduce across machines.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform integer in [0, n) by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

/// Derives the independent per-run stream for (seed, run_index).
SplitMix64 run_rng(std::uint64_t seed, std::uint64_t run_index);

/// Attack start times: n_attacks draws, uniform with replacement on the
/// grid {0, time_grid, ..., duration - time_grid}.
std::vector<double> sample_attacks(const Scenario& scenario, SplitMix64& rng);

/// Everything produced by one simulated run.
struct RunOutput {
  CostLedger ledger;
  StandardTotals standard;
  std::vector<WindowCounts> windows;  // one per ctu_window slice
  EventLog events;                    // replayable through score_stream
  ScoringConfig config;               // the config the events were scored with
};

/// Builds the strategy's alert/data events for the given attack starts,
/// scores them, and tallies standard and per-window confusion counts
/// against the scenario's non-attack events.
RunOutput run_strategy(const DetectorStrategy& strategy,
                       const Scenario& scenario,
                       const std::vector<double>& attack_starts);

struct SimResult {
  std::string strategy;
  double mean_cost = 0.0;
  double std_cost = 0.0;
  int runs = 0;
  StandardTotals standard;
  TimeDependentTotals ctu;
  MetricSet standard_metrics;
  MetricSet ctu_metrics;
};

/// Monte Carlo aggregate over independently seeded runs; deterministic for a
/// fixed seed.  When emit_events_dir is nonempty, each run's event stream is
/// written there as run_NNNN.jsonl for replay through the scorer.
SimResult simulate(const DetectorStrategy& strategy, const Scenario& scenario,
                   int runs, std::uint64_t seed,
                   const std::string& emit_events_dir = "");

/// Loads a strategy definition from a JSON file:
///   {"name": ..., "data_mb": {"base": ..., "per_attack": ...},
///    "alerts": {"base": ..., "per_attack": ...},
///    "policy": {"type": "null"}
///            | {"type": "periodic", "interval": ..., "first_offset": ...}
///            | {"type": "fixed_delay", "delay": ...}}
DetectorStrategy read_strategy_file(const std::string& path);

/// The seven reference strategies by name: null, periodic-10m, periodic-30m,
/// low-data-low-speed, low-data-medium-speed, high-data-medium-speed,
/// high-data-high-speed.
DetectorStrategy builtin_strategy(const std::string& name);
std::vector<std::string> builtin_strategy_names();

}  // namespace seceval
