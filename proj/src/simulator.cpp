#include "seceval/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

namespace seceval {

void Scenario::validate() const {
  if (n_attacks < 0) throw ValidationError("Scenario: n_attacks must be >= 0");
  if (!(duration > 0.0) || !(time_grid > 0.0))
    throw ValidationError("Scenario: duration and time_grid must be > 0");
  const double slots = duration / time_grid;
  if (std::fabs(slots - std::round(slots)) > 1e-9)
    throw ValidationError("Scenario: time_grid must divide duration");
  if (non_attack_events < 0)
    throw ValidationError("Scenario: non_attack_events must be >= 0");
  if (!(ctu_window > 0.0) || !(ctu_alpha > 0.0))
    throw ValidationError("Scenario: ctu_window and ctu_alpha must be > 0");
}

void DetectorStrategy::validate() const {
  if (data_base < 0 || data_per_attack < 0 || alerts_base < 0 ||
      alerts_per_attack < 0)
    throw ValidationError(
        "DetectorStrategy: volumes and counts must be >= 0 for all n_a");
  if (policy.type == DetectorPolicy::Type::Periodic &&
      (!(policy.interval > 0.0) || policy.first_offset < 0.0))
    throw ValidationError("DetectorStrategy: bad periodic policy");
  if (policy.type == DetectorPolicy::Type::FixedDelay && !(policy.delay >= 0.0))
    throw ValidationError("DetectorStrategy: bad fixed-delay policy");
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  if (n == 0) throw DomainError("SplitMix64::below: n must be > 0");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % n;
}

SplitMix64 run_rng(std::uint64_t seed, std::uint64_t run_index) {
  // One splitmix step separates the (seed, run) pairs before streaming.
  SplitMix64 mixer(seed * 0x9E3779B97F4A7C15ULL + run_index);
  return SplitMix64(mixer.next());
}

std::vector<double> sample_attacks(const Scenario& scenario, SplitMix64& rng) {
  scenario.validate();
  const auto slots =
      static_cast<std::uint64_t>(std::llround(scenario.duration / scenario.time_grid));
  std::vector<double> starts;
  starts.reserve(scenario.n_attacks);
  for (int k = 0; k < scenario.n_attacks; ++k)
    starts.push_back(scenario.time_grid * static_cast<double>(rng.below(slots)));
  return starts;
}

namespace {

constexpr int kVirtues = 6;

std::string virtue_name(int idx) { return "v" + std::to_string(idx % kVirtues); }

/// A class on `entity` that no attack uses there, so an alert with it can
/// never match.
int non_matching_class(const std::vector<AttackRecord>& attacks,
                       const std::string& entity, int n_classes) {
  std::set<int> used;
  for (const auto& a : attacks)
    if (a.entity == entity) used.insert(a.attack_class);
  for (int c = 1; c <= n_classes; ++c)
    if (!used.count(c)) return c;
  throw DataError("no free alert class on entity " + entity);
}

struct GeneratedAlert {
  AlertEvent event;
  bool is_false;
};

ScoringConfig virtue_config() {
  ScoringConfig config;  // defaults are the VirtUE parameters
  for (int v = 0; v < kVirtues; ++v) config.entities.push_back(virtue_name(v));
  return config;
}

std::vector<AttackRecord> make_attacks(const std::vector<double>& starts,
                                       int n_classes) {
  std::vector<AttackRecord> attacks;
  attacks.reserve(starts.size());
  for (std::size_t k = 0; k < starts.size(); ++k) {
    // Cycling entity and class separately keeps (entity, class) unique for
    // any realistic attack count, so matching is unambiguous.
    attacks.push_back(AttackRecord{virtue_name(static_cast<int>(k)),
                                   static_cast<int>(k % n_classes) + 1,
                                   starts[k], std::nullopt});
  }
  return attacks;
}

std::vector<GeneratedAlert> generate_alerts(const DetectorStrategy& strategy,
                                            const Scenario& scenario,
                                            const std::vector<AttackRecord>& attacks,
                                            int n_classes) {
  std::vector<GeneratedAlert> out;
  const int n_a = static_cast<int>(attacks.size());

  switch (strategy.policy.type) {
    case DetectorPolicy::Type::Null:
      break;

    case DetectorPolicy::Type::Periodic: {
      // Each scan issues one alert per class (16 total): correct alerts for
      // every ongoing undetected attack, the rest false.
      std::vector<bool> detected(attacks.size(), false);
      for (double scan = strategy.policy.first_offset;
           scan < scenario.duration; scan += strategy.policy.interval) {
        int issued = 0;
        for (std::size_t k = 0; k < attacks.size(); ++k) {
          if (detected[k] || attacks[k].start > scan) continue;
          detected[k] = true;
          out.push_back({AlertEvent{scan, attacks[k].entity,
                                    attacks[k].attack_class},
                         false});
          ++issued;
        }
        for (int pad = issued; pad < n_classes; ++pad) {
          const std::string entity = virtue_name(pad);
          out.push_back({AlertEvent{scan, entity,
                                    non_matching_class(attacks, entity,
                                                       n_classes)},
                         true});
        }
      }
      break;
    }

    case DetectorPolicy::Type::FixedDelay: {
      // Baseline false alerts, evenly spaced over the run.
      const int baseline = static_cast<int>(std::llround(strategy.alerts(0)));
      for (int j = 0; j < baseline; ++j) {
        const double t = scenario.duration * (j + 1) / (baseline + 1);
        const std::string entity = virtue_name(j);
        out.push_back({AlertEvent{t, entity,
                                  non_matching_class(attacks, entity, n_classes)},
                       true});
      }
      // Per attack: the false alerts precede the correct one, spread evenly
      // over (start, start + delay).
      const int per_attack =
          n_a > 0 ? static_cast<int>(std::llround(
                        (strategy.alerts(n_a) - strategy.alerts(0)) / n_a))
                  : 0;
      const double delay = strategy.policy.delay;
      for (const auto& atk : attacks) {
        for (int j = 1; j < per_attack; ++j) {
          const double t = atk.start + delay * j / per_attack;
          if (t > scenario.duration) continue;
          out.push_back({AlertEvent{t, atk.entity,
                                    non_matching_class(attacks, atk.entity,
                                                       n_classes)},
                         true});
        }
        const double t_detect = atk.start + delay;
        if (t_detect <= scenario.duration)
          out.push_back(
              {AlertEvent{t_detect, atk.entity, atk.attack_class}, false});
      }
      break;
    }
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const GeneratedAlert& a, const GeneratedAlert& b) {
                     return a.event.time < b.event.time;
                   });
  return out;
}

std::vector<WindowCounts> tally_windows(const Scenario& scenario,
                                        const std::vector<AttackRecord>& attacks,
                                        const std::vector<GeneratedAlert>& alerts) {
  const long n_windows = std::lround(scenario.duration / scenario.ctu_window);
  std::vector<long> fp_alerts(n_windows, 0);
  for (const auto& ga : alerts) {
    if (!ga.is_false) continue;
    long w = static_cast<long>(ga.event.time / scenario.ctu_window);
    if (w >= n_windows) w = n_windows - 1;  // alert exactly at end of run
    ++fp_alerts[w];
  }

  std::vector<WindowCounts> windows(n_windows);
  for (long i = 0; i < n_windows; ++i) {
    WindowCounts& w = windows[i];
    w.i = i;
    const double win_end = (i + 1) * scenario.ctu_window;
    // An attack scores false negatives from its start until detection, then
    // true positives; normals are unaffected by time.
    for (const auto& atk : attacks) {
      if (atk.start >= win_end) continue;
      ++w.n_b;
      if (atk.detected_at && *atk.detected_at < win_end)
        ++w.c_tp;
      else
        ++w.c_fn;
    }
    // Non-attack events spread evenly over the windows.
    w.n_n = scenario.non_attack_events / n_windows +
            (i < scenario.non_attack_events % n_windows ? 1 : 0);
    w.c_fp = std::min(fp_alerts[i], w.n_n);
    w.c_tn = w.n_n - w.c_fp;
  }
  return windows;
}

}  // namespace

RunOutput run_strategy(const DetectorStrategy& strategy,
                       const Scenario& scenario,
                       const std::vector<double>& attack_starts) {
  strategy.validate();
  scenario.validate();
  for (double s : attack_starts)
    if (s < 0.0 || s >= scenario.duration)
      throw DataError("run_strategy: attack start outside [0, duration)");

  RunOutput out;
  out.config = virtue_config();
  out.config.duration = scenario.duration;

  std::vector<AttackRecord> attacks =
      make_attacks(attack_starts, out.config.n_classes);
  std::vector<GeneratedAlert> generated =
      generate_alerts(strategy, scenario, attacks, out.config.n_classes);

  std::vector<AlertEvent> alerts;
  alerts.reserve(generated.size());
  for (const auto& ga : generated) alerts.push_back(ga.event);

  std::vector<DataUsageEvent> data;
  const double mb = strategy.data_mb(static_cast<int>(attack_starts.size()));
  if (mb > 0.0) data.push_back(DataUsageEvent{0.0, mb});

  out.ledger = score_run(out.config, attacks, alerts, data);

  out.standard.tp = out.ledger.true_positives;
  out.standard.fn =
      static_cast<long>(attack_starts.size()) - out.ledger.true_positives;
  out.standard.fp = out.ledger.false_positives;
  out.standard.tn =
      std::max<long>(0, scenario.non_attack_events - out.ledger.false_positives);

  out.windows = tally_windows(scenario, out.ledger.attacks, generated);

  out.events.attacks = out.ledger.attacks;
  for (auto& a : out.events.attacks) a.detected_at.reset();
  out.events.alerts = std::move(alerts);
  out.events.data = std::move(data);
  return out;
}

SimResult simulate(const DetectorStrategy& strategy, const Scenario& scenario,
                   int runs, std::uint64_t seed,
                   const std::string& emit_events_dir) {
  if (runs < 1) throw ValidationError("simulate: runs must be >= 1");
  strategy.validate();
  scenario.validate();

  if (!emit_events_dir.empty())
    std::filesystem::create_directories(emit_events_dir);

  SimResult result;
  result.strategy = strategy.name;
  result.runs = runs;

  std::vector<double> totals;
  totals.reserve(runs);
  for (int r = 0; r < runs; ++r) {
    SplitMix64 rng = run_rng(seed, static_cast<std::uint64_t>(r));
    const std::vector<double> starts = sample_attacks(scenario, rng);
    RunOutput run = run_strategy(strategy, scenario, starts);

    totals.push_back(run.ledger.total);
    result.standard += run.standard;
    for (const auto& w : run.windows) result.ctu.add(w, scenario.ctu_alpha);

    if (!emit_events_dir.empty()) {
      char name[32];
      std::snprintf(name, sizeof(name), "run_%04d.jsonl", r);
      write_event_log(run.events,
                      (std::filesystem::path(emit_events_dir) / name).string());
    }
  }

  double sum = 0.0;
  for (double t : totals) sum += t;
  result.mean_cost = sum / runs;
  // two-pass variance; the one-pass form loses all precision when the
  // per-run totals are identical
  double ss = 0.0;
  for (double t : totals) ss += (t - result.mean_cost) * (t - result.mean_cost);
  result.std_cost = runs > 1 ? std::sqrt(ss / (runs - 1)) : 0.0;
  result.standard_metrics = derive_metrics(result.standard);
  result.ctu_metrics = derive_metrics(result.ctu);
  return result;
}

DetectorStrategy read_strategy_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open strategy file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid strategy JSON in " + path + ": " + e.what());
  }
  DetectorStrategy s;
  try {
    s.name = j.value("name", path);
    if (j.contains("data_mb")) {
      s.data_base = j.at("data_mb").value("base", 0.0);
      s.data_per_attack = j.at("data_mb").value("per_attack", 0.0);
    }
    if (j.contains("alerts")) {
      s.alerts_base = j.at("alerts").value("base", 0.0);
      s.alerts_per_attack = j.at("alerts").value("per_attack", 0.0);
    }
    const auto& p = j.at("policy");
    const std::string type = p.at("type").get<std::string>();
    if (type == "null") {
      s.policy.type = DetectorPolicy::Type::Null;
    } else if (type == "periodic") {
      s.policy.type = DetectorPolicy::Type::Periodic;
      s.policy.interval = p.at("interval").get<double>();
      s.policy.first_offset = p.at("first_offset").get<double>();
    } else if (type == "fixed_delay") {
      s.policy.type = DetectorPolicy::Type::FixedDelay;
      s.policy.delay = p.at("delay").get<double>();
    } else {
      throw ParseError("unknown policy type \"" + type + "\" in " + path);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid strategy definition in " + path + ": " + e.what());
  }
  s.validate();
  return s;
}

DetectorStrategy builtin_strategy(const std::string& name) {
  DetectorStrategy s;
  s.name = name;
  if (name == "null") {
    s.policy.type = DetectorPolicy::Type::Null;
  } else if (name == "periodic-10m") {
    s.policy = {DetectorPolicy::Type::Periodic, 10.0, 10.0, 0.0};
    s.alerts_base = 80.0;  // 16 alerts at each of 5 scans
  } else if (name == "periodic-30m") {
    s.policy = {DetectorPolicy::Type::Periodic, 30.0, 15.0, 0.0};
    s.alerts_base = 32.0;  // 16 alerts at each of 2 scans
  } else if (name == "low-data-low-speed") {
    s = {name, 5.0, 0.1, 5.0, 5.0,
         {DetectorPolicy::Type::FixedDelay, 0.0, 0.0, 3.0}};
  } else if (name == "low-data-medium-speed") {
    s = {name, 5.0, 0.1, 5.0, 5.0,
         {DetectorPolicy::Type::FixedDelay, 0.0, 0.0, 1.5}};
  } else if (name == "high-data-medium-speed") {
    s = {name, 10.0, 1.0, 4.0, 4.0,
         {DetectorPolicy::Type::FixedDelay, 0.0, 0.0, 1.5}};
  } else if (name == "high-data-high-speed") {
    s = {name, 10.0, 1.0, 4.0, 4.0,
         {DetectorPolicy::Type::FixedDelay, 0.0, 0.0, 0.25}};
  } else {
    throw ValidationError("unknown builtin strategy: " + name);
  }
  return s;
}

std::vector<std::string> builtin_strategy_names() {
  return {"null",
          "periodic-10m",
          "periodic-30m",
          "low-data-low-speed",
          "low-data-medium-speed",
          "high-data-medium-speed",
          "high-data-high-speed"};
}

}  // namespace seceval
