// seceval: cost-based security evaluation toolkit.
//
// Subcommands: fit, score, simulate, metrics, econ, report.
// Exit codes: 0 success, 1 validation error, 2 I/O or parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "seceval/cost_curves.hpp"
#include "seceval/econ_scores.hpp"
#include "seceval/metrics.hpp"
#include "seceval/scenarios.hpp"
#include "seceval/scoring_engine.hpp"
#include "seceval/serialization.hpp"
#include "seceval/simulator.hpp"

namespace {

using namespace seceval;

bool g_quiet = false;

void say(const std::string& line) {
  if (!g_quiet) std::cout << line << "\n";
}

std::string money(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write output file: " + path);
  out << text;
}

// ---- fit -------------------------------------------------------------------

struct FitArgs {
  double detect_time = 197.0;
  double window = 30.0;
  double early_avg = 3.09e6;
  double late_avg = 4.25e6;
  std::string csv;
  int samples = 200;
  double t_max = 0.0;  // default: 3 * detect_time
};

int cmd_fit(const FitArgs& args) {
  BreachFitConstraints k{args.detect_time, args.window, args.early_avg,
                         args.late_avg};
  SCurve curve = fit_s_curve(k);
  std::cout << "b = " << money(curve.b) << "\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", curve.alpha);
  std::cout << "alpha = " << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.3e", fit_residual(curve, k));
  std::cout << "constraint_residual = " << buf << "\n";

  if (!args.csv.empty()) {
    const double t_max = args.t_max > 0.0 ? args.t_max : 3.0 * args.detect_time;
    std::ostringstream os;
    os << "t,cost\n";
    for (int i = 0; i <= args.samples; ++i) {
      const double t = t_max * i / args.samples;
      std::snprintf(buf, sizeof(buf), "%.4f,%.2f", t, s_curve_cost(curve, t));
      os << buf << "\n";
    }
    write_text(args.csv, os.str());
  }
  return 0;
}

// ---- score -----------------------------------------------------------------

int cmd_score(const std::string& config_path, const std::string& events_path,
              const std::string& csv) {
  ScoringConfig config =
      config_path.empty() ? ScoringConfig{} : read_scoring_config(config_path);
  CostLedger ledger = score_stream(config, events_path);
  if (ledger.unsorted_input_warning)
    std::cerr << "warning: alerts were not time-ordered; sorted internally\n";
  say("data        = " + money(ledger.data_cost));
  say("triage      = " + money(ledger.triage_cost));
  say("remediation = " + money(ledger.remediation_cost));
  say("breach      = " + money(ledger.breach_cost));
  say("total       = " + money(ledger.total));
  say("true_positives = " + std::to_string(ledger.true_positives));
  say("false_positives = " + std::to_string(ledger.false_positives));
  if (!csv.empty()) write_text(csv, ledger_csv(ledger));
  return 0;
}

// ---- simulate --------------------------------------------------------------

struct SimulateArgs {
  std::string strategy = "null";
  int attacks = 12;
  int runs = 1000;
  std::uint64_t seed = 1;
  std::string csv;
  std::string emit_events;
};

int cmd_simulate(const SimulateArgs& args) {
  DetectorStrategy strategy;
  if (args.strategy.find(".json") != std::string::npos ||
      args.strategy.find('/') != std::string::npos)
    strategy = read_strategy_file(args.strategy);
  else
    strategy = builtin_strategy(args.strategy);

  Scenario scenario;
  scenario.n_attacks = args.attacks;

  SimResult r =
      simulate(strategy, scenario, args.runs, args.seed, args.emit_events);
  say("strategy  = " + r.strategy);
  say("runs      = " + std::to_string(r.runs));
  say("mean_cost = " + money(r.mean_cost));
  say("std_cost  = " + money(r.std_cost));
  say("rng       = splitmix64(seed=" + std::to_string(args.seed) + ")");
  say("standard  : " + metrics_csv_row(r.strategy,
                                       std::to_string(args.attacks) + "-attack",
                                       "standard", r.standard_metrics));
  say("ctu       : " + metrics_csv_row(r.strategy,
                                       std::to_string(args.attacks) + "-attack",
                                       "ctu", r.ctu_metrics));
  if (!args.csv.empty()) {
    std::ostringstream os;
    os << metrics_csv_header() << ",mean_cost,std_cost,runs\n";
    os << metrics_csv_row(r.strategy, std::to_string(args.attacks) + "-attack",
                          "standard", r.standard_metrics)
       << ',' << money(r.mean_cost) << ',' << money(r.std_cost) << ','
       << r.runs << "\n";
    os << metrics_csv_row(r.strategy, std::to_string(args.attacks) + "-attack",
                          "ctu", r.ctu_metrics)
       << ',' << money(r.mean_cost) << ',' << money(r.std_cost) << ','
       << r.runs << "\n";
    write_text(args.csv, os.str());
  }
  return 0;
}

// ---- metrics ---------------------------------------------------------------

int cmd_metrics(const std::string& windows_path, double alpha,
                const std::string& csv) {
  std::ifstream in(windows_path);
  if (!in) throw ParseError("cannot open windows file: " + windows_path);
  TimeDependentTotals td;
  StandardTotals std_totals;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      WindowCounts w;
      w.i = j.at("i").get<long>();
      w.c_tp = j.at("c_tp").get<long>();
      w.c_fp = j.at("c_fp").get<long>();
      w.c_tn = j.at("c_tn").get<long>();
      w.c_fn = j.at("c_fn").get<long>();
      w.n_b = j.at("n_b").get<long>();
      w.n_n = j.at("n_n").get<long>();
      td.add(w, alpha);
      std_totals += StandardTotals{w.c_tp, w.c_fp, w.c_tn, w.c_fn};
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("malformed window at line " + std::to_string(lineno) +
                           ": " + e.what(),
                       lineno);
    }
  }
  std::ostringstream os;
  os << metrics_csv_header() << "\n";
  os << metrics_csv_row("-", "-", "standard", derive_metrics(std_totals)) << "\n";
  os << metrics_csv_row("-", "-", "ctu", derive_metrics(td)) << "\n";
  say(os.str());
  if (!csv.empty()) write_text(csv, os.str());
  return 0;
}

// ---- report ----------------------------------------------------------------

int cmd_report(const std::string& scenario) {
  if (scenario == "graphprints") {
    std::cout << render_report(graphprints_report());
    return 0;
  }
  if (scenario == "ponemon") {
    ScenarioBundle b = ponemon_bundle();
    SCurve curve = fit_s_curve(*b.fit_constraints);
    std::cout << "Ponemon breach-cost fit\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "  b = %.2f\n  alpha = %.6g\n", curve.b,
                  curve.alpha);
    std::cout << buf;
    for (const auto& n : b.notes) std::cout << "  note: " << n << "\n";
    return 0;
  }
  if (scenario == "virtue") {
    ScenarioBundle b = virtue_bundle();
    std::cout << "VirtUE competition scoring configuration\n"
              << to_json(*b.scoring).dump(2) << "\n";
    return 0;
  }
  // A bundle file: rates + usage (+ optional precomputed breach costs).
  std::ifstream in(scenario);
  if (!in) throw ParseError("unknown scenario or unreadable file: " + scenario);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid bundle JSON in " + scenario + ": " + e.what());
  }
  ScenarioBundle b;
  b.name = j.value("name", scenario);
  if (j.contains("labor")) b.labor = labor_rates_from_json(j.at("labor"));
  if (j.contains("resources"))
    b.resources = resource_rates_from_json(j.at("resources"));
  if (j.contains("usage")) {
    b.usage.elapsed = j.at("usage").value("elapsed", 0.0);
    b.usage.n_alerts = j.at("usage").value("n_alerts", 0L);
    if (j.at("usage").contains("incidents"))
      b.usage.incident_durations =
          j.at("usage").at("incidents").get<std::vector<double>>();
  }
  if (j.contains("breach_costs"))
    b.breach_costs = j.at("breach_costs").get<std::vector<double>>();
  if (j.contains("notes"))
    b.notes = j.at("notes").get<std::vector<std::string>>();
  std::cout << render_bundle_report(b);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"seceval: cost-based security evaluation toolkit"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  app.add_flag("--quiet", g_quiet, "suppress informational output");
  app.add_option("--seed", seed, "global RNG seed");

  // fit
  FitArgs fit_args;
  auto* fit = app.add_subcommand("fit", "fit an S-curve breach-cost model");
  fit->add_option("--detect-time", fit_args.detect_time, "mean detection time")
      ->required();
  fit->add_option("--window", fit_args.window, "containment window")->required();
  fit->add_option("--early-avg", fit_args.early_avg,
                  "mean cost when contained within the window")
      ->required();
  fit->add_option("--late-avg", fit_args.late_avg, "long-run average cost")
      ->required();
  fit->add_option("--csv", fit_args.csv, "write (t, cost) samples");
  fit->add_option("--samples", fit_args.samples, "sample count for --csv");
  fit->add_option("--t-max", fit_args.t_max, "sample range for --csv");

  // score
  std::string score_config, score_events, score_csv;
  auto* score = app.add_subcommand("score", "score an event log");
  score->add_option("--config", score_config, "scoring config JSON");
  score->add_option("--events", score_events, "JSONL event log")->required();
  score->add_option("--csv", score_csv, "write the itemized ledger");

  // simulate
  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo detector simulation");
  sim->add_option("--strategy", sim_args.strategy,
                  "builtin strategy name or JSON file");
  sim->add_option("--attacks", sim_args.attacks, "attacks per run");
  sim->add_option("--runs", sim_args.runs, "number of runs");
  sim->add_option("--csv", sim_args.csv, "write metrics + cost CSV");
  sim->add_option("--emit-events", sim_args.emit_events,
                  "write per-run event logs to this directory");

  // metrics
  std::string metrics_windows, metrics_csv_path;
  double metrics_alpha = 1.0;
  auto* met = app.add_subcommand("metrics", "derive metrics from window counts");
  met->add_option("--windows", metrics_windows, "JSONL window-count records")
      ->required();
  met->add_option("--alpha", metrics_alpha, "time-weighting parameter");
  met->add_option("--csv", metrics_csv_path, "write metric rows");

  // econ
  auto* econ = app.add_subcommand("econ", "economic baseline scores");
  econ->require_subcommand(1);

  std::vector<double> ale_impacts, ale_freqs;
  auto* e_ale = econ->add_subcommand("ale", "annual loss expectancy");
  e_ale->add_option("--impact", ale_impacts, "per-attack impact, repeatable")
      ->required();
  e_ale->add_option("--frequency", ale_freqs, "per-attack frequency, repeatable")
      ->required();

  double rosi_ale = 0, rosi_m = 0, rosi_cost = 0;
  auto* e_rosi = econ->add_subcommand("rosi", "return on security investment");
  e_rosi->add_option("--ale", rosi_ale)->required();
  e_rosi->add_option("--mitigation", rosi_m)->required();
  e_rosi->add_option("--cost", rosi_cost)->required();

  double glb_loss = 0, glb_spend = -1;
  auto* e_glb = econ->add_subcommand("gl-bound", "1/e spending bound");
  e_glb->add_option("--loss", glb_loss)->required();
  e_glb->add_option("--check-spend", glb_spend, "also check a spend level");

  double glo_loss = 0, glo_v = 0, glo_a = 0;
  auto* e_glo =
      econ->add_subcommand("gl-optimal", "optimal spend, exponential family");
  e_glo->add_option("--loss", glo_loss)->required();
  e_glo->add_option("--likelihood", glo_v)->required();
  e_glo->add_option("--efficacy", glo_a)->required();

  std::string ictf_file;
  double ictf_dt = 1.0;
  auto* e_ictf = econ->add_subcommand("ictf", "normalized attacker toxicity");
  e_ictf->add_option("--series", ictf_file,
                     "CSV of attack,critical,detected rows")
      ->required();
  e_ictf->add_option("--dt", ictf_dt, "window length");

  double mit_c = 0, mit_i = 0, mit_a = 0, mit_o = 0;
  CIAWeights mit_w;
  auto* e_mit = econ->add_subcommand("mitll", "weighted CIA + offense score");
  e_mit->add_option("--confidentiality", mit_c)->required();
  e_mit->add_option("--integrity", mit_i)->required();
  e_mit->add_option("--availability", mit_a)->required();
  e_mit->add_option("--offense", mit_o)->required();
  e_mit->add_option("--w-c", mit_w.w_c);
  e_mit->add_option("--w-i", mit_w.w_i);
  e_mit->add_option("--w-a", mit_w.w_a);
  e_mit->add_option("--w-d", mit_w.w_d);

  double cgc_avail = 0;
  bool cgc_exploited = false;
  int cgc_x = 0, cgc_n = 6;
  auto* e_cgc = econ->add_subcommand("cgc", "round score");
  e_cgc->add_option("--availability", cgc_avail)->required();
  e_cgc->add_flag("--exploited", cgc_exploited);
  e_cgc->add_option("--exploits-landed", cgc_x);
  e_cgc->add_option("--opponents", cgc_n);

  // report
  std::string report_scenario;
  auto* rep = app.add_subcommand("report", "itemized scenario cost report");
  rep->add_option("--scenario", report_scenario,
                  "ponemon | virtue | graphprints | bundle file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fit) return cmd_fit(fit_args);
    if (*score) return cmd_score(score_config, score_events, score_csv);
    if (*sim) {
      sim_args.seed = seed;
      return cmd_simulate(sim_args);
    }
    if (*met) return cmd_metrics(metrics_windows, metrics_alpha, metrics_csv_path);
    if (*rep) return cmd_report(report_scenario);
    if (*econ) {
      char buf[64];
      if (*e_ale) {
        if (ale_impacts.size() != ale_freqs.size())
          throw ValidationError("ale: --impact and --frequency count mismatch");
        std::vector<std::pair<double, double>> events;
        for (std::size_t i = 0; i < ale_impacts.size(); ++i)
          events.emplace_back(ale_impacts[i], ale_freqs[i]);
        std::snprintf(buf, sizeof(buf), "ale = %.2f\n", ale(events));
        std::cout << buf;
      } else if (*e_rosi) {
        std::snprintf(buf, sizeof(buf), "rosi = %.6f\n",
                      rosi(rosi_ale, rosi_m, rosi_cost));
        std::cout << buf;
      } else if (*e_glb) {
        std::snprintf(buf, sizeof(buf), "gl_bound = %.2f\n", gl_bound(glb_loss));
        std::cout << buf;
        if (glb_spend >= 0)
          std::cout << "gl_check = "
                    << (gl_check(glb_spend, glb_loss) ? "pass" : "fail") << "\n";
      } else if (*e_glo) {
        GLModel model{glo_loss, glo_v, glo_a};
        std::snprintf(buf, sizeof(buf), "z_star = %.2f\n",
                      gl_optimal_exponential(model));
        std::cout << buf;
      } else if (*e_ictf) {
        std::ifstream in(ictf_file);
        if (!in) throw ParseError("cannot open series file: " + ictf_file);
        std::vector<IctfSample> series;
        std::string line;
        while (std::getline(in, line)) {
          if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
          IctfSample s;
          if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &s.attack, &s.critical,
                          &s.detected) != 3)
            throw ParseError("malformed series row: " + line);
          series.push_back(s);
        }
        std::snprintf(buf, sizeof(buf), "toxicity = %.6f\n",
                      ictf_toxicity(series, ictf_dt));
        std::cout << buf;
      } else if (*e_mit) {
        std::snprintf(buf, sizeof(buf), "score = %.6f\n",
                      mitll_score(mit_c, mit_i, mit_a, mit_o, mit_w));
        std::cout << buf;
      } else if (*e_cgc) {
        std::snprintf(buf, sizeof(buf), "round_score = %.2f\n",
                      cgc_round_score(cgc_avail, cgc_exploited, cgc_x, cgc_n));
        std::cout << buf;
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
