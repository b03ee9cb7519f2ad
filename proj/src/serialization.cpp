#include "seceval/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace seceval {

using nlohmann::json;

nlohmann::json to_json(const SCurve& curve) {
  return json{{"kind", "s_curve"}, {"b", curve.b}, {"alpha", curve.alpha}};
}

nlohmann::json to_json(const PhaseCurve& curve, double start) {
  return json{{"kind", "phase"},
              {"a", curve.a},
              {"b", curve.b},
              {"alpha", curve.alpha},
              {"start", start}};
}

SCurve s_curve_from_json(const json& j) {
  if (j.value("kind", "") != "s_curve")
    throw ParseError("expected curve kind \"s_curve\"");
  return SCurve{j.at("b").get<double>(), j.at("alpha").get<double>()};
}

BreachCurve breach_curve_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("breach curve must be an array of phases");
  std::vector<std::pair<double, PhaseCurve>> phases;
  for (const auto& p : j) {
    if (p.value("kind", "") != "phase")
      throw ParseError("expected curve kind \"phase\"");
    phases.emplace_back(p.at("start").get<double>(),
                        PhaseCurve{p.at("a").get<double>(),
                                   p.at("b").get<double>(),
                                   p.at("alpha").get<double>()});
  }
  return BreachCurve{std::move(phases)};
}

nlohmann::json to_json(const LaborRates& rates) {
  json j{{"initial_analyst", rates.initial_analyst},
         {"initial_user", rates.initial_user},
         {"baseline_analyst_rate", rates.baseline_analyst_rate},
         {"baseline_user_rate", rates.baseline_user_rate},
         {"triage_per_alert", rates.triage_per_alert}};
  if (rates.ir_model.is_flat())
    j["ir_flat_fee"] = rates.ir_model.flat_fee();
  else
    j["ir_curve"] = to_json(*rates.ir_model.s_curve());
  return j;
}

LaborRates labor_rates_from_json(const json& j) {
  LaborRates r;
  r.initial_analyst = j.value("initial_analyst", 0.0);
  r.initial_user = j.value("initial_user", 0.0);
  r.baseline_analyst_rate = j.value("baseline_analyst_rate", 0.0);
  r.baseline_user_rate = j.value("baseline_user_rate", 0.0);
  r.triage_per_alert = j.value("triage_per_alert", 0.0);
  if (j.contains("ir_curve"))
    r.ir_model = IncidentResponseModel::curve(s_curve_from_json(j.at("ir_curve")));
  else
    r.ir_model = IncidentResponseModel::flat(j.value("ir_flat_fee", 0.0));
  r.validate();
  return r;
}

namespace {
constexpr const char* kBaselineNames[8] = {"licensing", "storage", "cpu",
                                           "memory",    "disk_io", "bandwidth",
                                           "space",     "power"};
constexpr const char* kTriageNames[3] = {"storage", "disk_io", "bandwidth"};
}  // namespace

nlohmann::json to_json(const ResourceRates& rates) {
  json baseline, triage;
  for (int i = 0; i < 8; ++i) baseline[kBaselineNames[i]] = rates.baseline[i];
  for (int i = 0; i < 3; ++i) triage[kTriageNames[i]] = rates.triage[i];
  return json{{"licensing_initial", rates.licensing_initial},
              {"baseline", baseline},
              {"triage", triage}};
}

ResourceRates resource_rates_from_json(const json& j) {
  ResourceRates r;
  r.licensing_initial = j.value("licensing_initial", 0.0);
  if (j.contains("baseline"))
    for (int i = 0; i < 8; ++i)
      r.baseline[i] = j.at("baseline").value(kBaselineNames[i], 0.0);
  if (j.contains("triage"))
    for (int i = 0; i < 3; ++i)
      r.triage[i] = j.at("triage").value(kTriageNames[i], 0.0);
  r.validate();
  return r;
}

nlohmann::json to_json(const ScoringConfig& config) {
  return json{{"data_rate", config.data_rate},
              {"triage_fee", config.triage_fee},
              {"remediation_fee", config.remediation_fee},
              {"attack_curve", to_json(config.attack_curve)},
              {"duration", config.duration},
              {"n_classes", config.n_classes},
              {"entities", config.entities}};
}

ScoringConfig scoring_config_from_json(const json& j) {
  ScoringConfig c;
  c.data_rate = j.value("data_rate", c.data_rate);
  c.triage_fee = j.value("triage_fee", c.triage_fee);
  c.remediation_fee = j.value("remediation_fee", c.remediation_fee);
  if (j.contains("attack_curve"))
    c.attack_curve = s_curve_from_json(j.at("attack_curve"));
  c.duration = j.value("duration", c.duration);
  c.n_classes = j.value("n_classes", c.n_classes);
  if (j.contains("entities"))
    c.entities = j.at("entities").get<std::vector<std::string>>();
  c.validate();
  return c;
}

ScoringConfig read_scoring_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid config JSON in " + path + ": " + e.what());
  }
  return scoring_config_from_json(j);
}

EventLog parse_event_log(const std::string& text) {
  EventLog log;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
      const std::string type = j.at("type").get<std::string>();
      if (type == "attack") {
        log.attacks.push_back(AttackRecord{j.at("entity").get<std::string>(),
                                           j.at("class").get<int>(),
                                           j.at("start").get<double>(),
                                           std::nullopt});
      } else if (type == "alert") {
        log.alerts.push_back(AlertEvent{j.at("time").get<double>(),
                                        j.at("entity").get<std::string>(),
                                        j.at("class").get<int>()});
      } else if (type == "data") {
        log.data.push_back(DataUsageEvent{j.at("time").get<double>(),
                                          j.at("megabytes").get<double>()});
      } else {
        throw ParseError("unknown event type \"" + type + "\" at line " +
                             std::to_string(lineno),
                         lineno);
      }
    } catch (const json::exception& e) {
      throw ParseError("malformed event at line " + std::to_string(lineno) +
                           ": " + e.what(),
                       lineno);
    }
  }
  return log;
}

EventLog read_event_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open event log: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_event_log(buf.str());
}

void write_event_log(const EventLog& log, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write event log: " + path);
  for (const auto& a : log.attacks)
    out << json{{"type", "attack"},
                {"entity", a.entity},
                {"class", a.attack_class},
                {"start", a.start}}
            .dump()
        << '\n';
  for (const auto& d : log.data)
    out << json{{"type", "data"}, {"time", d.time}, {"megabytes", d.megabytes}}
            .dump()
        << '\n';
  for (const auto& al : log.alerts)
    out << json{{"type", "alert"},
                {"time", al.time},
                {"entity", al.entity},
                {"class", al.attack_class}}
            .dump()
        << '\n';
}

namespace {

const char* kind_name(ChargeRow::Kind k) {
  switch (k) {
    case ChargeRow::Kind::Data: return "data";
    case ChargeRow::Kind::Triage: return "triage";
    case ChargeRow::Kind::Remediation: return "remediation";
    case ChargeRow::Kind::Breach: return "breach";
  }
  return "?";
}

}  // namespace

std::string ledger_csv(const CostLedger& ledger) {
  std::ostringstream os;
  os << "kind,time,cause,amount\n";
  char buf[64];
  for (const auto& row : ledger.rows) {
    std::snprintf(buf, sizeof(buf), "%.4f", row.time);
    os << kind_name(row.kind) << ',' << buf << ",\"" << row.cause << "\",";
    std::snprintf(buf, sizeof(buf), "%.2f", row.amount);
    os << buf << '\n';
  }
  std::snprintf(buf, sizeof(buf), "%.2f", ledger.total);
  os << "total,,," << buf << '\n';
  return os.str();
}

}  // namespace seceval
