#include "seceval/econ_scores.hpp"

#include <cmath>

namespace seceval {

GLModel::GLModel(double loss, double likelihood, double efficacy)
    : loss(loss), likelihood(likelihood), efficacy(efficacy) {
  if (!(loss > 0.0)) throw ValidationError("GLModel: loss must be > 0");
  if (!(likelihood > 0.0) || likelihood > 1.0)
    throw ValidationError("GLModel: likelihood must be in (0, 1]");
  if (!(efficacy > 0.0)) throw ValidationError("GLModel: efficacy must be > 0");
}

void CIAWeights::validate() const {
  if (w_c < 0 || w_i < 0 || w_a < 0)
    throw ValidationError("CIAWeights: weights must be >= 0");
  if (w_d < 0.0 || w_d > 1.0)
    throw ValidationError("CIAWeights: w_d must be in [0, 1]");
}

double ale(const std::vector<std::pair<double, double>>& events) {
  double sum = 0.0;
  for (const auto& [impact, frequency] : events) {
    if (impact < 0 || frequency < 0)
      throw ValidationError("ale: impacts and frequencies must be >= 0");
    sum += impact * frequency;
  }
  return sum;
}

double rosi(double ale_value, double mitigation, double cost) {
  if (cost == 0.0) throw DomainError("rosi: cost must be nonzero");
  if (mitigation < 0.0 || mitigation > 1.0)
    throw ValidationError("rosi: mitigation must be in [0, 1]");
  return (ale_value * mitigation - cost) / cost;
}

double gl_bound(double loss) {
  if (loss < 0.0) throw ValidationError("gl_bound: loss must be >= 0");
  return loss / std::exp(1.0);
}

bool gl_check(double spend, double loss) { return spend <= gl_bound(loss); }

double gl_optimal_exponential(const GLModel& m) {
  // Expected cost s(z) L + z; interior minimum at s'(z) L = -1, i.e.
  // z* = ln(a v L)/a, valid only when a v L > 1.
  const double avl = m.efficacy * m.likelihood * m.loss;
  if (avl <= 1.0) return 0.0;
  return std::log(avl) / m.efficacy;
}

double ictf_toxicity(const std::vector<IctfSample>& series, double dt) {
  if (series.empty()) throw ValidationError("ictf_toxicity: empty series");
  if (!(dt > 0.0)) throw ValidationError("ictf_toxicity: dt must be > 0");
  double toxicity = 0.0;
  double optimal = 0.0;
  for (const auto& s : series) {
    if (s.attack < 0.0 || s.attack > 1.0)
      throw ValidationError("ictf_toxicity: attack must be in [0, 1]");
    const double cd = s.critical - s.detected;
    toxicity += s.attack * cd * dt;
    if (cd > 0.0) optimal += cd * dt;
  }
  if (optimal == 0.0) return 0.0;
  return toxicity / optimal;
}

double mitll_score(double c, double i, double a, double offense,
                   const CIAWeights& w) {
  w.validate();
  for (double v : {c, i, a, offense})
    if (v < 0.0 || v > 1.0)
      throw ValidationError("mitll_score: fractions must be in [0, 1]");
  const double defense = w.w_c * c + w.w_i * i + w.w_a * a;
  return w.w_d * defense + (1.0 - w.w_d) * offense;
}

double cgc_round_score(double availability, bool exploited, int x,
                       int n_opponents) {
  if (availability < 0.0 || availability > 100.0)
    throw ValidationError("cgc_round_score: availability must be in [0, 100]");
  if (n_opponents <= 0)
    throw ValidationError("cgc_round_score: n_opponents must be > 0");
  if (x < 0 || x > n_opponents)
    throw ValidationError("cgc_round_score: x must be in [0, n_opponents]");
  const double security = exploited ? 1.0 : 2.0;
  const double evaluation =
      1.0 + static_cast<double>(x) / static_cast<double>(n_opponents);
  return availability * security * evaluation;
}

}  // namespace seceval
