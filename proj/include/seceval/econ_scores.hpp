#pragma once

#include <utility>
#include <vector>

#include "seceval/errors.hpp"

namespace seceval {

/// Gordon-Loeb model with the exponential breach-probability family
/// s(z) = v * exp(-a z).
struct GLModel {
  double loss;        // L, dollars
  double likelihood;  // v, baseline attack probability
  double efficacy;    // a, 1/dollars

  GLModel(double loss, double likelihood, double efficacy);
};

/// Offense/defense weighting for the CIA-style competition score.
struct CIAWeights {
  double w_c = 1.0;
  double w_i = 1.0;
  double w_a = 1.0;
  double w_d = 0.5;  // defense/offense tradeoff, in (0,1)

  void validate() const;
};

/// Annual loss expectancy: sum of impact * frequency over attack types.
double ale(const std::vector<std::pair<double, double>>& events);

/// Return on security investment, (ale * mitigation - cost) / cost.
/// Throws DomainError when cost is 0.
double rosi(double ale_value, double mitigation, double cost);

/// The 1/e spending bound: optimal security spend never exceeds L / e.
double gl_bound(double loss);

/// True when a spend z respects the 1/e bound for loss L.
bool gl_check(double spend, double loss);

/// Optimal spend for the exponential family: ln(a v L)/a when a v L > 1,
/// otherwise 0 (no interior optimum; spend nothing).
double gl_optimal_exponential(const GLModel& model);

/// One discretization window of the attacker-effectiveness integral.
struct IctfSample {
  double attack;      // A in [0,1]
  double critical;    // C in {0,1}
  double detected;    // D in {0,1}
};

/// Normalized toxicity: T/Z with T = sum A (C-D) dt and Z the same integral
/// for the optimal attacker (A = 1 exactly where C-D > 0).  Returns 0 when
/// the optimal attacker scores 0.
double ictf_toxicity(const std::vector<IctfSample>& series, double dt);

/// Weighted confidentiality/integrity/availability defense score blended
/// with an offense fraction.
double mitll_score(double c, double i, double a, double offense,
                   const CIAWeights& w);

/// Product of availability, security (2 or 1 if exploited), and evaluation
/// (1 + x/n_opponents) subscores for one round.
double cgc_round_score(double availability, bool exploited, int x,
                       int n_opponents);

}  // namespace seceval
