#pragma once

#include <utility>
#include <vector>

#include "seceval/errors.hpp"

namespace seceval {

/// Logistic cost-versus-time model for a single attack phase.
/// Cost starts at `a` dollars and rises toward the asymptote `b`;
/// `alpha` (1/time) controls how fast the maximum is approached.
struct PhaseCurve {
  double a;
  double b;
  double alpha;

  PhaseCurve(double a, double b, double alpha);

  /// Shape term b/a - 1, always derived so it cannot drift from a and b.
  double c() const { return b / a - 1.0; }
};

/// A whole breach as a sequence of phases, each starting at its own time.
struct BreachCurve {
  /// (start_time, curve), start times non-decreasing.  May be empty.
  std::vector<std::pair<double, PhaseCurve>> phases;

  BreachCurve() = default;
  explicit BreachCurve(std::vector<std::pair<double, PhaseCurve>> phases);
};

/// Phase-free breach cost model b * exp(-alpha / t^2), zero at t <= 0.
struct SCurve {
  double b;
  double alpha;  // time^2 units

  SCurve(double b, double alpha);
};

/// Aggregate statistics an S-curve can be fitted from: mean detection time,
/// a containment window after it, the mean cost of breaches contained within
/// that window, and the long-run asymptotic cost.
struct BreachFitConstraints {
  double detect_time;
  double window;
  double early_avg;
  double late_avg;

  BreachFitConstraints(double detect_time, double window, double early_avg,
                       double late_avg);
};

/// Cost of one phase at time t.  Negative t clamps to the t = 0 value.
double phase_cost(const PhaseCurve& curve, double t);

/// Sum of phase costs over all phases that have started by t.
double breach_cost(const BreachCurve& curve, double t);

/// S-curve breach cost; 0 for t <= 0 (continuous limit).
double s_curve_cost(const SCurve& curve, double t);

/// Derivative of s_curve_cost, 2 alpha b exp(-alpha/t^2) / t^3.
/// Throws DomainError for t <= 0.
double s_curve_marginal(const SCurve& curve, double t);

/// Fits an SCurve to aggregate constraints: b is the long-run average and
/// alpha solves
///   (1/window) * integral_{detect}^{detect+window} b e^(-alpha/x^2) dx
///     = early_avg
/// by bisection.  Throws FitError when no root exists in the bracket.
SCurve fit_s_curve(const BreachFitConstraints& constraints);

/// Residual of the fit constraint for a candidate curve, relative to
/// early_avg.  Exposed so callers can report fit quality.
double fit_residual(const SCurve& curve, const BreachFitConstraints& constraints);

}  // namespace seceval
