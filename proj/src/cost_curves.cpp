#include "seceval/cost_curves.hpp"

#include <cmath>
#include <string>

namespace seceval {

PhaseCurve::PhaseCurve(double a, double b, double alpha)
    : a(a), b(b), alpha(alpha) {
  if (!(a > 0.0)) throw ValidationError("PhaseCurve: a must be > 0");
  if (!(b >= a)) throw ValidationError("PhaseCurve: b must be >= a");
  if (!(alpha > 0.0)) throw ValidationError("PhaseCurve: alpha must be > 0");
}

BreachCurve::BreachCurve(std::vector<std::pair<double, PhaseCurve>> phases_in)
    : phases(std::move(phases_in)) {
  for (std::size_t i = 1; i < phases.size(); ++i) {
    if (phases[i].first < phases[i - 1].first)
      throw ValidationError("BreachCurve: phase start times must be non-decreasing");
  }
}

SCurve::SCurve(double b, double alpha) : b(b), alpha(alpha) {
  if (!(b > 0.0)) throw ValidationError("SCurve: b must be > 0");
  if (!(alpha > 0.0)) throw ValidationError("SCurve: alpha must be > 0");
}

BreachFitConstraints::BreachFitConstraints(double detect_time, double window,
                                           double early_avg, double late_avg)
    : detect_time(detect_time),
      window(window),
      early_avg(early_avg),
      late_avg(late_avg) {
  if (!(detect_time > 0.0) || !(window > 0.0) || !(early_avg > 0.0) ||
      !(late_avg > 0.0))
    throw ValidationError("BreachFitConstraints: all fields must be positive");
  if (!(late_avg >= early_avg))
    throw ValidationError("BreachFitConstraints: late_avg must be >= early_avg");
}

double phase_cost(const PhaseCurve& curve, double t) {
  if (t < 0.0) t = 0.0;
  return curve.b / (1.0 + curve.c() * std::exp(-curve.alpha * t));
}

double breach_cost(const BreachCurve& curve, double t) {
  double total = 0.0;
  for (const auto& [start, phase] : curve.phases) {
    if (start <= t) total += phase_cost(phase, t - start);
  }
  return total;
}

double s_curve_cost(const SCurve& curve, double t) {
  if (t <= 0.0) return 0.0;
  return curve.b * std::exp(-curve.alpha / (t * t));
}

double s_curve_marginal(const SCurve& curve, double t) {
  if (t <= 0.0)
    throw DomainError("s_curve_marginal: t must be > 0");
  return 2.0 * curve.alpha * curve.b * std::exp(-curve.alpha / (t * t)) /
         (t * t * t);
}

namespace {

// Composite Simpson over [lo, hi] with an even subinterval count n.
double simpson(const SCurve& curve, double lo, double hi, int n) {
  const double h = (hi - lo) / n;
  double sum = s_curve_cost(curve, lo) + s_curve_cost(curve, hi);
  for (int i = 1; i < n; ++i) {
    const double x = lo + i * h;
    sum += (i % 2 == 1 ? 4.0 : 2.0) * s_curve_cost(curve, x);
  }
  return sum * h / 3.0;
}

double window_average(double b, double alpha, const BreachFitConstraints& k) {
  const SCurve curve{b, alpha};
  // step = window/100 satisfies the <= 0.01 * window requirement
  return simpson(curve, k.detect_time, k.detect_time + k.window, 100) / k.window;
}

}  // namespace

double fit_residual(const SCurve& curve, const BreachFitConstraints& k) {
  return (window_average(curve.b, curve.alpha, k) - k.early_avg) / k.early_avg;
}

SCurve fit_s_curve(const BreachFitConstraints& k) {
  if (k.early_avg > k.late_avg)
    throw FitError("fit_s_curve: early_avg exceeds late_avg, no root");

  const double b = k.late_avg;
  // g(alpha) = window_average - early_avg is strictly decreasing in alpha,
  // positive at alpha -> 0 when early_avg < late_avg.
  double lo = 1e-6;
  double hi = 1e9;
  const double g_lo = window_average(b, lo, k) - k.early_avg;
  const double g_hi = window_average(b, hi, k) - k.early_avg;
  if (g_lo <= 0.0) {
    // Degenerate: early_avg at (or numerically at) late_avg; the root sits
    // below the bracket.  Report near-zero alpha when the residual is tiny.
    if (std::fabs(g_lo) / k.early_avg < 1e-6) return SCurve{b, lo};
    throw FitError("fit_s_curve: no root above the lower bracket bound");
  }
  if (g_hi >= 0.0)
    throw FitError("fit_s_curve: bracket exhausted at upper bound");

  for (int iter = 0; iter < 200 && (hi - lo) > 1e-9 * lo; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (window_average(b, mid, k) - k.early_avg > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double alpha = 0.5 * (lo + hi);
  const SCurve fitted{b, alpha};
  if (std::fabs(fit_residual(fitted, k)) >= 1e-6)
    throw FitError("fit_s_curve: residual did not converge");
  return fitted;
}

}  // namespace seceval
