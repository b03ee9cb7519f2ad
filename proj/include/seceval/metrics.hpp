#pragma once

#include <optional>
#include <string>

#include "seceval/errors.hpp"

namespace seceval {

/// Per-window confusion counts over entities (attack entities vs normal).
struct WindowCounts {
  long i = 0;     // window index
  long c_tp = 0;
  long c_fp = 0;
  long c_tn = 0;
  long c_fn = 0;
  long n_b = 0;   // attack entities present in the window
  long n_n = 0;   // normal entities present in the window

  void validate() const;
};

/// e^(-alpha i) + 1, in (1, 2]; weights early windows more heavily.
double correcting_function(double alpha, long i);

struct TimeDependentCounts {
  double tp = 0.0;
  double fn = 0.0;
  double tn = 0.0;
  double fp = 0.0;
};

/// Time-dependent per-window quantities: tp and fn scaled by the correcting
/// function and normalized by the attack-entity count, tn and fp normalized
/// by the normal-entity count (time has no effect on negatives).
/// Throws DataError on a nonzero count with a zero denominator.
TimeDependentCounts time_dependent_counts(const WindowCounts& w, double alpha);

/// Accumulated time-dependent totals; merge is associative and commutative.
struct TimeDependentTotals {
  double tp = 0.0;
  double fn = 0.0;
  double tn = 0.0;
  double fp = 0.0;

  void add(const WindowCounts& w, double alpha);
  TimeDependentTotals& operator+=(const TimeDependentTotals& o);
};

/// Plain micro-averaged confusion totals.
struct StandardTotals {
  long tp = 0;
  long fp = 0;
  long tn = 0;
  long fn = 0;

  StandardTotals& operator+=(const StandardTotals& o);
};

/// Derived rate metrics; metrics with zero denominators are left unset
/// (reported as N/A) rather than forced to a number.
struct MetricSet {
  std::optional<double> tpr, fpr, tnr, fnr, precision, accuracy, error_rate, f1;
};

MetricSet derive_metrics(double tp, double fp, double tn, double fn);
MetricSet derive_metrics(const TimeDependentTotals& t);
MetricSet derive_metrics(const StandardTotals& t);

/// Fixed-column CSV row:
/// strategy,scenario,family,TPR,FPR,TNR,FNR,precision,accuracy,error_rate,f1
std::string metrics_csv_header();
std::string metrics_csv_row(const std::string& strategy,
                            const std::string& scenario,
                            const std::string& family, const MetricSet& m);

}  // namespace seceval
