#include "seceval/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace seceval {

void WindowCounts::validate() const {
  if (i < 0 || c_tp < 0 || c_fp < 0 || c_tn < 0 || c_fn < 0 || n_b < 0 || n_n < 0)
    throw ValidationError("WindowCounts: all fields must be >= 0");
  if (c_tp + c_fn > n_b)
    throw ValidationError("WindowCounts: c_tp + c_fn exceeds n_b");
  if (c_tn + c_fp > n_n)
    throw ValidationError("WindowCounts: c_tn + c_fp exceeds n_n");
}

double correcting_function(double alpha, long i) {
  if (!(alpha > 0.0)) throw DomainError("correcting_function: alpha must be > 0");
  if (i < 0) throw DomainError("correcting_function: i must be >= 0");
  return std::exp(-alpha * static_cast<double>(i)) + 1.0;
}

namespace {

double ratio(long count, long denom, const char* what) {
  if (count == 0) return 0.0;
  if (denom == 0) throw DataError(std::string("time_dependent_counts: nonzero ") +
                                  what + " with zero denominator");
  return static_cast<double>(count) / static_cast<double>(denom);
}

}  // namespace

TimeDependentCounts time_dependent_counts(const WindowCounts& w, double alpha) {
  const double corr = correcting_function(alpha, w.i);
  TimeDependentCounts out;
  out.tp = ratio(w.c_tp, w.n_b, "c_tp") * corr;
  out.fn = ratio(w.c_fn, w.n_b, "c_fn") * corr;
  out.tn = ratio(w.c_tn, w.n_n, "c_tn");
  out.fp = ratio(w.c_fp, w.n_n, "c_fp");
  return out;
}

void TimeDependentTotals::add(const WindowCounts& w, double alpha) {
  const TimeDependentCounts c = time_dependent_counts(w, alpha);
  tp += c.tp;
  fn += c.fn;
  tn += c.tn;
  fp += c.fp;
}

TimeDependentTotals& TimeDependentTotals::operator+=(const TimeDependentTotals& o) {
  tp += o.tp;
  fn += o.fn;
  tn += o.tn;
  fp += o.fp;
  return *this;
}

StandardTotals& StandardTotals::operator+=(const StandardTotals& o) {
  tp += o.tp;
  fp += o.fp;
  tn += o.tn;
  fn += o.fn;
  return *this;
}

MetricSet derive_metrics(double tp, double fp, double tn, double fn) {
  auto rate = [](double num, double den) -> std::optional<double> {
    if (den == 0.0) return std::nullopt;
    return num / den;
  };
  MetricSet m;
  m.tpr = rate(tp, tp + fn);
  m.fnr = rate(fn, tp + fn);
  m.fpr = rate(fp, fp + tn);
  m.tnr = rate(tn, fp + tn);
  m.precision = rate(tp, tp + fp);
  m.accuracy = rate(tp + tn, tp + tn + fp + fn);
  m.error_rate = rate(fp + fn, tp + tn + fp + fn);
  if (m.precision && m.tpr && (*m.precision + *m.tpr) > 0.0)
    m.f1 = 2.0 * *m.precision * *m.tpr / (*m.precision + *m.tpr);
  return m;
}

MetricSet derive_metrics(const TimeDependentTotals& t) {
  return derive_metrics(t.tp, t.fp, t.tn, t.fn);
}

MetricSet derive_metrics(const StandardTotals& t) {
  return derive_metrics(static_cast<double>(t.tp), static_cast<double>(t.fp),
                        static_cast<double>(t.tn), static_cast<double>(t.fn));
}

std::string metrics_csv_header() {
  return "strategy,scenario,family,tpr,fpr,tnr,fnr,precision,accuracy,"
         "error_rate,f1";
}

namespace {

std::string cell(const std::optional<double>& v) {
  if (!v) return "N/A";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", *v);
  return buf;
}

}  // namespace

std::string metrics_csv_row(const std::string& strategy,
                            const std::string& scenario,
                            const std::string& family, const MetricSet& m) {
  std::ostringstream os;
  os << strategy << ',' << scenario << ',' << family << ',' << cell(m.tpr)
     << ',' << cell(m.fpr) << ',' << cell(m.tnr) << ',' << cell(m.fnr) << ','
     << cell(m.precision) << ',' << cell(m.accuracy) << ','
     << cell(m.error_rate) << ',' << cell(m.f1);
  return os.str();
}

}  // namespace seceval
