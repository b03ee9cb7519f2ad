#include <doctest.h>

#include <cmath>

#include "seceval/metrics.hpp"

using namespace seceval;

TEST_CASE("correcting function values and bounds") {
  CHECK(correcting_function(1.0, 0) == doctest::Approx(2.0));
  CHECK(correcting_function(1.0, 1) ==
        doctest::Approx(1.3678794411714423).epsilon(1e-12));
  for (long i = 0; i < 50; ++i) {
    const double v = correcting_function(0.7, i);
    CHECK(v > 1.0);
    CHECK(v <= 2.0);
  }
  CHECK_THROWS_AS(correcting_function(0.0, 1), DomainError);
  CHECK_THROWS_AS(correcting_function(1.0, -1), DomainError);
}

TEST_CASE("time-dependent counts scale positives and normalize both sides") {
  WindowCounts w;
  w.i = 1;
  w.c_tp = 2;
  w.c_fn = 1;
  w.c_tn = 2;
  w.c_fp = 1;
  w.n_b = 3;
  w.n_n = 3;
  TimeDependentCounts c = time_dependent_counts(w, 1.0);
  const double cf = correcting_function(1.0, 1);
  CHECK(c.tp == doctest::Approx(cf * 2.0 / 3.0));
  CHECK(c.fn == doctest::Approx(cf * 1.0 / 3.0));
  CHECK(c.tn == doctest::Approx(2.0 / 3.0));
  CHECK(c.fp == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("zero denominators: zero counts pass, nonzero counts are data errors") {
  WindowCounts empty;
  empty.n_b = 0;
  empty.n_n = 0;
  TimeDependentCounts c = time_dependent_counts(empty, 1.0);
  CHECK(c.tp == 0.0);
  CHECK(c.fp == 0.0);

  WindowCounts bad;
  bad.c_tp = 1;
  bad.n_b = 0;
  bad.n_n = 1;
  CHECK_THROWS_AS(time_dependent_counts(bad, 1.0), DataError);
}

TEST_CASE("window count consistency is validated") {
  WindowCounts w;
  w.c_tp = 2;
  w.c_fn = 2;
  w.n_b = 3;  // 2 + 2 > 3
  w.n_n = 0;
  CHECK_THROWS_AS(w.validate(), ValidationError);
  w.n_b = 4;
  CHECK_NOTHROW(w.validate());
  w.c_fp = -1;
  CHECK_THROWS_AS(w.validate(), ValidationError);
}

TEST_CASE("derived metrics on a plain confusion matrix") {
  MetricSet m = derive_metrics(8, 2, 90, 2);
  CHECK(*m.tpr == doctest::Approx(0.8));
  CHECK(*m.fpr == doctest::Approx(2.0 / 92.0));
  CHECK(*m.tnr == doctest::Approx(90.0 / 92.0));
  CHECK(*m.fnr == doctest::Approx(0.2));
  CHECK(*m.precision == doctest::Approx(0.8));
  CHECK(*m.accuracy == doctest::Approx(98.0 / 102.0));
  CHECK(*m.error_rate == doctest::Approx(4.0 / 102.0));
  CHECK(*m.f1 == doctest::Approx(0.8));
  CHECK(*m.tpr + *m.fnr == doctest::Approx(1.0));
  CHECK(*m.fpr + *m.tnr == doctest::Approx(1.0));
  CHECK(*m.accuracy + *m.error_rate == doctest::Approx(1.0));
}

TEST_CASE("undefined metrics stay unset instead of becoming numbers") {
  MetricSet m = derive_metrics(0, 0, 10, 0);  // no positives, no alerts
  CHECK_FALSE(m.tpr.has_value());
  CHECK_FALSE(m.precision.has_value());
  CHECK(m.fpr.has_value());
  std::string row = metrics_csv_row("s", "sc", "standard", m);
  CHECK(row.find("N/A") != std::string::npos);
}

TEST_CASE("merging totals is order-independent") {
  WindowCounts a;
  a.i = 0; a.c_tp = 1; a.c_fn = 2; a.c_fp = 1; a.c_tn = 2; a.n_b = 3; a.n_n = 3;
  WindowCounts b;
  b.i = 5; b.c_tp = 3; b.c_fn = 0; b.c_fp = 0; b.c_tn = 3; b.n_b = 3; b.n_n = 3;

  TimeDependentTotals ab, ba;
  ab.add(a, 1.0);
  ab.add(b, 1.0);
  ba.add(b, 1.0);
  ba.add(a, 1.0);
  CHECK(ab.tp == doctest::Approx(ba.tp));
  CHECK(ab.fn == doctest::Approx(ba.fn));

  TimeDependentTotals merged = ab;
  TimeDependentTotals other;
  other.add(a, 1.0);
  merged += other;
  TimeDependentTotals expect;
  expect.add(a, 1.0);
  expect.add(b, 1.0);
  expect.add(a, 1.0);
  CHECK(merged.tp == doctest::Approx(expect.tp));
  CHECK(merged.fp == doctest::Approx(expect.fp));

  StandardTotals s1{1, 2, 3, 4}, s2{5, 6, 7, 8};
  StandardTotals t1 = s1, t2 = s2;
  t1 += s2;
  t2 += s1;
  CHECK(t1.tp == t2.tp);
  CHECK(t1.fn == t2.fn);
}

TEST_CASE("csv header and row shape") {
  CHECK(metrics_csv_header() ==
        "strategy,scenario,family,tpr,fpr,tnr,fnr,precision,accuracy,"
        "error_rate,f1");
  MetricSet m = derive_metrics(1, 1, 1, 1);
  std::string row = metrics_csv_row("null", "12-attack", "standard", m);
  CHECK(row.substr(0, 24) == "null,12-attack,standard,");
  size_t commas = 0;
  for (char ch : row) commas += ch == ',';
  CHECK(commas == 10);
}
