#include <doctest.h>

#include <cmath>

#include "seceval/cost_curves.hpp"
#include "seceval/simulator.hpp"

using namespace seceval;

TEST_CASE("phase curve evaluates the logistic form") {
  PhaseCurve p(1.0, 4.0, 0.5);
  CHECK(p.c() == doctest::Approx(3.0));
  CHECK(phase_cost(p, 0.0) == doctest::Approx(1.0));
  CHECK(phase_cost(p, 2.0) == doctest::Approx(1.9014675456746868).epsilon(1e-12));
  // negative time clamps to the starting cost
  CHECK(phase_cost(p, -5.0) == doctest::Approx(1.0));
}

TEST_CASE("phase curve validation") {
  CHECK_THROWS_AS(PhaseCurve(0.0, 4.0, 0.5), ValidationError);
  CHECK_THROWS_AS(PhaseCurve(-1.0, 4.0, 0.5), ValidationError);
  CHECK_THROWS_AS(PhaseCurve(2.0, 1.0, 0.5), ValidationError);  // b < a
  CHECK_THROWS_AS(PhaseCurve(1.0, 4.0, 0.0), ValidationError);
  CHECK_NOTHROW(PhaseCurve(3.0, 3.0, 1.0));  // flat phase is fine
}

TEST_CASE("breach curve sums only phases that have started") {
  BreachCurve curve({{0.0, PhaseCurve(1.0, 4.0, 0.5)},
                     {10.0, PhaseCurve(2.0, 8.0, 1.0)}});
  CHECK(breach_cost(curve, 2.0) ==
        doctest::Approx(phase_cost(curve.phases[0].second, 2.0)));
  CHECK(breach_cost(curve, 12.0) ==
        doctest::Approx(phase_cost(curve.phases[0].second, 12.0) +
                        phase_cost(curve.phases[1].second, 2.0)));
  CHECK(breach_cost(BreachCurve{}, 5.0) == 0.0);
  CHECK_THROWS_AS(BreachCurve({{10.0, PhaseCurve(1, 2, 1)},
                               {5.0, PhaseCurve(1, 2, 1)}}),
                  ValidationError);
}

TEST_CASE("s-curve cost and marginal") {
  SCurve half_at_5(14800.0, 25.0 * 0.6931471805599453094);
  CHECK(s_curve_cost(half_at_5, 5.0) == doctest::Approx(7400.0).epsilon(1e-12));
  CHECK(s_curve_cost(half_at_5, 1.5) ==
        doctest::Approx(6.69089147551362).epsilon(1e-12));
  CHECK(s_curve_cost(half_at_5, 3.0) ==
        doctest::Approx(2158.0787232158154).epsilon(1e-12));
  CHECK(s_curve_cost(half_at_5, 10.0) ==
        doctest::Approx(12445.266945754975).epsilon(1e-12));
  CHECK(s_curve_cost(half_at_5, 0.0) == 0.0);
  CHECK(s_curve_cost(half_at_5, -1.0) == 0.0);

  SCurve unit(1.0, 1.0);
  CHECK(s_curve_marginal(unit, 1.0) ==
        doctest::Approx(0.7357588823428847).epsilon(1e-12));
  CHECK_THROWS_AS(s_curve_marginal(unit, 0.0), DomainError);
  CHECK_THROWS_AS(s_curve_marginal(unit, -2.0), DomainError);
}

TEST_CASE("s-curve properties on a dense grid") {
  SCurve curve(14800.0, 25.0 * 0.6931471805599453094);
  double prev = -1.0;
  for (int i = 1; i <= 1000; ++i) {
    const double t = 0.1 * i;
    const double v = s_curve_cost(curve, t);
    CHECK(v > prev);          // strictly increasing
    CHECK(v < curve.b);       // below the asymptote
    prev = v;
  }
  CHECK(s_curve_cost(curve, 1e7) == doctest::Approx(curve.b).epsilon(1e-9));
}

TEST_CASE("marginal matches a central finite difference") {
  SCurve curve(14800.0, 25.0 * 0.6931471805599453094);
  for (double t : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0, 100.0}) {
    const double h = 1e-6 * t;
    const double fd =
        (s_curve_cost(curve, t + h) - s_curve_cost(curve, t - h)) / (2.0 * h);
    const double m = s_curve_marginal(curve, t);
    if (std::abs(m) > 1e-30)
      CHECK(std::abs(fd - m) / std::abs(m) < 1e-4);
  }
}

TEST_CASE("fit reproduces the mean-statistics example") {
  BreachFitConstraints k(197.0, 30.0, 3.09e6, 4.25e6);
  SCurve curve = fit_s_curve(k);
  CHECK(curve.b == doctest::Approx(4.25e6));
  // frozen from an independent high-precision quadrature of the constraint
  CHECK(curve.alpha == doctest::Approx(14269.337).epsilon(1e-4));
  CHECK(fit_residual(curve, k) < 1e-6);
}

TEST_CASE("fit degenerates gracefully when early equals late") {
  BreachFitConstraints k(197.0, 30.0, 4.25e6, 4.25e6);
  SCurve curve = fit_s_curve(k);
  CHECK(curve.alpha <= 1e-6);
  CHECK(s_curve_cost(curve, 197.0) == doctest::Approx(4.25e6).epsilon(1e-6));
}

TEST_CASE("fit rejects impossible constraints") {
  CHECK_THROWS_AS(BreachFitConstraints(197.0, 30.0, 5.0e6, 4.25e6),
                  ValidationError);
  CHECK_THROWS_AS(BreachFitConstraints(-1.0, 30.0, 1.0, 2.0), ValidationError);
}

TEST_CASE("fit round-trips randomized curves within 0.1%") {
  SplitMix64 rng(20260824);
  for (int trial = 0; trial < 200; ++trial) {
    const double b = 1.0 + (1e7 - 1.0) * (rng.below(1u << 30) / double(1u << 30));
    const double alpha =
        10.0 * std::pow(1e5, rng.below(1u << 30) / double(1u << 30));
    SCurve truth(b, alpha);
    const double detect = std::sqrt(alpha);  // keep the window informative
    const double window = 0.5 * detect;
    // synthesize the early average from the true curve, then fit it back
    const int n = 2000;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = detect + window * (i + 0.5) / n;
      acc += s_curve_cost(truth, x);
    }
    BreachFitConstraints k(detect, window, acc / n, b);
    SCurve fitted = fit_s_curve(k);
    CHECK(std::abs(fitted.alpha - alpha) / alpha < 1e-3);
  }
}
