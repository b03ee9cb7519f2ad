#include <doctest.h>

#include <cmath>

#include "seceval/econ_scores.hpp"
#include "seceval/simulator.hpp"

using namespace seceval;

TEST_CASE("annual loss expectancy") {
  CHECK(ale({{1.0e6, 0.1}, {5.0e4, 2.0}}) == doctest::Approx(2.0e5));
  CHECK(ale({}) == 0.0);
  CHECK_THROWS_AS(ale({{-1.0, 1.0}}), ValidationError);
}

TEST_CASE("return on security investment") {
  CHECK(rosi(2.0e5, 0.75, 5.0e4) == doctest::Approx(2.0));
  CHECK(rosi(1.0e5, 0.5, 1.0e5) == doctest::Approx(-0.5));
  CHECK_THROWS_AS(rosi(1.0e5, 0.5, 0.0), DomainError);
  CHECK_THROWS_AS(rosi(1.0e5, 1.5, 1.0e4), ValidationError);
}

TEST_CASE("gordon-loeb bound") {
  CHECK(gl_bound(159093.0) ==
        doctest::Approx(58527.043934288275).epsilon(1e-12));
  CHECK(gl_bound(0.0) == 0.0);
  CHECK(gl_check(58527.0, 159093.0));
  CHECK_FALSE(gl_check(58528.0, 159093.0));
  CHECK_THROWS_AS(gl_bound(-1.0), ValidationError);
}

TEST_CASE("gordon-loeb optimal spend, exponential family") {
  GLModel model(1.0e6, 0.5, 1.0e-4);
  CHECK(gl_optimal_exponential(model) ==
        doctest::Approx(39120.230054281456).epsilon(1e-12));
  // avL <= 1: no interior optimum, spend nothing
  CHECK(gl_optimal_exponential(GLModel(10.0, 0.05, 1.0)) == 0.0);
  CHECK_THROWS_AS(GLModel(0.0, 0.5, 1.0), ValidationError);
  CHECK_THROWS_AS(GLModel(10.0, 1.5, 1.0), ValidationError);
  CHECK_THROWS_AS(GLModel(10.0, 0.5, 0.0), ValidationError);
}

TEST_CASE("optimal spend always respects the 1/e bound") {
  SplitMix64 rng(77);
  auto uniform = [&] { return rng.below(1u << 30) / double(1u << 30); };
  for (int i = 0; i < 10000; ++i) {
    const double loss = std::pow(10.0, 2.0 + 6.0 * uniform());
    const double v = 0.01 + 0.99 * uniform();
    const double a = std::pow(10.0, -6.0 + 4.0 * uniform());
    const double z = gl_optimal_exponential(GLModel(loss, v, a));
    CHECK(z <= loss / std::exp(1.0) * (1.0 + 1e-12));
    CHECK(z >= 0.0);
  }
}

TEST_CASE("toxicity against the optimal attacker") {
  // attacker attacks at half strength wherever it would pay off
  std::vector<IctfSample> series = {
      {0.5, 1.0, 0.0},  // critical and undetected: pays
      {0.5, 1.0, 1.0},  // detected: C - D = 0
      {0.5, 0.0, 0.0},  // not critical
  };
  CHECK(ictf_toxicity(series, 1.0) == doctest::Approx(0.5));

  // nothing critical: optimal attacker also scores zero
  std::vector<IctfSample> flat = {{1.0, 0.0, 0.0}, {0.3, 0.0, 1.0}};
  CHECK(ictf_toxicity(flat, 1.0) == 0.0);

  CHECK_THROWS_AS(ictf_toxicity({}, 1.0), ValidationError);
  CHECK_THROWS_AS(ictf_toxicity(series, 0.0), ValidationError);
  CHECK_THROWS_AS(ictf_toxicity({{1.5, 1.0, 0.0}}, 1.0), ValidationError);
}

TEST_CASE("weighted CIA plus offense score") {
  CIAWeights w;  // unit weights, w_d = 0.5
  CHECK(mitll_score(1.0, 1.0, 1.0, 1.0, w) == doctest::Approx(2.0));
  CHECK(mitll_score(1.0, 1.0, 1.0, 0.0, w) == doctest::Approx(1.5));
  CHECK(mitll_score(0.0, 0.0, 0.0, 1.0, w) == doctest::Approx(0.5));
  CHECK(mitll_score(0.0, 0.0, 0.0, 0.0, w) == doctest::Approx(0.0));

  CIAWeights defense_only;  // w_d = 1: the offense term drops out
  defense_only.w_d = 1.0;
  CHECK(mitll_score(0.2, 0.4, 0.6, 0.9, defense_only) == doctest::Approx(1.2));

  CIAWeights bad;
  bad.w_d = 1.5;
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  CHECK_THROWS_AS(mitll_score(1.2, 0.0, 0.0, 0.0, w), ValidationError);
}

TEST_CASE("round score multiplies availability, security, and evaluation") {
  CHECK(cgc_round_score(100.0, false, 0, 6) == doctest::Approx(200.0));
  CHECK(cgc_round_score(100.0, true, 0, 6) == doctest::Approx(100.0));
  CHECK(cgc_round_score(50.0, false, 3, 6) == doctest::Approx(150.0));
  CHECK_THROWS_AS(cgc_round_score(120.0, false, 0, 6), ValidationError);
  CHECK_THROWS_AS(cgc_round_score(50.0, false, 7, 6), ValidationError);
  CHECK_THROWS_AS(cgc_round_score(50.0, false, 0, 0), ValidationError);
}
