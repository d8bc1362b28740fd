// Copyright 2026 The aims-mc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "aims/diagnostics.hpp"
#include "aims/models.hpp"
#include "aims/oracles.hpp"
#include "aims/quadrature.hpp"

using namespace aims;

TEST_CASE("expectation estimator") {
  const std::vector<ParamVector> states = {{-1.0}, {1.0}};
  CHECK(estimate_expectation(states, [](const ParamVector&) { return 3.5; }) ==
        doctest::Approx(3.5));
  CHECK(estimate_expectation(states, [](const ParamVector& t) { return t[0]; }) ==
        doctest::Approx(0.0));
  CHECK_THROWS_AS(
      estimate_expectation(states, [](const ParamVector&) { return 0.0; }, 2),
      std::invalid_argument);
}

TEST_CASE("posterior moments of degenerate and iid samples") {
  const std::vector<ParamVector> equal(10, ParamVector{1.0, 2.0});
  const Moments m0 = posterior_moments(equal);
  CHECK(m0.mean[0] == doctest::Approx(1.0));
  CHECK(m0.covariance[0][0] == doctest::Approx(0.0));
  CHECK(m0.covariance[0][1] == doctest::Approx(0.0));

  Rng rng(1);
  std::vector<ParamVector> iid(100000);
  for (auto& s : iid) s = {rng.normal(), rng.normal()};
  const Moments m = posterior_moments(iid);
  for (int k = 0; k < 2; ++k) {
    CHECK(std::abs(m.mean[k]) < 0.02);
    CHECK(m.covariance[k][k] == doctest::Approx(1.0).epsilon(0.02));
  }
  CHECK(std::abs(m.covariance[0][1]) < 0.02);

  CHECK_THROWS_AS(posterior_moments({{1.0}}), std::invalid_argument);
}

TEST_CASE("stopping rule compares the largest pairwise gap") {
  CHECK(stopping_rule({0.7, 0.7, 0.7}, 1e-9));
  CHECK_FALSE(stopping_rule({0.0, 1.0}, 0.5));
  CHECK(stopping_rule({0.29, 0.31, 0.30}, 0.05));
  CHECK_THROWS_AS(stopping_rule({1.0}, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(stopping_rule({1.0, 2.0}, 0.0), std::invalid_argument);
}

TEST_CASE("ensemble stats decompose the mean squared error") {
  Rng rng(2);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> est(20);
    for (auto& v : est) v = 0.3 + 0.05 * rng.normal();
    const EnsembleStats s = make_ensemble_stats(est, 0.29);
    CHECK(s.cov >= 0.0);
    CHECK(s.mse ==
          doctest::Approx(s.bias * s.bias + s.variance).epsilon(1e-9));
    // Direct MSE definition agrees.
    double direct = 0.0;
    for (double v : est) direct += (v - 0.29) * (v - 0.29) / est.size();
    CHECK(s.mse == doctest::Approx(direct).epsilon(1e-9));
  }
}

TEST_CASE("quadrature reproduces analytic mixture moments") {
  GaussianMixture2D model;
  const GridTruth2D t = simpson_truth_2d(model, 1.0, 400);

  // All modes sit >= 6 sd inside the box, so the truncated moments equal
  // the untruncated ones to high accuracy.
  const auto& centers = GaussianMixture2D::mode_centers();
  double mx = 0.0, my = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (const auto& c : centers) {
    mx += c[0] / 10.0;
    my += c[1] / 10.0;
  }
  const double var = GaussianMixture2D::kModeSd * GaussianMixture2D::kModeSd;
  for (const auto& c : centers) {
    sxx += (var + (c[0] - mx) * (c[0] - mx)) / 10.0;
    syy += (var + (c[1] - my) * (c[1] - my)) / 10.0;
    sxy += (c[0] - mx) * (c[1] - my) / 10.0;
  }
  CHECK(t.z == doctest::Approx(0.01).epsilon(1e-6));
  CHECK(t.mean[0] == doctest::Approx(mx).epsilon(1e-6));
  CHECK(t.mean[1] == doctest::Approx(my).epsilon(1e-6));
  CHECK(t.var1 == doctest::Approx(sxx).epsilon(1e-5));
  CHECK(t.var2 == doctest::Approx(syy).epsilon(1e-5));
  CHECK(t.cov12 == doctest::Approx(sxy).epsilon(1e-4));
  // Peak of the normalized density: prior * weight / (2 pi sigma^2) / z.
  CHECK(t.max_density ==
        doctest::Approx(0.01 * 0.1 / (2.0 * M_PI * var) / t.z).epsilon(1e-4));

  CHECK_THROWS_AS(simpson_truth_2d(model, 1.0, 401), std::invalid_argument);
  StdNormalTest unbounded(2);
  CHECK_THROWS_AS(simpson_truth_2d(unbounded, 1.0, 100), std::invalid_argument);
}

TEST_CASE("ergodicity bound: closed form for a uniform target") {
  // At beta = 0 the mixture model's annealed density is uniform on the
  // square, so with one previous point at the center the bound reduces to
  // max-density / q(farthest corner).
  GaussianMixture2D model;
  WeightedSampleSet prev;
  prev.points = {{5.0, 5.0}};
  prev.log_likelihoods = {model.log_likelihood(prev.points[0])};
  prev.reweight(0.0, 0.0);

  const double c = 2.0;
  const double log_m = ergodicity_bound_log_m(model, prev, 0.0, c, 400);
  const double q_min = iso_gaussian_logpdf(50.0, 2, c * c);  // corner at d^2=50
  CHECK(log_m == doctest::Approx(std::log(0.01) - q_min).epsilon(1e-6));
  CHECK(ergodicity_bound_m(model, prev, 0.0, c, 400) >= 1.0);
}

TEST_CASE("ergodicity bound is at least one and permutation invariant") {
  GaussianMixture2D model;
  Rng rng(3);
  WeightedSampleSet prev;
  for (int i = 0; i < 40; ++i) {
    ParamVector p = model.sample_prior(rng);
    prev.log_likelihoods.push_back(model.log_likelihood(p));
    prev.points.push_back(std::move(p));
  }
  prev.reweight(0.0, 0.02);

  for (double c : {0.2, 1.0, 3.0}) {
    const double log_m = ergodicity_bound_log_m(model, prev, 0.02, c, 200);
    CHECK(log_m >= 0.0);

    // Shuffle the points and weights together: identical bound, bitwise.
    WeightedSampleSet shuffled = prev;
    for (std::size_t i = shuffled.size() - 1; i > 0; --i) {
      const std::size_t j = rng.uniform_index(i + 1);
      std::swap(shuffled.points[i], shuffled.points[j]);
      std::swap(shuffled.norm_weights[i], shuffled.norm_weights[j]);
      std::swap(shuffled.log_likelihoods[i], shuffled.log_likelihoods[j]);
    }
    CHECK(ergodicity_bound_log_m(model, shuffled, 0.02, c, 200) == log_m);
  }

  StdNormalTest unbounded(2);
  CHECK_THROWS_WITH_AS(
      ergodicity_bound_log_m(unbounded, prev, 0.0, 1.0, 100), "M undefined",
      std::invalid_argument);
}

TEST_CASE("proposal-mixture averages converge to the annealed-target values") {
  // prior N(0,2) -> posterior N(0,1) with kernel sd sqrt(1/2); the mixture
  // approximation of the target improves with the previous-level size.
  StdNormalTest model(1);
  const double c = std::sqrt(0.5);
  double prev_rmse1 = 1e9, prev_rmse2 = 1e9;
  for (std::size_t n_prev : {5ul, 50ul, 500ul}) {
    double rmse1 = 0.0, rmse2 = 0.0;
    const int reps = 40;
    for (int r = 0; r < reps; ++r) {
      Rng rng(100 + r);
      WeightedSampleSet prev;
      for (std::size_t i = 0; i < n_prev; ++i) {
        ParamVector p = model.sample_prior(rng);
        prev.log_likelihoods.push_back(model.log_likelihood(p));
        prev.points.push_back(std::move(p));
      }
      prev.reweight(0.0, 1.0);
      const double e1 = pihat_expectation_demo(
          rng, prev, model, 1.0, c,
          [](const ParamVector& t) { return t[0]; }, 20000);
      const double e2 = pihat_expectation_demo(
          rng, prev, model, 1.0, c,
          [](const ParamVector& t) { return t[0] * t[0]; }, 20000);
      rmse1 += e1 * e1 / reps;
      rmse2 += (e2 - 1.0) * (e2 - 1.0) / reps;
    }
    rmse1 = std::sqrt(rmse1);
    rmse2 = std::sqrt(rmse2);
    CHECK(rmse1 < prev_rmse1);
    CHECK(rmse2 < prev_rmse2);
    prev_rmse1 = rmse1;
    prev_rmse2 = rmse2;
  }
  // At the largest size the averages are near the target values.
  CHECK(prev_rmse1 < 0.1);
  CHECK(prev_rmse2 < 0.15);
}

TEST_CASE("proposal-mixture average matches a direct one-step simulation") {
  // Single previous point at zero: drawing from the mixture is exactly one
  // random-walk step from zero, accepted or not.
  StdNormalTest model(1);
  WeightedSampleSet prev;
  prev.points = {{0.0}};
  prev.log_likelihoods = {0.0};
  prev.reweight(1.0, 1.0);
  const double c = 0.9;

  const auto h = [](const ParamVector& t) { return t[0] * t[0]; };
  Rng rng_a(7);
  const double demo = pihat_expectation_demo(rng_a, prev, model, 1.0, c, h, 200000);

  Rng rng_b(8);
  double direct = 0.0;
  const int n = 200000;
  const double lt0 = log_tempered_density(model, {0.0}, 1.0);
  for (int i = 0; i < n; ++i) {
    const double x = c * rng_b.normal();
    const double lt = log_tempered_density(model, {x}, 1.0);
    const bool take = lt - lt0 >= 0.0 || rng_b.uniform01() < std::exp(lt - lt0);
    direct += (take ? x * x : 0.0) / n;
  }
  CHECK(demo == doctest::Approx(direct).epsilon(0.03));
}

TEST_CASE("mode visit counting") {
  const std::vector<ParamVector> centers = {{0.0, 0.0}, {5.0, 5.0}};
  const std::vector<ParamVector> states = {{0.1, 0.1}, {0.2, 0.0}, {9.0, 9.0}};
  CHECK(count_modes_visited(states, centers, 0.5) == 1);
  CHECK(count_modes_visited(states, centers, 10.0) == 2);
  CHECK(count_modes_visited({}, centers, 0.5) == 0);
}

TEST_CASE("direct-sampling reference for the bimodal quantity") {
  Rng rng(9);
  const OracleEstimate est = bimodal_max_component_direct(2, 1000000, rng);
  // Known value for d = 2 (independent quadrature: 0.28064).
  CHECK(est.value == doctest::Approx(0.28064).epsilon(0.01));
  CHECK(est.std_error < 0.001);
  CHECK(est.std_error > 0.0);
  CHECK_THROWS_AS(bimodal_max_component_direct(0, 100, rng),
                  std::invalid_argument);
}
