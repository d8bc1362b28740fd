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

#include <cmath>

#include "aims/models.hpp"

using namespace aims;

TEST_CASE("tempered density reduces to the prior at beta = 0") {
  GaussianMixture2D model;
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const ParamVector theta = model.sample_prior(rng);
    CHECK(log_tempered_density(model, theta, 0.0) ==
          doctest::Approx(model.log_prior(theta)));
  }
  CHECK_THROWS_AS(log_tempered_density(model, {1.0, 1.0}, 1.5),
                  std::invalid_argument);
}

TEST_CASE("tempered density interpolates linearly in beta") {
  BimodalGaussian model(3);
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const ParamVector theta = model.sample_prior(rng);
    const double lp0 = log_tempered_density(model, theta, 0.0);
    const double lp1 = log_tempered_density(model, theta, 1.0);
    for (double beta : {0.1, 0.5, 0.9}) {
      CHECK(log_tempered_density(model, theta, beta) ==
            doctest::Approx((1.0 - beta) * lp0 + beta * lp1).epsilon(1e-12));
    }
  }
}

TEST_CASE("off-support points have zero density, boundary is closed") {
  GaussianMixture2D model;
  CHECK(log_tempered_density(model, {-0.001, 5.0}, 1.0) == kNegInf);
  CHECK(log_tempered_density(model, {10.001, 5.0}, 0.5) == kNegInf);
  // Exactly on the boundary: in-support.
  CHECK(std::isfinite(log_tempered_density(model, {0.0, 10.0}, 1.0)));
  CHECK(std::exp(log_tempered_density(model, {-1.0, 5.0}, 1.0)) == 0.0);
}

TEST_CASE("mixture density matches a direct linear-space evaluation") {
  GaussianMixture2D model;
  const auto& centers = GaussianMixture2D::mode_centers();
  const double var = GaussianMixture2D::kModeSd * GaussianMixture2D::kModeSd;

  // Independent evaluation: plain sum of Gaussian bumps, no log-sum-exp.
  const auto direct = [&](double x, double y) {
    double like = 0.0;
    for (const auto& c : centers) {
      const double d2 = (x - c[0]) * (x - c[0]) + (y - c[1]) * (y - c[1]);
      like += 0.1 * std::exp(-0.5 * d2 / var) / (2.0 * M_PI * var);
    }
    return std::log(0.01) + std::log(like);  // prior * likelihood
  };

  for (const auto& c : centers) {
    const ParamVector theta = {c[0] + 0.05, c[1] - 0.03};
    CHECK(log_tempered_density(model, theta, 1.0) ==
          doctest::Approx(direct(theta[0], theta[1])).epsilon(1e-12));
  }
}

TEST_CASE("mixture mode centers satisfy the frozen-draw constraints") {
  const auto& centers = GaussianMixture2D::mode_centers();
  for (std::size_t i = 0; i < centers.size(); ++i) {
    CHECK(centers[i][0] >= 0.6);
    CHECK(centers[i][0] <= 9.4);
    CHECK(centers[i][1] >= 0.6);
    CHECK(centers[i][1] <= 9.4);
    for (std::size_t j = i + 1; j < centers.size(); ++j) {
      const double d = std::hypot(centers[i][0] - centers[j][0],
                                  centers[i][1] - centers[j][1]);
      CHECK(d >= 1.2);
    }
  }
  // The documented recipe reproduces the constants.
  Rng rng(86);
  for (const auto& c : centers) {
    CHECK(c[0] == 10.0 * rng.uniform01());
    CHECK(c[1] == 10.0 * rng.uniform01());
  }
}

TEST_CASE("bimodal likelihood is symmetric under negation") {
  for (std::size_t d : {2ul, 6ul, 10ul}) {
    BimodalGaussian model(d);
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
      ParamVector theta = model.sample_prior(rng);
      ParamVector neg(theta.size());
      for (std::size_t k = 0; k < theta.size(); ++k) neg[k] = -theta[k];
      CHECK(model.log_likelihood(theta) == model.log_likelihood(neg));
    }
    CHECK(log_tempered_density(model, ParamVector(d, 0.5), 1.0) ==
          log_tempered_density(model, ParamVector(d, -0.5), 1.0));
  }
}

TEST_CASE("prior samplers stay inside the support") {
  Rng rng(9);
  GaussianMixture2D mix;
  BimodalGaussian bim(6);
  for (int i = 0; i < 10000; ++i) {
    CHECK(mix.in_support(mix.sample_prior(rng)));
    const ParamVector t = bim.sample_prior(rng);
    CHECK(bim.in_support(t));
    for (double v : t) CHECK(std::isfinite(v));
  }
}

TEST_CASE("network prediction formula") {
  // Zero output weights give zero everywhere.
  CHECK(ffnn_predict({0, 0, 1, 2, 3, 4, 0}, 1.7) == 0.0);

  // Value at x = 0 for the generating parameters.
  const ParamVector theta = {5, -5, -1, -3, 5, 2, 0};
  CHECK(ffnn_predict(theta, 0.0) ==
        doctest::Approx(5.0 * std::tanh(5.0) - 5.0 * std::tanh(2.0)));

  // Saturation: both units pinned at sign(slope) for large x.
  const double sat = 5.0 * (-1.0) + (-5.0) * (-1.0);
  CHECK(ffnn_predict(theta, 1e4) == doctest::Approx(sat).epsilon(1e-12));
}

TEST_CASE("synthetic regression data follows the noise model") {
  const ParamVector& truth = FfnnRegression::true_parameters();

  SUBCASE("inputs are i/10 and tiny noise recovers the curve") {
    Rng rng(17);
    const FfnnDataset data = make_ffnn_dataset(rng, truth, 1e-12);
    REQUIRE(data.xs.size() == 100);
    for (std::size_t i = 0; i < 100; ++i) {
      CHECK(data.xs[i] == doctest::Approx((i + 1) / 10.0));
      CHECK(data.ys[i] ==
            doctest::Approx(ffnn_predict(truth, data.xs[i])).epsilon(1e-9));
    }
  }

  SUBCASE("residual mean and variance match sigma = 0.1") {
    Rng rng(23);
    double sum = 0.0, sum2 = 0.0;
    const int reps = 200;
    for (int r = 0; r < reps; ++r) {
      const FfnnDataset data = make_ffnn_dataset(rng, truth, 0.1);
      for (std::size_t i = 0; i < 100; ++i) {
        const double res = data.ys[i] - ffnn_predict(truth, data.xs[i]);
        sum += res;
        sum2 += res * res;
      }
    }
    const double n = 100.0 * reps;
    CHECK(std::abs(sum / n) < 4.0 * 0.1 / std::sqrt(n));
    CHECK(sum2 / n == doctest::Approx(0.01).epsilon(0.05));
  }

  SUBCASE("zero noise sd is rejected") {
    Rng rng(1);
    CHECK_THROWS_AS(make_ffnn_dataset(rng, truth, 0.0), std::invalid_argument);
  }
}

TEST_CASE("network likelihood peaks near the generating parameters") {
  auto model = FfnnRegression::with_default_data();
  ParamVector truth = FfnnRegression::true_parameters();
  truth.push_back(std::log(1.0 / 0.01));  // log precision at sigma = 0.1
  const double ll_truth = model->log_likelihood(truth);

  Rng rng(31);
  int worse = 0;
  for (int i = 0; i < 100; ++i) {
    // Random perturbation of norm between 5 and 10.
    ParamVector dir(7);
    double norm = 0.0;
    for (auto& v : dir) {
      v = rng.normal();
      norm += v * v;
    }
    norm = std::sqrt(norm);
    const double scale = rng.uniform(5.0, 10.0) / norm;
    ParamVector perturbed = truth;
    for (std::size_t k = 0; k < 7; ++k) perturbed[k] += scale * dir[k];
    if (model->log_likelihood(perturbed) <= ll_truth) worse += 1;
  }
  CHECK(worse >= 95);
}

TEST_CASE("self-test model has the documented closed form") {
  StdNormalTest model(3);
  Rng rng(13);
  const ParamVector theta = {0.3, -1.2, 0.7};
  const double n2 = 0.09 + 1.44 + 0.49;
  CHECK(model.log_likelihood(theta) == doctest::Approx(-0.25 * n2));
  // Prior is N(0, 2I).
  CHECK(model.log_prior(theta) ==
        doctest::Approx(-1.5 * std::log(4.0 * M_PI) - 0.25 * n2));
  double s2 = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    for (double v : model.sample_prior(rng)) s2 += v * v;
  }
  CHECK(s2 / (3 * n) == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("max_component") {
  CHECK(max_component({0.0, 0.0, 0.0}) == 0.0);
  CHECK(max_component({-1.0, 2.0, 0.5}) == 2.0);
}

TEST_CASE("model factory parses ids") {
  CHECK(make_model("mixture2d")->id() == "mixture2d");
  CHECK(make_model("bimodal:6")->dim() == 6);
  CHECK(make_model("stdnorm-test")->dim() == 1);
  CHECK(make_model("stdnorm-test:16")->dim() == 16);
  CHECK(make_model("ffnn")->dim() == 7);
  CHECK_THROWS_AS(make_model("banana"), std::invalid_argument);
  CHECK_THROWS_AS(make_model("bimodal:0"), std::invalid_argument);

  // Model constants serialize for provenance.
  const auto j = make_model("mixture2d")->constants();
  CHECK(j.at("mode_centers").size() == 10);
}
