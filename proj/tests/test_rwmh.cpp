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

#include "aims/diagnostics.hpp"
#include "aims/models.hpp"
#include "aims/rwmh.hpp"

using namespace aims;

namespace {

// Hostile model whose likelihood is zero everywhere; exercises the
// screening-failure path.
class ZeroLikelihood final : public TargetModel {
 public:
  std::size_t dim() const override { return 1; }
  double log_prior(const ParamVector&) const override { return 0.0; }
  double log_likelihood(const ParamVector&) const override { return kNegInf; }
  ParamVector sample_prior(Rng& rng) const override { return {rng.normal()}; }
  std::string id() const override { return "zero"; }
  nlohmann::json constants() const override { return {}; }
};

}  // namespace

TEST_CASE("baseline chain reproduces standard-normal moments") {
  StdNormalTest model(1);
  Rng rng(1);
  RwmhConfig cfg{1000, 100000, 2.4, 0};
  const RwmhResult res = run_rwmh(rng, model, cfg);
  REQUIRE(res.states.size() == cfg.chain_length);

  std::vector<double> xs(res.states.size());
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = res.states[i][0];
  CHECK(std::abs(mean(xs)) < 0.05);
  CHECK(sample_variance(xs) == doctest::Approx(1.0).epsilon(0.1));
  CHECK(res.acceptance_rate() > 0.1);
  CHECK(res.acceptance_rate() < 0.9);
}

TEST_CASE("rejected steps repeat the state bitwise") {
  StdNormalTest model(2);
  Rng rng(2);
  RwmhConfig cfg{100, 5000, 3.0, 0};
  const RwmhResult res = run_rwmh(rng, model, cfg);
  std::size_t moves = 0;
  for (std::size_t i = 1; i < res.states.size(); ++i) {
    if (res.states[i] != res.states[i - 1]) moves += 1;
  }
  CHECK(moves == res.accepts);
  CHECK(res.acceptance_rate() ==
        doctest::Approx(static_cast<double>(res.accepts) /
                        (cfg.chain_length - 1)));
}

TEST_CASE("baseline misses most mixture modes at the comparison settings") {
  GaussianMixture2D model;
  Rng rng(3);
  RwmhConfig cfg{1000, 5000, 0.2, 0};
  const RwmhResult res = run_rwmh(rng, model, cfg);

  std::vector<ParamVector> centers;
  for (const auto& c : GaussianMixture2D::mode_centers()) {
    centers.push_back({c[0], c[1]});
  }
  const std::size_t visited = count_modes_visited(res.states, centers, 0.5);
  CHECK(visited >= 1);
  CHECK(visited <= 3);
  for (const auto& s : res.states) CHECK(model.in_support(s));
}

TEST_CASE("screening failure raises an error") {
  ZeroLikelihood model;
  Rng rng(4);
  RwmhConfig cfg{50, 100, 1.0, 0};
  CHECK_THROWS_AS(run_rwmh(rng, model, cfg), std::runtime_error);
}

TEST_CASE("configuration validation") {
  StdNormalTest model(1);
  Rng rng(5);
  CHECK_THROWS_AS(run_rwmh(rng, model, RwmhConfig{0, 100, 1.0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_rwmh(rng, model, RwmhConfig{10, 1, 1.0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_rwmh(rng, model, RwmhConfig{10, 100, 0.0, 0}),
                  std::invalid_argument);
}
