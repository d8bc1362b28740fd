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

#ifndef AIMS_RWMH_HPP
#define AIMS_RWMH_HPP

#include "aims/model.hpp"

namespace aims {

/// Random-walk Metropolis-Hastings baseline, set up like the comparison
/// experiment: a prior screening sample picks the highest-likelihood start,
/// then a plain Gaussian random walk targets the posterior.
struct RwmhConfig {
  std::size_t screening_draws = 1000;  // N_0 prior points
  std::size_t chain_length = 5000;     // N
  double proposal_scale = 0.2;         // c
  std::size_t burn_in = 0;             // states to drop in estimators

  bool operator==(const RwmhConfig&) const = default;
};

struct RwmhResult {
  std::vector<ParamVector> states;
  std::vector<double> log_target;
  std::size_t accepts = 0;

  double acceptance_rate() const {
    return static_cast<double>(accepts) /
           static_cast<double>(states.size() - 1);
  }
};

/// Runs the baseline chain. Throws std::runtime_error when every screening
/// draw has -inf likelihood.
RwmhResult run_rwmh(Rng& rng, const TargetModel& model, const RwmhConfig& config);

}  // namespace aims

#endif  // AIMS_RWMH_HPP
