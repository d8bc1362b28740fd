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

#include "aims/rwmh.hpp"

#include <cmath>
#include <stdexcept>

namespace aims {

RwmhResult run_rwmh(Rng& rng, const TargetModel& model, const RwmhConfig& config) {
  if (config.screening_draws < 1 || config.chain_length < 2 ||
      !(config.proposal_scale > 0.0)) {
    throw std::invalid_argument("run_rwmh: invalid configuration");
  }

  // Prior screening: start from the highest-likelihood draw.
  ParamVector best;
  double best_ll = kNegInf;
  for (std::size_t i = 0; i < config.screening_draws; ++i) {
    ParamVector theta = model.sample_prior(rng);
    const double ll = model.log_likelihood(theta);
    if (ll > best_ll) {
      best_ll = ll;
      best = std::move(theta);
    }
  }
  if (best_ll == kNegInf) {
    throw std::runtime_error(
        "run_rwmh: all screening draws have zero likelihood");
  }

  RwmhResult res;
  res.states.reserve(config.chain_length);
  res.log_target.reserve(config.chain_length);

  ParamVector cur = std::move(best);
  double lt_cur = model.log_prior(cur) + model.log_likelihood(cur);
  res.states.push_back(cur);
  res.log_target.push_back(lt_cur);

  const std::size_t d = model.dim();
  for (std::size_t i = 1; i < config.chain_length; ++i) {
    ParamVector cand(d);
    for (std::size_t k = 0; k < d; ++k) {
      cand[k] = cur[k] + config.proposal_scale * rng.normal();
    }
    // Symmetric proposal: the acceptance ratio reduces to the target ratio.
    const double lp = model.log_prior(cand);
    if (lp != kNegInf) {
      const double lt_cand = lp + model.log_likelihood(cand);
      const double log_ratio = lt_cand - lt_cur;
      if (log_ratio >= 0.0 || rng.uniform01() < std::exp(log_ratio)) {
        cur = std::move(cand);
        lt_cur = lt_cand;
        res.accepts += 1;
      }
    }
    res.states.push_back(cur);
    res.log_target.push_back(lt_cur);
  }

  return res;
}

}  // namespace aims
