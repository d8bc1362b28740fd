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

#include "aims/driver.hpp"

#include <cmath>
#include <stdexcept>

namespace aims {

void RunConfig::validate() const {
  if (model_id.empty()) throw std::invalid_argument("config: empty model id");
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("config: gamma must be in (0,1)");
  }
  if (n_per_level < 2) {
    throw std::invalid_argument("config: n_per_level must be >= 2");
  }
  for (std::size_t n : n_levels) {
    if (n < 2) throw std::invalid_argument("config: per-level N must be >= 2");
  }
  if (!(proposal_scale > 0.0)) {
    throw std::invalid_argument("config: proposal_scale must be > 0");
  }
  for (double c : proposal_scales) {
    if (!(c > 0.0)) {
      throw std::invalid_argument("config: per-level scale must be > 0");
    }
  }
  if (runs < 1) throw std::invalid_argument("config: runs must be >= 1");
  if (!fixed_betas.empty()) {
    double prev = 0.0;
    for (double b : fixed_betas) {
      if (!(b > prev && b <= 1.0)) {
        throw std::invalid_argument(
            "config: fixed_betas must be strictly increasing in (0,1]");
      }
      prev = b;
    }
    if (fixed_betas.back() != 1.0) {
      throw std::invalid_argument("config: fixed_betas must end at 1");
    }
  }
  if (rwmh) {
    if (rwmh->screening_draws < 1 || rwmh->chain_length < 2 ||
        !(rwmh->proposal_scale > 0.0)) {
      throw std::invalid_argument("config: invalid rwmh baseline block");
    }
  }
}

void to_json(nlohmann::json& j, const RwmhConfig& c) {
  j = {{"screening_draws", c.screening_draws},
       {"chain_length", c.chain_length},
       {"proposal_scale", c.proposal_scale},
       {"burn_in", c.burn_in}};
}

void from_json(const nlohmann::json& j, RwmhConfig& c) {
  c.screening_draws = j.at("screening_draws").get<std::size_t>();
  c.chain_length = j.at("chain_length").get<std::size_t>();
  c.proposal_scale = j.at("proposal_scale").get<double>();
  c.burn_in = j.value("burn_in", std::size_t{0});
}

void to_json(nlohmann::json& j, const RunConfig& c) {
  j = {{"model", c.model_id},
       {"model_params", c.model_params},
       {"n_per_level", c.n_per_level},
       {"gamma", c.gamma},
       {"proposal_scale", c.proposal_scale},
       {"seed", c.seed},
       {"runs", c.runs},
       {"out_dir", c.out_dir}};
  if (!c.n_levels.empty()) j["n_levels"] = c.n_levels;
  if (!c.proposal_scales.empty()) j["proposal_scales"] = c.proposal_scales;
  if (!c.fixed_betas.empty()) j["fixed_betas"] = c.fixed_betas;
  if (c.rwmh) j["rwmh"] = *c.rwmh;
}

void from_json(const nlohmann::json& j, RunConfig& c) {
  c = RunConfig{};
  c.model_id = j.at("model").get<std::string>();
  c.model_params = j.value("model_params", nlohmann::json::object());
  c.n_per_level = j.value("n_per_level", std::size_t{1000});
  c.gamma = j.value("gamma", 0.5);
  c.proposal_scale = j.value("proposal_scale", 0.2);
  c.seed = j.value("seed", std::uint64_t{1});
  c.runs = j.value("runs", std::size_t{1});
  c.out_dir = j.value("out_dir", std::string("out"));
  c.n_levels = j.value("n_levels", std::vector<std::size_t>{});
  c.proposal_scales = j.value("proposal_scales", std::vector<double>{});
  c.fixed_betas = j.value("fixed_betas", std::vector<double>{});
  if (j.contains("rwmh")) c.rwmh = j.at("rwmh").get<RwmhConfig>();
}

namespace {

LevelSummary summarize_level(std::size_t level, double beta,
                             const LevelRunRecord& rec, double incoming_ess) {
  LevelSummary s;
  s.level = level;
  s.beta = beta;
  s.chain_length = rec.states.size();
  s.local_accepts = rec.local_accepts;
  s.global_accepts = rec.global_accepts;
  s.repeats = rec.repeats;
  const double transitions = static_cast<double>(rec.states.size() - 1);
  s.local_rate = static_cast<double>(rec.local_accepts) / transitions;
  s.global_rate = static_cast<double>(rec.global_accepts) / transitions;
  s.incoming_ess = incoming_ess;
  s.low_incoming_ess = incoming_ess < 10.0;
  s.lag1_log_target = lag1_autocorrelation(rec.log_target);
  return s;
}

}  // namespace

AimsRunResult run_full_aims(const TargetModel& model, const RunConfig& config,
                            const Rng& run_stream, bool keep_all_levels) {
  config.validate();
  const bool adaptive = config.fixed_betas.empty();

  AimsRunResult out;
  out.kept_all_levels = keep_all_levels;

  // Level 0: iid prior draws.
  {
    Rng rng0 = run_stream.child(2, 0);
    const std::size_t n0 = config.n_for_level(0);
    out.prior_sample.points.reserve(n0);
    out.prior_sample.log_likelihoods.reserve(n0);
    for (std::size_t i = 0; i < n0; ++i) {
      ParamVector theta = model.sample_prior(rng0);
      out.prior_sample.log_likelihoods.push_back(model.log_likelihood(theta));
      out.prior_sample.points.push_back(std::move(theta));
    }
  }

  out.schedule.betas.push_back(0.0);
  out.schedule.ess_to_posterior.push_back(
      posterior_similarity_ess(out.prior_sample.log_likelihoods, 0.0));

  WeightedSampleSet current = out.prior_sample;
  std::size_t level = 0;

  // Procedure loop. The guard compares the current level's similarity to
  // the posterior against gamma; when it passes, one final level runs at
  // beta = 1. A solve that lands exactly on 1 is itself the final level.
  constexpr std::size_t kMaxLevels = 10000;
  while (out.schedule.betas.back() < 1.0) {
    if (level + 1 > kMaxLevels) {
      throw std::runtime_error("run_full_aims: annealing stalled");
    }
    const double beta_prev = out.schedule.betas.back();
    double beta_next = 0.0;
    if (!adaptive) {
      beta_next = config.fixed_betas[level];
    } else if (out.schedule.ess_to_posterior.back() >=
               config.gamma * static_cast<double>(current.size())) {
      beta_next = 1.0;
    } else {
      beta_next =
          solve_next_beta(current.log_likelihoods, beta_prev, config.gamma);
    }

    current.reweight(beta_prev, beta_next);
    out.schedule.ess_to_next.push_back(ess_estimate(current.norm_weights));

    LevelInput input;
    input.prev = &current;
    input.beta = beta_next;
    input.proposal_scale = config.scale_for_level(level + 1);
    input.chain_length = config.n_for_level(level + 1);
    input.model = &model;

    Rng rng_level = run_stream.child(2, level + 1);
    LevelRunRecord rec = run_level(rng_level, input);

    out.schedule.betas.push_back(beta_next);
    out.schedule.ess_to_posterior.push_back(
        posterior_similarity_ess(rec.log_likelihoods, beta_next));
    out.level_summaries.push_back(summarize_level(
        level + 1, beta_next, rec, out.schedule.ess_to_next.back()));

    out.final_level_prev = std::move(current);
    current = WeightedSampleSet{};
    current.points = rec.states;
    current.log_likelihoods = rec.log_likelihoods;
    out.levels.push_back(std::move(rec));
    level += 1;
  }

  if (!keep_all_levels && out.levels.size() > 1) {
    out.levels.erase(out.levels.begin(), out.levels.end() - 1);
  }
  return out;
}

}  // namespace aims
