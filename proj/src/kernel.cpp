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

#include "aims/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aims {

LevelContext::LevelContext(const LevelInput& input) : input_(input) {
  if (input.prev == nullptr || input.model == nullptr) {
    throw std::invalid_argument("LevelContext: null previous sample or model");
  }
  const WeightedSampleSet& prev = *input.prev;
  n_prev_ = prev.size();
  if (n_prev_ < 1) throw std::invalid_argument("LevelContext: empty previous level");
  if (input.chain_length < 2) {
    throw std::invalid_argument("LevelContext: chain_length must be >= 2");
  }
  if (!(input.proposal_scale > 0.0)) {
    throw std::invalid_argument("LevelContext: proposal_scale must be > 0");
  }
  if (prev.norm_weights.size() != n_prev_ ||
      prev.log_likelihoods.size() != n_prev_) {
    throw std::invalid_argument("LevelContext: previous sample not reweighted");
  }

  dim_ = input.model->dim();
  proposal_var_ = input.proposal_scale * input.proposal_scale;
  log_q_norm_ =
      -0.5 * static_cast<double>(dim_) * (kLogTwoPi + std::log(proposal_var_));

  flat_prev_.resize(n_prev_ * dim_);
  log_norm_weights_.resize(n_prev_);
  log_target_prev_.resize(n_prev_);
  weight_cdf_.resize(n_prev_);

  double acc = 0.0;
  double best_w = -1.0;
  for (std::size_t i = 0; i < n_prev_; ++i) {
    const ParamVector& p = prev.points[i];
    if (p.size() != dim_) {
      throw std::invalid_argument("LevelContext: point dimension mismatch");
    }
    std::copy(p.begin(), p.end(), flat_prev_.begin() + i * dim_);
    const double w = prev.norm_weights[i];
    log_norm_weights_[i] = w > 0.0 ? std::log(w) : kNegInf;
    acc += w;
    weight_cdf_[i] = acc;
    if (w > best_w) {
      best_w = w;
      max_weight_index_ = i;
    }
    // log pi_j at the previous point, from the cached likelihood.
    const double lp = input.model->log_prior(p);
    if (lp == kNegInf) {
      throw std::invalid_argument("LevelContext: previous point off support");
    }
    log_target_prev_[i] = lp + input.beta * prev.log_likelihoods[i];
  }
}

std::size_t LevelContext::sample_seed_index(Rng& rng) const {
  const double u = rng.uniform01();
  const auto it = std::upper_bound(weight_cdf_.begin(), weight_cdf_.end(), u);
  if (it == weight_cdf_.end()) return n_prev_ - 1;
  return static_cast<std::size_t>(it - weight_cdf_.begin());
}

bool LevelContext::matches_prev_point(const ParamVector& theta) const {
  for (std::size_t i = 0; i < n_prev_; ++i) {
    const double* row = flat_prev_.data() + i * dim_;
    if (row[0] != theta[0]) continue;
    bool same = true;
    for (std::size_t k = 1; k < dim_; ++k) {
      if (row[k] != theta[k]) {
        same = false;
        break;
      }
    }
    if (same) return true;
  }
  return false;
}

double LevelContext::log_density(const ParamVector& theta,
                                 double log_target_theta) const {
  if (matches_prev_point(theta)) {
    throw std::domain_error(
        "global proposal log-density evaluated on excluded set");
  }
  const double inv_two_var = 0.5 / proposal_var_;
  // Streaming max-shifted log-sum-exp in index order, so results are
  // reproducible bit-for-bit.
  double m = kNegInf;
  double s = 0.0;
  for (std::size_t i = 0; i < n_prev_; ++i) {
    const double lw = log_norm_weights_[i];
    if (lw == kNegInf) continue;
    const double* row = flat_prev_.data() + i * dim_;
    double d2 = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) {
      const double diff = theta[k] - row[k];
      d2 += diff * diff;
    }
    const double log_q = log_q_norm_ - d2 * inv_two_var;
    const double log_min = std::min(0.0, log_target_theta - log_target_prev_[i]);
    const double t = lw + log_q + log_min;
    if (t > m) {
      s = s * std::exp(m - t) + 1.0;
      m = t;
    } else {
      s += std::exp(t - m);
    }
  }
  if (m == kNegInf) return kNegInf;
  return m + std::log(s);
}

std::size_t select_seed_index(Rng& rng, const std::vector<double>& norm_weights) {
  const double u = rng.uniform01();
  double acc = 0.0;
  for (std::size_t k = 0; k < norm_weights.size(); ++k) {
    acc += norm_weights[k];
    if (u < acc) return k;
  }
  return norm_weights.size() - 1;
}

ParamVector draw_local_candidate(Rng& rng, const ParamVector& center, double c) {
  if (!(c > 0.0)) {
    throw std::invalid_argument("draw_local_candidate: scale must be > 0");
  }
  ParamVector theta(center.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    theta[i] = center[i] + c * rng.normal();
  }
  return theta;
}

bool local_accept(Rng& rng, double log_target_candidate, double log_target_seed) {
  if (log_target_candidate == kNegInf) return false;
  const double log_ratio = log_target_candidate - log_target_seed;
  if (log_ratio >= 0.0) return true;
  return rng.uniform01() < std::exp(log_ratio);
}

bool global_accept(Rng& rng, double log_target_current, double log_pihat_current,
                   double log_target_candidate, double log_pihat_candidate) {
  const double log_ratio = (log_target_candidate + log_pihat_current) -
                           (log_target_current + log_pihat_candidate);
  if (!std::isfinite(log_target_current) || !std::isfinite(log_pihat_current) ||
      !std::isfinite(log_target_candidate) || !std::isfinite(log_pihat_candidate)) {
    throw std::invalid_argument("global_accept: non-finite log value");
  }
  if (log_ratio >= 0.0) return true;
  return rng.uniform01() < std::exp(log_ratio);
}

double global_proposal_log_density(const ParamVector& theta,
                                   const LevelContext& ctx,
                                   double log_target_theta) {
  return ctx.log_density(theta, log_target_theta);
}

ParamVector initial_state(Rng& rng, const LevelContext& ctx) {
  const std::size_t k = ctx.max_weight_index();
  const auto center_span = ctx.prev_point(k);
  const ParamVector center(center_span.begin(), center_span.end());
  const TargetModel& model = *ctx.input().model;
  for (int attempt = 0; attempt < 100; ++attempt) {
    ParamVector theta =
        draw_local_candidate(rng, center, ctx.input().proposal_scale);
    if (model.in_support(theta) && !ctx.matches_prev_point(theta)) return theta;
  }
  throw std::runtime_error("cannot initialize in support");
}

LevelRunRecord run_level(Rng& rng, const LevelInput& input) {
  const LevelContext ctx(input);
  const TargetModel& model = *input.model;
  const double beta = input.beta;
  const std::size_t n = input.chain_length;

  LevelRunRecord rec;
  rec.states.reserve(n);
  rec.log_target.reserve(n);
  rec.log_likelihoods.reserve(n);
  rec.seed_indices.reserve(n - 1);

  ParamVector cur = initial_state(rng, ctx);
  double ll_cur = model.log_likelihood(cur);
  double lt_cur = model.log_prior(cur) + beta * ll_cur;
  double lphat_cur = ctx.log_density(cur, lt_cur);

  rec.states.push_back(cur);
  rec.log_target.push_back(lt_cur);
  rec.log_likelihoods.push_back(ll_cur);

  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t k = ctx.sample_seed_index(rng);
    rec.seed_indices.push_back(static_cast<std::uint32_t>(k));

    const auto seed_span = ctx.prev_point(k);
    ParamVector cand(seed_span.size());
    for (std::size_t d = 0; d < cand.size(); ++d) {
      cand[d] = seed_span[d] + input.proposal_scale * rng.normal();
    }

    const double lp_cand = model.log_prior(cand);
    double ll_cand = 0.0;
    double lt_cand = kNegInf;
    if (lp_cand != kNegInf) {
      ll_cand = model.log_likelihood(cand);
      lt_cand = lp_cand + beta * ll_cand;
    }

    bool moved = false;
    if (local_accept(rng, lt_cand, ctx.log_target_prev(k))) {
      rec.local_accepts += 1;
      // Locally-accepted candidate: independence-sampler accept/reject
      // against the mixture proposal.
      const double lphat_cand = ctx.log_density(cand, lt_cand);
      if (global_accept(rng, lt_cur, lphat_cur, lt_cand, lphat_cand)) {
        rec.global_accepts += 1;
        cur = std::move(cand);
        ll_cur = ll_cand;
        lt_cur = lt_cand;
        lphat_cur = lphat_cand;
        moved = true;
      }
    }
    // A rejected local candidate makes the global candidate the seed point
    // itself, which is always rejected: the state repeats.
    if (!moved) rec.repeats += 1;

    rec.states.push_back(cur);
    rec.log_target.push_back(lt_cur);
    rec.log_likelihoods.push_back(ll_cur);
  }

  return rec;
}

}  // namespace aims
