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

#ifndef AIMS_KERNEL_HPP
#define AIMS_KERNEL_HPP

#include <cstdint>

#include "aims/model.hpp"
#include "aims/schedule.hpp"

namespace aims {

/// Inputs of one annealing-level chain: the weighted previous-level sample,
/// the level's annealing parameter, the local proposal scale and the chain
/// length.
struct LevelInput {
  const WeightedSampleSet* prev = nullptr;
  double beta = 1.0;
  double proposal_scale = 0.2;
  std::size_t chain_length = 0;
  const TargetModel* model = nullptr;
};

/// One level's chain plus its acceptance bookkeeping.
struct LevelRunRecord {
  std::vector<ParamVector> states;
  std::vector<double> log_target;       // log pi_j at each state
  std::vector<double> log_likelihoods;  // log L at each state, reused as the
                                        // next level's cache
  std::vector<std::uint32_t> seed_indices;  // k drawn at each transition
  std::size_t local_accepts = 0;
  std::size_t global_accepts = 0;
  std::size_t repeats = 0;  // transitions that kept the current state
};

/// Per-level evaluation context. Owns the flattened previous-level points,
/// their cached log pi_j values, the weight CDF used for seed selection and
/// the Gaussian proposal constants. Immutable once built; log_density is
/// safe to call concurrently.
class LevelContext {
 public:
  explicit LevelContext(const LevelInput& input);

  const LevelInput& input() const { return input_; }
  std::size_t dim() const { return dim_; }
  std::size_t prev_size() const { return n_prev_; }

  std::span<const double> prev_point(std::size_t i) const {
    return {flat_prev_.data() + i * dim_, dim_};
  }

  double log_target_prev(std::size_t i) const { return log_target_prev_[i]; }

  /// Categorical seed draw using the precomputed weight CDF; identical in
  /// law (and in realized value, given the same uniform) to
  /// select_seed_index.
  std::size_t sample_seed_index(Rng& rng) const;

  std::size_t max_weight_index() const { return max_weight_index_; }

  bool matches_prev_point(const ParamVector& theta) const;

  /// Log-density of the weighted-mixture global proposal at theta, given
  /// log pi_j(theta). Computed as a fixed-order streaming log-sum-exp over
  /// the previous-level points. Throws std::domain_error when theta is
  /// bitwise equal to a previous-level point, where the proposal has an
  /// atom instead of a density.
  double log_density(const ParamVector& theta, double log_target_theta) const;

 private:
  LevelInput input_;
  std::size_t dim_ = 0;
  std::size_t n_prev_ = 0;
  double proposal_var_ = 0.0;
  double log_q_norm_ = 0.0;  // -d/2 * log(2 pi c^2)
  std::vector<double> flat_prev_;
  std::vector<double> log_norm_weights_;
  std::vector<double> log_target_prev_;
  std::vector<double> weight_cdf_;
  std::size_t max_weight_index_ = 0;
};

/// Draws an index with the probabilities given by the normalized weights.
std::size_t select_seed_index(Rng& rng, const std::vector<double>& norm_weights);

/// Gaussian random-walk candidate: center + c * z, z iid standard normal.
ParamVector draw_local_candidate(Rng& rng, const ParamVector& center, double c);

/// Local accept/reject: true with probability
/// min(1, exp(log_target_candidate - log_target_seed)). Off-support
/// candidates (-inf) are always rejected.
bool local_accept(Rng& rng, double log_target_candidate, double log_target_seed);

/// Global (independence-sampler) accept/reject with the ratio
/// pi_j(cand) * pihat(cur) / (pi_j(cur) * pihat(cand)); all four log values
/// must be finite.
bool global_accept(Rng& rng, double log_target_current, double log_pihat_current,
                   double log_target_candidate, double log_pihat_candidate);

/// Free-function form of LevelContext::log_density.
double global_proposal_log_density(const ParamVector& theta,
                                   const LevelContext& ctx,
                                   double log_target_theta);

/// Initial chain state: Gaussian draw centered at the highest-weight
/// previous-level point (lowest index on ties), redrawn while off-support
/// or coincident with a previous point. Throws std::runtime_error
/// ("cannot initialize in support") after 100 failed attempts.
ParamVector initial_state(Rng& rng, const LevelContext& ctx);

/// Runs the level-j chain: per transition, a seed is drawn from the
/// weights, a local random-walk candidate is accepted or rejected against
/// the seed, and a locally-accepted candidate is then accepted or rejected
/// as an independence-sampler move against the mixture proposal. A local
/// rejection repeats the current state; that branch is decided by the
/// rejection flag, never by comparing coordinates.
LevelRunRecord run_level(Rng& rng, const LevelInput& input);

}  // namespace aims

#endif  // AIMS_KERNEL_HPP
