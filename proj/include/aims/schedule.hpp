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

#ifndef AIMS_SCHEDULE_HPP
#define AIMS_SCHEDULE_HPP

#include <cstddef>
#include <vector>

#include "aims/math.hpp"

namespace aims {

/// Samples from one annealing level together with their importance weights
/// toward the next level.
struct WeightedSampleSet {
  std::vector<ParamVector> points;
  std::vector<double> log_likelihoods;  // cached log L at each point
  std::vector<double> log_weights;
  std::vector<double> norm_weights;     // sums to 1

  std::size_t size() const { return points.size(); }

  /// Fills log_weights/norm_weights for the jump beta_prev -> beta_next.
  void reweight(double beta_prev, double beta_next);
};

/// Realized annealing schedule 0 = beta_0 < ... < beta_m = 1 with the
/// per-level ESS bookkeeping.
struct AnnealingSchedule {
  std::vector<double> betas;             // m + 1 entries, betas[0] = 0
  std::vector<double> ess_to_next;       // ESS of the level j -> j+1 weights
  std::vector<double> ess_to_posterior;  // ESS of the exponent (1 - beta_j) weights

  std::size_t levels() const { return betas.empty() ? 0 : betas.size() - 1; }
};

/// Log importance weights between adjacent tempered densities:
/// (beta_next - beta_prev) * logL, entrywise.
std::vector<double> compute_log_weights(const std::vector<double>& log_likelihoods,
                                        double beta_prev, double beta_next);

/// Normalizes log-weights to probabilities via max-shift log-sum-exp.
/// Throws std::invalid_argument("degenerate weight set") when every entry
/// is -inf.
std::vector<double> normalize_log_weights(const std::vector<double>& log_weights);

/// Effective sample size 1 / sum(w_i^2) of normalized weights; in [1, N].
double ess_estimate(const std::vector<double>& norm_weights);

/// Smallest beta_next in (beta_prev, 1] whose reweighting ESS equals
/// gamma * N, found by bisection on the exponent to 1e-10 absolute; returns
/// exactly 1 when even the full jump keeps ESS/N >= gamma. A 1e4-point grid
/// scan backs up the bisection if the ESS curve misbehaves on the bracket.
double solve_next_beta(const std::vector<double>& log_likelihoods,
                       double beta_prev, double gamma);

/// ESS of the weights with exponent (1 - beta): how similar the level-beta
/// density is to the posterior. This is the loop guard of the full
/// procedure.
double posterior_similarity_ess(const std::vector<double>& log_likelihoods,
                                double beta);

}  // namespace aims

#endif  // AIMS_SCHEDULE_HPP
