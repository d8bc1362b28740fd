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

#ifndef AIMS_DIAGNOSTICS_HPP
#define AIMS_DIAGNOSTICS_HPP

#include <functional>
#include <optional>

#include "aims/model.hpp"
#include "aims/schedule.hpp"

namespace aims {

/// Sample-mean estimator of E[h] over chain states, optionally discarding
/// a burn-in prefix.
template <typename H>
double estimate_expectation(const std::vector<ParamVector>& states, H&& h,
                            std::size_t burn_in = 0) {
  if (states.size() <= burn_in) {
    throw std::invalid_argument("estimate_expectation: empty chain");
  }
  double s = 0.0;
  for (std::size_t i = burn_in; i < states.size(); ++i) s += h(states[i]);
  return s / static_cast<double>(states.size() - burn_in);
}

struct Moments {
  ParamVector mean;
  std::vector<std::vector<double>> covariance;  // unbiased, d x d
};

/// Sample mean vector and unbiased sample covariance. Needs >= 2 states.
Moments posterior_moments(const std::vector<ParamVector>& states);

/// True when the largest pairwise gap among the estimates is below epsilon.
bool stopping_rule(const std::vector<double>& estimates, double epsilon);

/// Statistics of one estimator across an ensemble of independent runs.
/// `variance` uses the population (1/K) convention so that
/// mse == bias^2 + variance holds as an identity; `sd`/`cov` use the
/// unbiased (1/(K-1)) convention.
struct EnsembleStats {
  std::vector<double> estimates;
  double mean = 0.0;
  double sd = 0.0;
  double cov = 0.0;  // sd / |mean|
  double variance = 0.0;
  std::optional<double> truth;
  double bias = 0.0;  // mean - truth, when truth supplied
  double mse = 0.0;   // mean squared error vs truth, when truth supplied
};

EnsembleStats make_ensemble_stats(std::vector<double> estimates,
                                  std::optional<double> truth = std::nullopt);

/// Log of the uniform-ergodicity constant M for a level over a compact box:
/// M = ( sum_i w_i * min_theta q(theta | p_i) / max_theta pi_beta(theta) )^-1.
/// The Gaussian proposal's minimum over the box is attained at the farthest
/// corner from each point (analytic); the normalized density maximum comes
/// from Simpson quadrature plus compass-search refinement. Implemented for
/// 2-D box-supported targets; throws std::invalid_argument("M undefined")
/// when the support is not compact. The weighted sum is accumulated in
/// sorted order, so the result is invariant to permuting the points.
double ergodicity_bound_log_m(const TargetModel& model,
                              const WeightedSampleSet& prev, double beta,
                              double proposal_scale,
                              std::size_t quad_intervals = 2000);

/// Same bound with the normalized density maximum supplied by the caller
/// (e.g. a cached quadrature result shared across an ensemble).
double ergodicity_bound_log_m_with_max(const TargetModel& model,
                                       const WeightedSampleSet& prev,
                                       double proposal_scale,
                                       double max_density);

/// exp of the above; +inf when the bound overflows. Always >= 1.
double ergodicity_bound_m(const TargetModel& model, const WeightedSampleSet& prev,
                          double beta, double proposal_scale,
                          std::size_t quad_intervals = 2000);

/// Monte Carlo average of h under the mixture global proposal, realized by
/// its sampling recipe: select a seed by weight, draw a local Gaussian
/// candidate, keep it with the local acceptance probability and otherwise
/// keep the seed. Demonstrates the proposal's convergence to the annealed
/// target as the previous-level size grows.
double pihat_expectation_demo(Rng& rng, const WeightedSampleSet& prev,
                              const TargetModel& model, double beta,
                              double proposal_scale,
                              const std::function<double(const ParamVector&)>& h,
                              std::size_t n_draws);

/// Number of centers having at least one state within `radius`.
std::size_t count_modes_visited(const std::vector<ParamVector>& states,
                                const std::vector<ParamVector>& centers,
                                double radius);

}  // namespace aims

#endif  // AIMS_DIAGNOSTICS_HPP
