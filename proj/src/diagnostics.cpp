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

#include "aims/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aims/kernel.hpp"
#include "aims/quadrature.hpp"

namespace aims {

Moments posterior_moments(const std::vector<ParamVector>& states) {
  const std::size_t n = states.size();
  if (n < 2) throw std::invalid_argument("posterior_moments: need >= 2 states");
  const std::size_t d = states[0].size();

  Moments m;
  m.mean.assign(d, 0.0);
  for (const auto& s : states) {
    for (std::size_t k = 0; k < d; ++k) m.mean[k] += s[k];
  }
  for (auto& v : m.mean) v /= static_cast<double>(n);

  m.covariance.assign(d, std::vector<double>(d, 0.0));
  for (const auto& s : states) {
    for (std::size_t a = 0; a < d; ++a) {
      const double ca = s[a] - m.mean[a];
      for (std::size_t b = a; b < d; ++b) {
        m.covariance[a][b] += ca * (s[b] - m.mean[b]);
      }
    }
  }
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      m.covariance[a][b] /= static_cast<double>(n - 1);
      m.covariance[b][a] = m.covariance[a][b];
    }
  }
  return m;
}

bool stopping_rule(const std::vector<double>& estimates, double epsilon) {
  if (estimates.size() < 2) {
    throw std::invalid_argument("stopping_rule: need >= 2 estimates");
  }
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("stopping_rule: epsilon must be > 0");
  }
  const auto [lo, hi] = std::minmax_element(estimates.begin(), estimates.end());
  return *hi - *lo < epsilon;
}

EnsembleStats make_ensemble_stats(std::vector<double> estimates,
                                  std::optional<double> truth) {
  if (estimates.empty()) {
    throw std::invalid_argument("make_ensemble_stats: empty ensemble");
  }
  EnsembleStats s;
  s.estimates = std::move(estimates);
  const auto span = std::span<const double>(s.estimates);
  s.mean = mean(span);
  const double k = static_cast<double>(s.estimates.size());
  double ss = 0.0;
  for (double e : s.estimates) ss += (e - s.mean) * (e - s.mean);
  s.variance = ss / k;
  s.sd = s.estimates.size() > 1 ? std::sqrt(ss / (k - 1.0)) : 0.0;
  s.cov = s.mean != 0.0 ? s.sd / std::abs(s.mean) : 0.0;
  s.truth = truth;
  if (truth) {
    s.bias = s.mean - *truth;
    s.mse = s.bias * s.bias + s.variance;
  }
  return s;
}

double ergodicity_bound_log_m_with_max(const TargetModel& model,
                                       const WeightedSampleSet& prev,
                                       double proposal_scale,
                                       double max_density) {
  const SupportBox* box = model.support_box();
  if (box == nullptr) throw std::invalid_argument("M undefined");
  if (prev.norm_weights.size() != prev.size()) {
    throw std::invalid_argument("ergodicity_bound_log_m: weights missing");
  }
  const std::size_t d = model.dim();
  const double var = proposal_scale * proposal_scale;

  std::vector<double> terms;
  terms.reserve(prev.size());
  for (std::size_t i = 0; i < prev.size(); ++i) {
    const double w = prev.norm_weights[i];
    if (w <= 0.0) continue;
    // The Gaussian's minimum over the box sits at the farthest corner.
    double d2 = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double lo = prev.points[i][k] - box->lo[k];
      const double hi = box->hi[k] - prev.points[i][k];
      const double far = std::max(lo, hi);
      d2 += far * far;
    }
    terms.push_back(std::log(w) + iso_gaussian_logpdf(d2, d, var));
  }
  if (terms.empty()) throw std::invalid_argument("degenerate weight set");
  std::sort(terms.begin(), terms.end(), std::greater<>());
  const double denom = log_sum_exp(terms);

  return std::max(0.0, std::log(max_density) - denom);
}

double ergodicity_bound_log_m(const TargetModel& model,
                              const WeightedSampleSet& prev, double beta,
                              double proposal_scale,
                              std::size_t quad_intervals) {
  if (model.support_box() == nullptr) throw std::invalid_argument("M undefined");
  if (model.dim() != 2) {
    throw std::invalid_argument(
        "ergodicity_bound_log_m: implemented for 2-D box supports");
  }
  const GridTruth2D truth = simpson_truth_2d(model, beta, quad_intervals);
  return ergodicity_bound_log_m_with_max(model, prev, proposal_scale,
                                         truth.max_density);
}

double ergodicity_bound_m(const TargetModel& model, const WeightedSampleSet& prev,
                          double beta, double proposal_scale,
                          std::size_t quad_intervals) {
  return std::exp(
      ergodicity_bound_log_m(model, prev, beta, proposal_scale, quad_intervals));
}

double pihat_expectation_demo(Rng& rng, const WeightedSampleSet& prev,
                              const TargetModel& model, double beta,
                              double proposal_scale,
                              const std::function<double(const ParamVector&)>& h,
                              std::size_t n_draws) {
  if (n_draws == 0) {
    throw std::invalid_argument("pihat_expectation_demo: need draws");
  }
  LevelInput input;
  input.prev = &prev;
  input.beta = beta;
  input.proposal_scale = proposal_scale;
  input.chain_length = 2;  // context only; no chain is run here
  input.model = &model;
  const LevelContext ctx(input);

  double acc = 0.0;
  for (std::size_t i = 0; i < n_draws; ++i) {
    const std::size_t k = ctx.sample_seed_index(rng);
    const auto seed = ctx.prev_point(k);
    ParamVector cand(seed.size());
    for (std::size_t d = 0; d < cand.size(); ++d) {
      cand[d] = seed[d] + proposal_scale * rng.normal();
    }
    const double lt = log_tempered_density(model, cand, beta);
    if (local_accept(rng, lt, ctx.log_target_prev(k))) {
      acc += h(cand);
    } else {
      // The rejected mass sits in the proposal's atom at the seed point.
      acc += h(ParamVector(seed.begin(), seed.end()));
    }
  }
  return acc / static_cast<double>(n_draws);
}

std::size_t count_modes_visited(const std::vector<ParamVector>& states,
                                const std::vector<ParamVector>& centers,
                                double radius) {
  const double r2 = radius * radius;
  std::size_t visited = 0;
  for (const auto& c : centers) {
    for (const auto& s : states) {
      if (squared_distance(s, c) <= r2) {
        visited += 1;
        break;
      }
    }
  }
  return visited;
}

}  // namespace aims
