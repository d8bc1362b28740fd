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

#include "aims/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aims {

void WeightedSampleSet::reweight(double beta_prev, double beta_next) {
  log_weights = compute_log_weights(log_likelihoods, beta_prev, beta_next);
  norm_weights = normalize_log_weights(log_weights);
}

std::vector<double> compute_log_weights(const std::vector<double>& log_likelihoods,
                                        double beta_prev, double beta_next) {
  if (beta_next < beta_prev) {
    throw std::invalid_argument("compute_log_weights: beta_next < beta_prev");
  }
  const double delta = beta_next - beta_prev;
  std::vector<double> lw(log_likelihoods.size());
  for (std::size_t i = 0; i < lw.size(); ++i) lw[i] = delta * log_likelihoods[i];
  return lw;
}

std::vector<double> normalize_log_weights(const std::vector<double>& log_weights) {
  const double lse = log_sum_exp(log_weights);
  if (lse == kNegInf) {
    throw std::invalid_argument("degenerate weight set");
  }
  std::vector<double> w(log_weights.size());
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(log_weights[i] - lse);
    total += w[i];
  }
  for (auto& v : w) v /= total;
  return w;
}

double ess_estimate(const std::vector<double>& norm_weights) {
  double s2 = 0.0;
  for (double w : norm_weights) s2 += w * w;
  const double n = static_cast<double>(norm_weights.size());
  return std::clamp(1.0 / s2, 1.0, n);
}

namespace {

// ESS of the weights exp(delta * logL), normalized.
double ess_at_delta(const std::vector<double>& logls, double delta) {
  double m = kNegInf;
  for (double l : logls) m = std::max(m, delta * l);
  double s1 = 0.0;
  double s2 = 0.0;
  for (double l : logls) {
    const double e = std::exp(delta * l - m);
    s1 += e;
    s2 += e * e;
  }
  const double n = static_cast<double>(logls.size());
  return std::clamp(s1 * s1 / s2, 1.0, n);
}

}  // namespace

double solve_next_beta(const std::vector<double>& log_likelihoods,
                       double beta_prev, double gamma) {
  if (!all_finite(log_likelihoods)) {
    throw std::invalid_argument("solve_next_beta: non-finite log-likelihood");
  }
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("solve_next_beta: gamma outside (0,1)");
  }
  if (!(beta_prev < 1.0)) {
    throw std::invalid_argument("solve_next_beta: beta_prev must be < 1");
  }

  const double n = static_cast<double>(log_likelihoods.size());
  const double target = gamma * n;
  const double delta_max = 1.0 - beta_prev;
  constexpr double kTol = 1e-10;

  if (ess_at_delta(log_likelihoods, delta_max) >= target) return 1.0;

  const auto bisect = [&](double lo, double hi) {
    // invariant: ess(lo) >= target > ess(hi)
    while (hi - lo > kTol) {
      const double mid = 0.5 * (lo + hi);
      if (ess_at_delta(log_likelihoods, mid) >= target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  double delta = bisect(0.0, delta_max);

  // The ESS is monotone non-increasing in the exponent for any weight set,
  // so the crossing is unique; probe below the root anyway and fall back to
  // a first-crossing grid scan if a smaller crossing exists.
  bool monotone = true;
  for (int k = 1; k <= 8; ++k) {
    const double probe = delta * static_cast<double>(k) / 9.0;
    if (ess_at_delta(log_likelihoods, probe) < target) {
      monotone = false;
      break;
    }
  }
  if (!monotone) {
    constexpr int kGrid = 10000;
    for (int k = 1; k <= kGrid; ++k) {
      const double d = delta_max * static_cast<double>(k) / kGrid;
      if (ess_at_delta(log_likelihoods, d) < target) {
        delta = bisect(delta_max * static_cast<double>(k - 1) / kGrid, d);
        break;
      }
    }
  }

  return std::min(1.0, beta_prev + delta);
}

double posterior_similarity_ess(const std::vector<double>& log_likelihoods,
                                double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("posterior_similarity_ess: beta outside [0,1]");
  }
  return ess_at_delta(log_likelihoods, 1.0 - beta);
}

}  // namespace aims
