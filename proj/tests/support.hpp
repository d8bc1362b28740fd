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

// Test-only reference implementations, deliberately written as direct
// transcriptions in linear space so they stay independent of the library's
// log-space code paths.

#ifndef AIMS_TESTS_SUPPORT_HPP
#define AIMS_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "aims/model.hpp"
#include "aims/schedule.hpp"

namespace aims::testing {

/// Two-sample Kolmogorov-Smirnov statistic.
inline double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) {
      ++i;
    } else {
      ++j;
    }
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  return d;
}

/// KS rejection threshold at level alpha = 0.01.
inline double ks_critical_001(std::size_t n, std::size_t m) {
  const double nn = static_cast<double>(n);
  const double mm = static_cast<double>(m);
  return 1.628 * std::sqrt((nn + mm) / (nn * mm));
}

/// Direct linear-space evaluation of the mixture global-proposal density:
/// sum_i w_i * q(theta | p_i) * min(1, pi(theta)/pi(p_i)).
inline double pihat_linear(const ParamVector& theta,
                           const std::vector<ParamVector>& prev,
                           const std::vector<double>& norm_weights,
                           double proposal_scale, const TargetModel& model,
                           double beta) {
  const std::size_t d = model.dim();
  const double var = proposal_scale * proposal_scale;
  const double qnorm = std::pow(2.0 * M_PI * var, -0.5 * static_cast<double>(d));
  const double pi_theta = std::exp(log_tempered_density(model, theta, beta));
  double total = 0.0;
  for (std::size_t i = 0; i < prev.size(); ++i) {
    double d2 = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double diff = theta[k] - prev[i][k];
      d2 += diff * diff;
    }
    const double q = qnorm * std::exp(-0.5 * d2 / var);
    const double pi_prev = std::exp(log_tempered_density(model, prev[i], beta));
    total += norm_weights[i] * q * std::min(1.0, pi_theta / pi_prev);
  }
  return total;
}

/// First-crossing scan for the annealing-exponent equation: smallest delta
/// on a uniform grid with ESS(delta) <= gamma * N, or the full jump when
/// none crosses.
inline double brute_force_next_beta(const std::vector<double>& logls,
                                    double beta_prev, double gamma,
                                    double resolution = 1e-6) {
  const double n = static_cast<double>(logls.size());
  const auto ess_at = [&](double delta) {
    std::vector<double> w(logls.size());
    double mx = -1e300;
    for (std::size_t i = 0; i < w.size(); ++i) mx = std::max(mx, delta * logls[i]);
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double e = std::exp(delta * logls[i] - mx);
      s1 += e;
      s2 += e * e;
    }
    return s1 * s1 / s2;
  };
  const double dmax = 1.0 - beta_prev;
  const auto steps = static_cast<std::size_t>(dmax / resolution);
  for (std::size_t k = 1; k <= steps; ++k) {
    const double delta = static_cast<double>(k) * resolution;
    if (ess_at(delta) < gamma * n) return beta_prev + delta;
  }
  return 1.0;
}

}  // namespace aims::testing

#endif  // AIMS_TESTS_SUPPORT_HPP
