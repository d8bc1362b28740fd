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

#ifndef AIMS_MATH_HPP
#define AIMS_MATH_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace aims {

/// Point in the d-dimensional parameter space.
using ParamVector = std::vector<double>;

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kLogTwoPi = 1.8378770664093454836;

inline bool all_finite(std::span<const double> xs) {
  for (double x : xs) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

/// log(sum_i exp(x_i)) with max-shift; -inf entries contribute nothing,
/// all -inf gives -inf.
inline double log_sum_exp(std::span<const double> xs) {
  double m = kNegInf;
  for (double x : xs) m = std::max(m, x);
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

/// Log-density of an isotropic Gaussian in d dimensions, given the squared
/// distance to the mean and the per-coordinate variance.
inline double iso_gaussian_logpdf(double dist2, std::size_t d, double var) {
  return -0.5 * static_cast<double>(d) * (kLogTwoPi + std::log(var)) -
         0.5 * dist2 / var;
}

inline double squared_distance(std::span<const double> a,
                               std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    s += diff * diff;
  }
  return s;
}

inline double mean(std::span<const double> xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

/// Unbiased sample variance (n-1 denominator).
inline double sample_variance(std::span<const double> xs) {
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return s / static_cast<double>(xs.size() - 1);
}

inline double sample_sd(std::span<const double> xs) {
  return std::sqrt(sample_variance(xs));
}

/// Lag-1 autocorrelation; 0 for near-constant sequences.
inline double lag1_autocorrelation(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n < 2) return 0.0;
  const double m = mean(xs);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = xs[i] - m;
    den += c * c;
    if (i + 1 < n) num += c * (xs[i + 1] - m);
  }
  if (den <= 0.0) return 0.0;
  return num / den;
}

/// Linearly interpolated quantile, q in [0,1]; takes a copy and sorts it.
inline double quantile(std::vector<double> xs, double q) {
  std::sort(xs.begin(), xs.end());
  const double pos = q * static_cast<double>(xs.size() - 1);
  const std::size_t i = static_cast<std::size_t>(pos);
  if (i + 1 >= xs.size()) return xs.back();
  const double frac = pos - static_cast<double>(i);
  return xs[i] * (1.0 - frac) + xs[i + 1] * frac;
}

inline double median(std::vector<double> xs) { return quantile(std::move(xs), 0.5); }

/// Crude chain ESS from the lag-1 autocorrelation, clamped to [1, n].
inline double chain_ess_lag1(std::span<const double> xs) {
  const double n = static_cast<double>(xs.size());
  const double rho = std::min(0.999, std::max(-0.999, lag1_autocorrelation(xs)));
  const double ess = n * (1.0 - rho) / (1.0 + rho);
  return std::min(n, std::max(1.0, ess));
}

}  // namespace aims

#endif  // AIMS_MATH_HPP
