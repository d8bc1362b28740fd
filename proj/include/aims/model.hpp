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

#ifndef AIMS_MODEL_HPP
#define AIMS_MODEL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aims/math.hpp"
#include "aims/rng.hpp"

namespace aims {

/// Axis-aligned box support. Closed: boundary points are in-support.
struct SupportBox {
  std::vector<double> lo;
  std::vector<double> hi;

  bool contains(std::span<const double> theta) const {
    for (std::size_t i = 0; i < theta.size(); ++i) {
      if (theta[i] < lo[i] || theta[i] > hi[i]) return false;
    }
    return true;
  }
};

/// A Bayesian target: prior/likelihood pair with direct prior sampling.
///
/// Contract: log_prior(theta) == -inf exactly off the support;
/// log_likelihood is finite everywhere on the support; prior draws always
/// land in the support. All evaluations are pure and safe to call
/// concurrently; samplers take an explicit Rng, one per thread.
class TargetModel {
 public:
  virtual ~TargetModel() = default;

  virtual std::size_t dim() const = 0;
  virtual double log_prior(const ParamVector& theta) const = 0;
  virtual double log_likelihood(const ParamVector& theta) const = 0;
  virtual ParamVector sample_prior(Rng& rng) const = 0;

  /// Box support, or nullptr when the support is all of R^d.
  virtual const SupportBox* support_box() const { return nullptr; }

  virtual std::string id() const = 0;

  /// Model constants, serialized into run summaries for provenance.
  virtual nlohmann::json constants() const = 0;

  bool in_support(const ParamVector& theta) const {
    const SupportBox* box = support_box();
    return box == nullptr || box->contains(theta);
  }
};

/// log pi_beta(theta) = log pi_0(theta) + beta * log L(theta), the annealed
/// family bridging prior (beta = 0) and posterior (beta = 1). Off-support
/// points map to -inf, never an error.
inline double log_tempered_density(const TargetModel& model,
                                   const ParamVector& theta, double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("log_tempered_density: beta outside [0,1]");
  }
  const double lp = model.log_prior(theta);
  if (lp == kNegInf) return kNegInf;
  if (beta == 0.0) return lp;
  return lp + beta * model.log_likelihood(theta);
}

/// h(theta) = max of the coordinates.
inline double max_component(const ParamVector& theta) {
  double m = theta[0];
  for (double v : theta) m = std::max(m, v);
  return m;
}

}  // namespace aims

#endif  // AIMS_MODEL_HPP
