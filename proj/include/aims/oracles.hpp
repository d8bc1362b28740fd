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

#ifndef AIMS_ORACLES_HPP
#define AIMS_ORACLES_HPP

#include <cstddef>

#include "aims/rng.hpp"

namespace aims {

struct OracleEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t draws = 0;
};

/// Reference value of E[max component] under the truncated two-Gaussian
/// target, by direct Monte Carlo: draw from the untruncated equal mixture
/// of N(+-0.5...+-0.5, 0.25 I) and reject draws outside the cube [-2,2]^d.
/// Independent of every sampler code path.
OracleEstimate bimodal_max_component_direct(std::size_t dim,
                                            std::size_t n_draws, Rng& rng);

}  // namespace aims

#endif  // AIMS_ORACLES_HPP
