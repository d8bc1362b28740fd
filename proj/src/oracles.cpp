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

#include "aims/oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "aims/math.hpp"

namespace aims {

OracleEstimate bimodal_max_component_direct(std::size_t dim,
                                            std::size_t n_draws, Rng& rng) {
  if (dim == 0 || n_draws < 2) {
    throw std::invalid_argument("bimodal_max_component_direct: bad arguments");
  }
  constexpr double kHalf = 2.0;
  constexpr double kOffset = 0.5;
  constexpr double kSd = 0.5;

  // Welford accumulation; only accepted draws count.
  double m = 0.0;
  double m2 = 0.0;
  std::size_t accepted = 0;
  std::vector<double> theta(dim);
  while (accepted < n_draws) {
    const double mu = rng.uniform01() < 0.5 ? kOffset : -kOffset;
    bool inside = true;
    double maxc = kNegInf;
    for (std::size_t k = 0; k < dim; ++k) {
      const double v = mu + kSd * rng.normal();
      if (v < -kHalf || v > kHalf) {
        inside = false;
        break;
      }
      theta[k] = v;
      if (v > maxc) maxc = v;
    }
    if (!inside) continue;
    accepted += 1;
    const double delta = maxc - m;
    m += delta / static_cast<double>(accepted);
    m2 += delta * (maxc - m);
  }

  OracleEstimate out;
  out.value = m;
  out.draws = n_draws;
  const double var = m2 / static_cast<double>(n_draws - 1);
  out.std_error = std::sqrt(var / static_cast<double>(n_draws));
  return out;
}

}  // namespace aims
