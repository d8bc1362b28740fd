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

#ifndef AIMS_QUADRATURE_HPP
#define AIMS_QUADRATURE_HPP

#include <array>
#include <cstddef>

#include "aims/model.hpp"

namespace aims {

/// Deterministic ground truth for a two-dimensional box-supported target,
/// from composite Simpson quadrature of the annealed density over the box.
struct GridTruth2D {
  double z = 0.0;  // normalizing constant of pi_0 * L^beta over the box
  std::array<double, 2> mean{};
  double var1 = 0.0;
  double var2 = 0.0;
  double cov12 = 0.0;
  double max_density = 0.0;  // max of the normalized density
  std::array<double, 2> argmax{};
};

/// Simpson-rule moments on an `intervals` x `intervals` grid (so
/// intervals+1 nodes per axis; `intervals` must be even). The density
/// maximum is taken over the grid and refined by a shrinking compass
/// search from the best grid points. Requires a 2-D model with a box
/// support.
GridTruth2D simpson_truth_2d(const TargetModel& model, double beta,
                             std::size_t intervals = 2000);

}  // namespace aims

#endif  // AIMS_QUADRATURE_HPP
