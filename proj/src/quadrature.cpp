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

#include "aims/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace aims {

namespace {

double simpson_weight(std::size_t i, std::size_t n) {
  if (i == 0 || i == n) return 1.0;
  return (i % 2 == 1) ? 4.0 : 2.0;
}

}  // namespace

GridTruth2D simpson_truth_2d(const TargetModel& model, double beta,
                             std::size_t intervals) {
  if (model.dim() != 2) {
    throw std::invalid_argument("simpson_truth_2d: model must be 2-D");
  }
  const SupportBox* box = model.support_box();
  if (box == nullptr) {
    throw std::invalid_argument("simpson_truth_2d: model must have box support");
  }
  if (intervals < 2 || intervals % 2 != 0) {
    throw std::invalid_argument("simpson_truth_2d: intervals must be even");
  }

  const std::size_t n = intervals;
  const double x0 = box->lo[0];
  const double y0 = box->lo[1];
  const double hx = (box->hi[0] - x0) / static_cast<double>(n);
  const double hy = (box->hi[1] - y0) / static_cast<double>(n);

  double z = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
  double best = kNegInf;
  std::array<double, 2> best_pt{};

  ParamVector theta(2);
  for (std::size_t i = 0; i <= n; ++i) {
    theta[0] = x0 + hx * static_cast<double>(i);
    const double wx = simpson_weight(i, n);
    for (std::size_t j = 0; j <= n; ++j) {
      theta[1] = y0 + hy * static_cast<double>(j);
      const double lt = log_tempered_density(model, theta, beta);
      if (lt > best) {
        best = lt;
        best_pt = {theta[0], theta[1]};
      }
      const double f = wx * simpson_weight(j, n) * std::exp(lt);
      z += f;
      sx += f * theta[0];
      sy += f * theta[1];
      sxx += f * theta[0] * theta[0];
      syy += f * theta[1] * theta[1];
      sxy += f * theta[0] * theta[1];
    }
  }
  const double cell = hx * hy / 9.0;
  z *= cell;
  sx *= cell;
  sy *= cell;
  sxx *= cell;
  syy *= cell;
  sxy *= cell;

  // Refine the density maximum with a shrinking compass search.
  {
    ParamVector p = {best_pt[0], best_pt[1]};
    double step = std::max(hx, hy);
    double val = best;
    while (step > 1e-12) {
      bool improved = false;
      for (const auto& dir : {std::array<double, 2>{1, 0},
                              std::array<double, 2>{-1, 0},
                              std::array<double, 2>{0, 1},
                              std::array<double, 2>{0, -1}}) {
        ParamVector q = {
            std::clamp(p[0] + step * dir[0], box->lo[0], box->hi[0]),
            std::clamp(p[1] + step * dir[1], box->lo[1], box->hi[1])};
        const double lv = log_tempered_density(model, q, beta);
        if (lv > val) {
          val = lv;
          p = q;
          improved = true;
        }
      }
      if (!improved) step *= 0.5;
    }
    best = val;
    best_pt = {p[0], p[1]};
  }

  GridTruth2D out;
  out.z = z;
  out.mean = {sx / z, sy / z};
  out.var1 = sxx / z - out.mean[0] * out.mean[0];
  out.var2 = syy / z - out.mean[1] * out.mean[1];
  out.cov12 = sxy / z - out.mean[0] * out.mean[1];
  out.max_density = std::exp(best) / z;
  out.argmax = best_pt;
  return out;
}

}  // namespace aims
