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

#ifndef AIMS_OUTPUTS_HPP
#define AIMS_OUTPUTS_HPP

#include <string>

#include "aims/diagnostics.hpp"
#include "aims/driver.hpp"

namespace aims {

/// Shortest round-trip decimal form of a double (via std::to_chars), so
/// identical values always serialize to identical bytes.
std::string format_double(double v);

/// Chain CSV: one row per state, columns
/// level,step,theta0..theta{d-1},log_target. Level 0 rows are the prior
/// draws with the prior log-density as log_target. Covers whichever levels
/// the run kept.
void write_chain_csv(const std::string& path, const AimsRunResult& result,
                     const TargetModel& model);

/// Same schema for a baseline chain (written as level 0).
void write_rwmh_csv(const std::string& path, const RwmhResult& result);

nlohmann::json schedule_to_json(const AnnealingSchedule& schedule);
nlohmann::json level_summaries_to_json(const std::vector<LevelSummary>& levels);

/// Full single-run summary: model constants, config echo, schedule, level
/// counters and posterior moments. `timestamp` is the only
/// run-to-run-varying field.
nlohmann::json make_run_summary(const TargetModel& model, const RunConfig& config,
                                const AimsRunResult& result);

void write_json(const std::string& path, const nlohmann::json& j);

/// Scatter of 2-D samples over a box, with optional cross markers.
void write_scatter_svg(const std::string& path,
                       const std::vector<ParamVector>& points,
                       const SupportBox& box,
                       const std::vector<ParamVector>& crosses);

/// 2-D chain trajectory as a polyline over the box.
void write_trajectory_svg(const std::string& path,
                          const std::vector<ParamVector>& states,
                          const SupportBox& box);

/// Annealing parameter against level index, one polyline per run.
void write_beta_schedule_svg(const std::string& path,
                             const std::vector<std::vector<double>>& beta_runs);

std::string utc_timestamp();

}  // namespace aims

#endif  // AIMS_OUTPUTS_HPP
