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

#ifndef AIMS_DRIVER_HPP
#define AIMS_DRIVER_HPP

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "aims/kernel.hpp"
#include "aims/rwmh.hpp"

namespace aims {

/// Declarative run description; round-trips losslessly through JSON.
struct RunConfig {
  std::string model_id = "mixture2d";
  nlohmann::json model_params = nlohmann::json::object();
  std::size_t n_per_level = 1000;
  std::vector<std::size_t> n_levels;        // optional per-level chain lengths
  double gamma = 0.5;
  double proposal_scale = 0.2;
  std::vector<double> proposal_scales;      // optional per-level scales
  std::uint64_t seed = 1;
  std::size_t runs = 1;
  std::string out_dir = "out";
  std::vector<double> fixed_betas;          // testing only: bypasses the solve
  std::optional<RwmhConfig> rwmh;           // paired baseline, when present

  void validate() const;

  std::size_t n_for_level(std::size_t level) const {
    if (n_levels.empty()) return n_per_level;
    return n_levels[std::min(level, n_levels.size() - 1)];
  }

  /// Proposal scale for level >= 1.
  double scale_for_level(std::size_t level) const {
    if (proposal_scales.empty()) return proposal_scale;
    return proposal_scales[std::min(level - 1, proposal_scales.size() - 1)];
  }

  bool operator==(const RunConfig&) const = default;
};

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);
void to_json(nlohmann::json& j, const RwmhConfig& c);
void from_json(const nlohmann::json& j, RwmhConfig& c);

/// Per-level acceptance bookkeeping for summaries.
struct LevelSummary {
  std::size_t level = 0;  // 1..m
  double beta = 0.0;
  std::size_t chain_length = 0;
  std::size_t local_accepts = 0;
  std::size_t global_accepts = 0;
  std::size_t repeats = 0;
  double local_rate = 0.0;
  double global_rate = 0.0;
  double incoming_ess = 0.0;       // ESS of the weights behind this level's proposal
  bool low_incoming_ess = false;   // incoming ESS < 10: estimates unreliable
  double lag1_log_target = 0.0;
};

/// One full annealing run: schedule, per-level summaries and chains.
struct AimsRunResult {
  AnnealingSchedule schedule;
  std::vector<LevelSummary> level_summaries;
  WeightedSampleSet prior_sample;        // level 0 draws with cached log L
  WeightedSampleSet final_level_prev;    // weighted sample behind the final
                                         // level, kept for the ergodicity bound
  std::vector<LevelRunRecord> levels;    // all levels, or only the final one
  bool kept_all_levels = true;

  const LevelRunRecord& final_level() const { return levels.back(); }
  const std::vector<ParamVector>& posterior_states() const {
    return levels.back().states;
  }
};

/// The full adaptive procedure: prior draws at level 0, then repeatedly
/// solve the next annealing parameter from the ESS threshold, reweight and
/// run the level chain, until the current level's similarity to the
/// posterior reaches gamma; the final level always runs at beta = 1.
/// `run_stream` is the per-run random stream; level j consumes
/// run_stream.child(2, j).
AimsRunResult run_full_aims(const TargetModel& model, const RunConfig& config,
                            const Rng& run_stream, bool keep_all_levels = true);

}  // namespace aims

#endif  // AIMS_DRIVER_HPP
