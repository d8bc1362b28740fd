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

#ifndef AIMS_EXPERIMENTS_HPP
#define AIMS_EXPERIMENTS_HPP

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "aims/driver.hpp"
#include "aims/models.hpp"

namespace aims {

struct OutputFormats {
  bool csv = true;
  bool json = true;
  bool svg = false;

  static OutputFormats parse(const std::string& csv_list);
};

struct ExperimentOptions {
  std::uint64_t seed = 20260809;
  std::size_t runs = 50;
  std::string out_dir;  // empty: the experiment's own default
  OutputFormats formats;
  std::size_t threads = 0;  // 0: hardware concurrency
};

/// Runs `fn(run_index, run_stream)` for run_index in [0, runs) on a small
/// worker pool. Each run's stream is root.child(1, run_index), so results
/// do not depend on scheduling; the returned vector is ordered by run
/// index.
template <typename T>
std::vector<T> parallel_runs(std::size_t runs, std::uint64_t seed,
                             std::size_t threads,
                             const std::function<T(std::size_t, const Rng&)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, runs);
  const Rng root(seed);
  std::vector<T> results(runs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  const auto worker = [&]() {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= runs) return;
      try {
        results[k] = fn(k, root.child(1, k));
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

/// Minimal ensemble view of one run, shared by the experiment drivers.
struct RunOutcome {
  AnnealingSchedule schedule;
  std::vector<LevelSummary> level_summaries;
  std::vector<ParamVector> posterior;
  std::vector<double> posterior_log_target;
  WeightedSampleSet final_prev;  // kept only when requested
};

/// One AIMS run at the given run stream, reduced to the ensemble view.
RunOutcome run_once(const TargetModel& model, const RunConfig& config,
                    const Rng& run_stream, bool keep_final_prev = false);

/// `run` verb: one AIMS run (plus the paired baseline when configured),
/// with chains, summary and optional plots written under config.out_dir.
nlohmann::json run_single(const RunConfig& config, const OutputFormats& formats);

/// `ensemble` verb: config.runs independent runs; writes the ensemble
/// report and per-run posterior chains.
nlohmann::json run_ensemble(const RunConfig& config, const OutputFormats& formats,
                            std::size_t threads = 0);

/// Reproduction drivers for the three studies: the 10-mode 2-D mixture
/// versus the random-walk baseline, the bimodal cube across dimensions,
/// and the network regression posterior.
nlohmann::json run_experiment_4_1(const ExperimentOptions& opts);
nlohmann::json run_experiment_4_2(const ExperimentOptions& opts);
nlohmann::json run_experiment_4_3(const ExperimentOptions& opts);

/// `sweep` verb: repeats a small ensemble for each proposal scale and
/// reports the estimator spread and acceptance rates per scale.
nlohmann::json run_sweep_c(const RunConfig& base, const std::vector<double>& scales,
                           const ExperimentOptions& opts);

/// Reference-study settings for each experiment; checked-in config files
/// mirror these.
RunConfig experiment_4_1_config();
std::vector<RunConfig> experiment_4_2_configs();
RunConfig experiment_4_3_config();

}  // namespace aims

#endif  // AIMS_EXPERIMENTS_HPP
