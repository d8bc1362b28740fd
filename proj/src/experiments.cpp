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

#include "aims/experiments.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "aims/diagnostics.hpp"
#include "aims/oracles.hpp"
#include "aims/outputs.hpp"
#include "aims/quadrature.hpp"

namespace aims {

namespace fs = std::filesystem;

OutputFormats OutputFormats::parse(const std::string& csv_list) {
  OutputFormats f{false, false, false};
  std::stringstream ss(csv_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "csv") {
      f.csv = true;
    } else if (item == "json") {
      f.json = true;
    } else if (item == "svg") {
      f.svg = true;
    } else if (!item.empty()) {
      throw std::invalid_argument("unknown output format: " + item);
    }
  }
  if (!f.csv && !f.json && !f.svg) f = OutputFormats{};
  return f;
}

namespace {

constexpr double kModeVisitRadius = 0.5;
constexpr std::size_t kOracleDraws = 10000000;
constexpr std::size_t kPredictiveGrid = 200;

std::string run_dir(const std::string& base, std::size_t k) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "run_%03zu", k);
  return (fs::path(base) / buf).string();
}

nlohmann::json stats_to_json(const EnsembleStats& s) {
  nlohmann::json j = {{"estimates", s.estimates}, {"mean", s.mean},
                      {"sd", s.sd},               {"cov", s.cov},
                      {"variance", s.variance}};
  if (s.truth) {
    j["truth"] = *s.truth;
    j["bias"] = s.bias;
    j["mse"] = s.mse;
  }
  return j;
}

nlohmann::json schedule_stats_json(const std::vector<RunOutcome>& outcomes) {
  std::vector<std::size_t> m_per_run;
  std::vector<double> m_values;
  for (const auto& o : outcomes) {
    m_per_run.push_back(o.schedule.levels());
    m_values.push_back(static_cast<double>(o.schedule.levels()));
  }
  return {{"m_per_run", m_per_run},
          {"mean_m", mean(m_values)},
          {"median_m", median(m_values)}};
}

nlohmann::json acceptance_by_level_json(const std::vector<RunOutcome>& outcomes) {
  std::size_t max_m = 0;
  for (const auto& o : outcomes) {
    max_m = std::max(max_m, o.level_summaries.size());
  }
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t j = 0; j < max_m; ++j) {
    double local = 0.0;
    double global = 0.0;
    std::size_t count = 0;
    for (const auto& o : outcomes) {
      if (j < o.level_summaries.size()) {
        local += o.level_summaries[j].local_rate;
        global += o.level_summaries[j].global_rate;
        count += 1;
      }
    }
    arr.push_back({{"level", j + 1},
                   {"runs", count},
                   {"mean_local_rate", local / static_cast<double>(count)},
                   {"mean_global_rate", global / static_cast<double>(count)}});
  }
  return arr;
}

std::vector<std::vector<double>> beta_curves(
    const std::vector<RunOutcome>& outcomes) {
  std::vector<std::vector<double>> curves;
  curves.reserve(outcomes.size());
  for (const auto& o : outcomes) curves.push_back(o.schedule.betas);
  return curves;
}

void write_posterior_csv(const std::string& path, const RunOutcome& o) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file: " + path);
  const std::size_t d = o.posterior.empty() ? 0 : o.posterior[0].size();
  const std::size_t level = o.schedule.levels();
  out << "level,step";
  for (std::size_t k = 0; k < d; ++k) out << ",theta" << k;
  out << ",log_target\n";
  for (std::size_t i = 0; i < o.posterior.size(); ++i) {
    out << level << ',' << i;
    for (double v : o.posterior[i]) out << ',' << format_double(v);
    out << ',' << format_double(o.posterior_log_target[i]) << '\n';
  }
}

double final_global_rate(const RunOutcome& o) {
  return o.level_summaries.back().global_rate;
}

}  // namespace

RunOutcome run_once(const TargetModel& model, const RunConfig& config,
                    const Rng& run_stream, bool keep_final_prev) {
  AimsRunResult res = run_full_aims(model, config, run_stream,
                                    /*keep_all_levels=*/false);
  RunOutcome o;
  o.schedule = std::move(res.schedule);
  o.level_summaries = std::move(res.level_summaries);
  o.posterior = std::move(res.levels.back().states);
  o.posterior_log_target = std::move(res.levels.back().log_target);
  if (keep_final_prev) o.final_prev = std::move(res.final_level_prev);
  return o;
}

nlohmann::json run_single(const RunConfig& config, const OutputFormats& formats) {
  config.validate();
  const auto model = make_model(config.model_id, config.model_params);
  const Rng root(config.seed);
  const Rng run_stream = root.child(1, 0);

  AimsRunResult result = run_full_aims(*model, config, run_stream, true);
  fs::create_directories(config.out_dir);

  nlohmann::json summary = make_run_summary(*model, config, result);

  if (config.rwmh) {
    Rng rwmh_rng = run_stream.child(3, 0);
    const RwmhResult baseline = run_rwmh(rwmh_rng, *model, *config.rwmh);
    summary["rwmh"] = {{"chain_length", baseline.states.size()},
                       {"accepts", baseline.accepts},
                       {"acceptance_rate", baseline.acceptance_rate()}};
    if (formats.csv) {
      write_rwmh_csv((fs::path(config.out_dir) / "rwmh_chain.csv").string(),
                     baseline);
    }
  }

  if (formats.csv) {
    write_chain_csv((fs::path(config.out_dir) / "chains.csv").string(), result,
                    *model);
  }
  if (formats.json) {
    write_json((fs::path(config.out_dir) / "summary.json").string(), summary);
  }
  if (formats.svg && model->dim() == 2 && model->support_box() != nullptr) {
    const SupportBox& box = *model->support_box();
    std::vector<ParamVector> crosses;
    if (config.model_id == "mixture2d") {
      for (const auto& c : GaussianMixture2D::mode_centers()) {
        crosses.push_back({c[0], c[1]});
      }
    }
    write_scatter_svg((fs::path(config.out_dir) / "scatter.svg").string(),
                      result.posterior_states(), box, crosses);
    write_trajectory_svg((fs::path(config.out_dir) / "trajectory.svg").string(),
                         result.posterior_states(), box);
    write_beta_schedule_svg(
        (fs::path(config.out_dir) / "beta_schedule.svg").string(),
        {result.schedule.betas});
  }
  return summary;
}

nlohmann::json run_ensemble(const RunConfig& config, const OutputFormats& formats,
                            std::size_t threads) {
  config.validate();
  const auto model = make_model(config.model_id, config.model_params);

  const std::function<RunOutcome(std::size_t, const Rng&)> worker =
      [&](std::size_t, const Rng& stream) {
        return run_once(*model, config, stream, false);
      };
  const auto outcomes =
      parallel_runs<RunOutcome>(config.runs, config.seed, threads, worker);

  nlohmann::json estimands;
  {
    std::vector<double> h_max;
    for (const auto& o : outcomes) {
      h_max.push_back(estimate_expectation(o.posterior, max_component));
    }
    estimands["max_component"] = stats_to_json(make_ensemble_stats(h_max));
  }
  if (model->dim() == 2) {
    std::vector<double> m1, m2, v1, v2, c12;
    for (const auto& o : outcomes) {
      const Moments mo = posterior_moments(o.posterior);
      m1.push_back(mo.mean[0]);
      m2.push_back(mo.mean[1]);
      v1.push_back(mo.covariance[0][0]);
      v2.push_back(mo.covariance[1][1]);
      c12.push_back(mo.covariance[0][1]);
    }
    estimands["mean1"] = stats_to_json(make_ensemble_stats(m1));
    estimands["mean2"] = stats_to_json(make_ensemble_stats(m2));
    estimands["var1"] = stats_to_json(make_ensemble_stats(v1));
    estimands["var2"] = stats_to_json(make_ensemble_stats(v2));
    estimands["cov12"] = stats_to_json(make_ensemble_stats(c12));
  }

  nlohmann::json report = {
      {"timestamp", utc_timestamp()},
      {"model", {{"id", model->id()}, {"constants", model->constants()}}},
      {"config", config},
      {"runs", config.runs},
      {"estimands", estimands},
      {"schedule", schedule_stats_json(outcomes)},
      {"acceptance_by_level", acceptance_by_level_json(outcomes)}};

  fs::create_directories(config.out_dir);
  if (formats.json) {
    write_json((fs::path(config.out_dir) / "ensemble.json").string(), report);
  }
  if (formats.csv) {
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      const std::string dir = run_dir(config.out_dir, k);
      fs::create_directories(dir);
      write_posterior_csv((fs::path(dir) / "posterior.csv").string(),
                          outcomes[k]);
    }
  }
  if (formats.svg) {
    write_beta_schedule_svg(
        (fs::path(config.out_dir) / "beta_schedule.svg").string(),
        beta_curves(outcomes));
  }
  return report;
}

RunConfig experiment_4_1_config() {
  RunConfig c;
  c.model_id = "mixture2d";
  c.n_per_level = 1000;
  c.gamma = 0.5;
  c.proposal_scale = 0.2;
  c.seed = 20260809;
  c.runs = 50;
  c.out_dir = "out/experiment41";
  c.rwmh = RwmhConfig{1000, 5000, 0.2, 0};
  return c;
}

std::vector<RunConfig> experiment_4_2_configs() {
  // (d, N, c) rows of the summary table; gamma = 1/2 throughout.
  const std::vector<std::tuple<std::size_t, std::size_t, double>> rows = {
      {2, 1000, 0.2}, {4, 1000, 0.4},  {6, 1000, 0.6},
      {10, 1000, 0.7}, {10, 2000, 0.6}, {20, 4000, 0.5}};
  std::vector<RunConfig> configs;
  for (const auto& [d, n, c] : rows) {
    RunConfig cfg;
    cfg.model_id = "bimodal:" + std::to_string(d);
    cfg.n_per_level = n;
    cfg.gamma = 0.5;
    cfg.proposal_scale = c;
    cfg.seed = 20260809;
    cfg.runs = 50;
    cfg.out_dir = "out/experiment42/d" + std::to_string(d) + "_n" +
                  std::to_string(n);
    configs.push_back(std::move(cfg));
  }
  return configs;
}

RunConfig experiment_4_3_config() {
  RunConfig c;
  c.model_id = "ffnn";
  c.n_per_level = 3000;
  c.gamma = 0.5;
  c.proposal_scale = 0.5;
  c.seed = 20260809;
  c.runs = 50;
  c.out_dir = "out/experiment43";
  return c;
}

nlohmann::json run_experiment_4_1(const ExperimentOptions& opts) {
  RunConfig config = experiment_4_1_config();
  config.seed = opts.seed;
  config.runs = opts.runs;
  config.out_dir = opts.out_dir.empty() ? config.out_dir : opts.out_dir;
  config.validate();

  const GaussianMixture2D model;
  const GridTruth2D truth = simpson_truth_2d(model, 1.0, 2000);

  struct Outcome {
    RunOutcome aims;
    double mean1, mean2, var1, var2, cov12;
    std::size_t aims_modes, rwmh_modes;
    std::vector<double> mode_freqs;
    double log_m;
    double final_global;
  };

  std::vector<ParamVector> centers;
  for (const auto& c : GaussianMixture2D::mode_centers()) {
    centers.push_back({c[0], c[1]});
  }

  const std::function<Outcome(std::size_t, const Rng&)> worker =
      [&](std::size_t, const Rng& stream) {
        Outcome o;
        o.aims = run_once(model, config, stream, /*keep_final_prev=*/true);
        const Moments mo = posterior_moments(o.aims.posterior);
        o.mean1 = mo.mean[0];
        o.mean2 = mo.mean[1];
        o.var1 = mo.covariance[0][0];
        o.var2 = mo.covariance[1][1];
        o.cov12 = mo.covariance[0][1];
        o.aims_modes =
            count_modes_visited(o.aims.posterior, centers, kModeVisitRadius);

        Rng rwmh_rng = stream.child(3, 0);
        const RwmhResult baseline = run_rwmh(rwmh_rng, model, *config.rwmh);
        o.rwmh_modes =
            count_modes_visited(baseline.states, centers, kModeVisitRadius);

        // Per-mode frequencies by nearest-center assignment.
        o.mode_freqs.assign(centers.size(), 0.0);
        for (const auto& s : o.aims.posterior) {
          std::size_t best = 0;
          double best_d2 = squared_distance(s, centers[0]);
          for (std::size_t c = 1; c < centers.size(); ++c) {
            const double d2 = squared_distance(s, centers[c]);
            if (d2 < best_d2) {
              best_d2 = d2;
              best = c;
            }
          }
          o.mode_freqs[best] += 1.0;
        }
        for (auto& f : o.mode_freqs) {
          f /= static_cast<double>(o.aims.posterior.size());
        }

        const double c_final =
            config.scale_for_level(o.aims.schedule.levels());
        o.log_m = ergodicity_bound_log_m_with_max(model, o.aims.final_prev,
                                                  c_final, truth.max_density);
        o.final_global = final_global_rate(o.aims);
        o.aims.final_prev = WeightedSampleSet{};  // no longer needed
        return o;
      };

  const auto outcomes =
      parallel_runs<Outcome>(config.runs, config.seed, opts.threads, worker);

  std::vector<RunOutcome> views;
  std::vector<double> m1, m2, v1, v2, c12, log_ms, finals;
  std::vector<std::size_t> aims_modes, rwmh_modes;
  std::vector<double> mean_freqs(centers.size(), 0.0);
  std::size_t paired_fewer = 0;
  for (const auto& o : outcomes) {
    views.push_back(o.aims);
    m1.push_back(o.mean1);
    m2.push_back(o.mean2);
    v1.push_back(o.var1);
    v2.push_back(o.var2);
    c12.push_back(o.cov12);
    log_ms.push_back(o.log_m);
    finals.push_back(o.final_global);
    aims_modes.push_back(o.aims_modes);
    rwmh_modes.push_back(o.rwmh_modes);
    if (o.rwmh_modes < o.aims_modes) paired_fewer += 1;
    for (std::size_t c = 0; c < centers.size(); ++c) {
      mean_freqs[c] += o.mode_freqs[c] / static_cast<double>(outcomes.size());
    }
  }

  nlohmann::json report = {
      {"timestamp", utc_timestamp()},
      {"experiment", "4.1"},
      {"model", {{"id", model.id()}, {"constants", model.constants()}}},
      {"config", config},
      {"runs", config.runs},
      {"truth",
       {{"mean", {truth.mean[0], truth.mean[1]}},
        {"var1", truth.var1},
        {"var2", truth.var2},
        {"cov12", truth.cov12},
        {"z", truth.z},
        {"max_density", truth.max_density}}},
      {"estimands",
       {{"mean1", stats_to_json(make_ensemble_stats(m1, truth.mean[0]))},
        {"mean2", stats_to_json(make_ensemble_stats(m2, truth.mean[1]))},
        {"var1", stats_to_json(make_ensemble_stats(v1, truth.var1))},
        {"var2", stats_to_json(make_ensemble_stats(v2, truth.var2))},
        {"cov12", stats_to_json(make_ensemble_stats(c12, truth.cov12))}}},
      {"schedule", schedule_stats_json(views)},
      {"acceptance_by_level", acceptance_by_level_json(views)},
      {"modes",
       {{"visit_radius", kModeVisitRadius},
        {"aims_visited_per_run", aims_modes},
        {"rwmh_visited_per_run", rwmh_modes},
        {"paired_rwmh_fewer", paired_fewer},
        {"run0_freqs", outcomes[0].mode_freqs},
        {"mean_freqs", mean_freqs}}},
      {"ergodicity",
       {{"log_m_per_run", log_ms},
        {"final_global_rate_per_run", finals}}}};

  fs::create_directories(config.out_dir);
  if (opts.formats.json) {
    write_json((fs::path(config.out_dir) / "ensemble.json").string(), report);
  }
  if (opts.formats.csv) {
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      const std::string dir = run_dir(config.out_dir, k);
      fs::create_directories(dir);
      write_posterior_csv((fs::path(dir) / "posterior.csv").string(),
                          outcomes[k].aims);
    }
  }
  if (opts.formats.svg) {
    const SupportBox& box = *model.support_box();
    write_scatter_svg((fs::path(config.out_dir) / "scatter.svg").string(),
                      outcomes[0].aims.posterior, box, centers);
    write_trajectory_svg(
        (fs::path(config.out_dir) / "trajectory.svg").string(),
        outcomes[0].aims.posterior, box);
    write_beta_schedule_svg(
        (fs::path(config.out_dir) / "beta_schedule.svg").string(),
        beta_curves(views));
  }
  return report;
}

nlohmann::json run_experiment_4_2(const ExperimentOptions& opts) {
  auto configs = experiment_4_2_configs();
  nlohmann::json cases = nlohmann::json::array();
  nlohmann::json table = nlohmann::json::array();
  const Rng root(opts.seed);

  for (auto& config : configs) {
    const auto model = make_model(config.model_id);
    const std::size_t d = model->dim();
    config.seed = opts.seed;
    // The d = 20 case is a stress run; keep its ensemble small.
    config.runs = d >= 20 ? std::min<std::size_t>(opts.runs, 8) : opts.runs;
    if (!opts.out_dir.empty()) {
      config.out_dir = (fs::path(opts.out_dir) /
                        ("d" + std::to_string(d) + "_n" +
                         std::to_string(config.n_per_level)))
                           .string();
    }
    config.validate();

    Rng oracle_rng = root.child(4, d * 1000 + config.n_per_level % 1000);
    const OracleEstimate oracle =
        bimodal_max_component_direct(d, kOracleDraws, oracle_rng);

    const std::function<RunOutcome(std::size_t, const Rng&)> worker =
        [&](std::size_t, const Rng& stream) {
          return run_once(*model, config, stream, false);
        };
    const auto outcomes = parallel_runs<RunOutcome>(config.runs, config.seed,
                                                    opts.threads, worker);

    std::vector<double> h_hat;
    for (const auto& o : outcomes) {
      h_hat.push_back(estimate_expectation(o.posterior, max_component));
    }
    const EnsembleStats stats = make_ensemble_stats(h_hat, oracle.value);

    nlohmann::json case_json = {
        {"d", d},
        {"n_per_level", config.n_per_level},
        {"proposal_scale", config.proposal_scale},
        {"runs", config.runs},
        {"config", config},
        {"oracle",
         {{"value", oracle.value},
          {"std_error", oracle.std_error},
          {"draws", oracle.draws}}},
        {"h_max", stats_to_json(stats)},
        {"schedule", schedule_stats_json(outcomes)},
        {"acceptance_by_level", acceptance_by_level_json(outcomes)}};
    cases.push_back(case_json);
    table.push_back({{"d", d},
                     {"N", config.n_per_level},
                     {"c", config.proposal_scale},
                     {"oracle", oracle.value},
                     {"h_mean", stats.mean},
                     {"delta", stats.cov},
                     {"mean_m", case_json["schedule"]["mean_m"]}});

    fs::create_directories(config.out_dir);
    if (opts.formats.json) {
      write_json((fs::path(config.out_dir) / "ensemble.json").string(),
                 case_json);
    }
    if (opts.formats.csv) {
      for (std::size_t k = 0; k < outcomes.size(); ++k) {
        const std::string dir = run_dir(config.out_dir, k);
        fs::create_directories(dir);
        write_posterior_csv((fs::path(dir) / "posterior.csv").string(),
                            outcomes[k]);
      }
    }
  }

  nlohmann::json report = {{"timestamp", utc_timestamp()},
                           {"experiment", "4.2"},
                           {"cases", cases},
                           {"table", table}};
  const std::string base =
      opts.out_dir.empty() ? "out/experiment42" : opts.out_dir;
  fs::create_directories(base);
  if (opts.formats.json) {
    write_json((fs::path(base) / "report.json").string(), report);
  }
  return report;
}

nlohmann::json run_experiment_4_3(const ExperimentOptions& opts) {
  RunConfig config = experiment_4_3_config();
  config.seed = opts.seed;
  config.runs = opts.runs;
  config.out_dir = opts.out_dir.empty() ? config.out_dir : opts.out_dir;
  config.validate();

  const auto model = FfnnRegression::with_default_data();
  const ParamVector& true_theta = FfnnRegression::true_parameters();

  std::vector<double> grid(kPredictiveGrid);
  for (std::size_t i = 0; i < kPredictiveGrid; ++i) {
    grid[i] = 0.05 + (10.0 - 0.05) * static_cast<double>(i) /
                         static_cast<double>(kPredictiveGrid - 1);
  }
  std::vector<double> f_true(kPredictiveGrid);
  for (std::size_t i = 0; i < kPredictiveGrid; ++i) {
    f_true[i] = ffnn_predict(true_theta, grid[i]);
  }

  struct Outcome {
    RunOutcome aims;
    double rmse;
    double theta7_median;
  };

  const std::function<Outcome(std::size_t, const Rng&)> worker =
      [&](std::size_t, const Rng& stream) {
        Outcome o;
        o.aims = run_once(*model, config, stream, false);
        double se = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
          const double fbar = estimate_expectation(
              o.aims.posterior,
              [&](const ParamVector& th) { return ffnn_predict(th, grid[i]); });
          se += (fbar - f_true[i]) * (fbar - f_true[i]);
        }
        o.rmse = std::sqrt(se / static_cast<double>(grid.size()));
        std::vector<double> t7;
        t7.reserve(o.aims.posterior.size());
        for (const auto& th : o.aims.posterior) t7.push_back(th[6]);
        o.theta7_median = median(std::move(t7));
        return o;
      };

  const auto outcomes =
      parallel_runs<Outcome>(config.runs, config.seed, opts.threads, worker);

  std::vector<RunOutcome> views;
  std::vector<double> rmses, theta7s;
  for (const auto& o : outcomes) {
    views.push_back(o.aims);
    rmses.push_back(o.rmse);
    theta7s.push_back(o.theta7_median);
  }

  // Predictive mean and pointwise 5/95 percentile bands from the first run.
  nlohmann::json predictive;
  {
    const auto& post = outcomes[0].aims.posterior;
    std::vector<double> f_mean(kPredictiveGrid), p5(kPredictiveGrid),
        p95(kPredictiveGrid);
    std::vector<double> vals(post.size());
    for (std::size_t i = 0; i < kPredictiveGrid; ++i) {
      for (std::size_t s = 0; s < post.size(); ++s) {
        vals[s] = ffnn_predict(post[s], grid[i]);
      }
      f_mean[i] = mean(vals);
      p5[i] = quantile(vals, 0.05);
      p95[i] = quantile(vals, 0.95);
    }
    predictive = {{"x", grid},
                  {"f_true", f_true},
                  {"f_mean", f_mean},
                  {"p5", p5},
                  {"p95", p95}};
  }

  const double theta7_true = std::log(1.0 / (FfnnRegression::kTrueNoiseSd *
                                             FfnnRegression::kTrueNoiseSd));
  nlohmann::json report = {
      {"timestamp", utc_timestamp()},
      {"experiment", "4.3"},
      {"model", {{"id", model->id()}, {"constants", model->constants()}}},
      {"config", config},
      {"runs", config.runs},
      {"predictive_rmse", stats_to_json(make_ensemble_stats(rmses))},
      {"theta7_median",
       stats_to_json(make_ensemble_stats(theta7s, theta7_true))},
      {"schedule", schedule_stats_json(views)},
      {"acceptance_by_level", acceptance_by_level_json(views)},
      {"predictive", predictive}};

  fs::create_directories(config.out_dir);
  if (opts.formats.json) {
    write_json((fs::path(config.out_dir) / "ensemble.json").string(), report);
  }
  if (opts.formats.csv) {
    std::ofstream out(fs::path(config.out_dir) / "predictive.csv",
                      std::ios::binary);
    out << "x,f_true,f_mean,p5,p95\n";
    for (std::size_t i = 0; i < kPredictiveGrid; ++i) {
      out << format_double(predictive["x"][i].get<double>()) << ','
          << format_double(predictive["f_true"][i].get<double>()) << ','
          << format_double(predictive["f_mean"][i].get<double>()) << ','
          << format_double(predictive["p5"][i].get<double>()) << ','
          << format_double(predictive["p95"][i].get<double>()) << '\n';
    }
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      const std::string dir = run_dir(config.out_dir, k);
      fs::create_directories(dir);
      write_posterior_csv((fs::path(dir) / "posterior.csv").string(),
                          outcomes[k].aims);
    }
  }
  if (opts.formats.svg) {
    write_beta_schedule_svg(
        (fs::path(config.out_dir) / "beta_schedule.svg").string(),
        beta_curves(views));
  }
  return report;
}

nlohmann::json run_sweep_c(const RunConfig& base, const std::vector<double>& scales,
                           const ExperimentOptions& opts) {
  if (scales.empty()) {
    throw std::invalid_argument("run_sweep_c: empty scale list");
  }
  const auto model = make_model(base.model_id, base.model_params);

  nlohmann::json points = nlohmann::json::array();
  for (double c : scales) {
    RunConfig config = base;
    config.proposal_scale = c;
    config.proposal_scales.clear();
    config.runs = opts.runs;
    config.seed = opts.seed;
    config.validate();

    const std::function<RunOutcome(std::size_t, const Rng&)> worker =
        [&](std::size_t, const Rng& stream) {
          return run_once(*model, config, stream, false);
        };
    const auto outcomes = parallel_runs<RunOutcome>(config.runs, config.seed,
                                                    opts.threads, worker);

    std::vector<double> h_hat, local, global;
    std::vector<RunOutcome> views;
    for (const auto& o : outcomes) {
      h_hat.push_back(estimate_expectation(o.posterior, max_component));
      local.push_back(o.level_summaries.back().local_rate);
      global.push_back(final_global_rate(o));
      views.push_back(o);
    }
    const EnsembleStats stats = make_ensemble_stats(h_hat);
    points.push_back({{"c", c},
                      {"h_max", stats_to_json(stats)},
                      {"delta", stats.cov},
                      {"mean_final_local_rate", mean(local)},
                      {"mean_final_global_rate", mean(global)},
                      {"schedule", schedule_stats_json(views)}});
  }

  nlohmann::json report = {{"timestamp", utc_timestamp()},
                           {"model", base.model_id},
                           {"runs_per_point", opts.runs},
                           {"sweep", points}};
  const std::string dir = opts.out_dir.empty() ? base.out_dir : opts.out_dir;
  fs::create_directories(dir);
  if (opts.formats.json) {
    write_json((fs::path(dir) / "sweep.json").string(), report);
  }
  if (opts.formats.csv) {
    std::ofstream out(fs::path(dir) / "sweep.csv", std::ios::binary);
    out << "c,h_mean,delta,mean_final_local_rate,mean_final_global_rate\n";
    for (const auto& p : points) {
      out << format_double(p["c"].get<double>()) << ','
          << format_double(p["h_max"]["mean"].get<double>()) << ','
          << format_double(p["delta"].get<double>()) << ','
          << format_double(p["mean_final_local_rate"].get<double>()) << ','
          << format_double(p["mean_final_global_rate"].get<double>()) << '\n';
    }
  }
  return report;
}

}  // namespace aims
