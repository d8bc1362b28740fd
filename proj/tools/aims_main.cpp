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

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "aims/experiments.hpp"

namespace {

aims::RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file: " + path);
  nlohmann::json j;
  in >> j;
  return j.get<aims::RunConfig>();
}

std::vector<double> parse_scale_list(std::string list) {
  if (list.rfind("c=", 0) == 0) list = list.substr(2);
  std::vector<double> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Annealed independence sampler for Bayesian posteriors"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir;
  std::string format_list = "csv,json";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> runs;
  std::size_t threads = 0;

  app.add_option("--threads", threads, "worker threads (0 = hardware)");

  auto add_common = [&](CLI::App* cmd, bool config_required) {
    auto* opt = cmd->add_option("--config", config_path, "run config JSON");
    if (config_required) opt->required();
    cmd->add_option("--out", out_dir, "output directory override");
    cmd->add_option("--seed", seed, "root seed override");
    cmd->add_option("--runs", runs, "ensemble size override");
    cmd->add_option("--format", format_list, "outputs: csv,json,svg");
  };

  auto* cmd_run = app.add_subcommand("run", "single run from a config file");
  add_common(cmd_run, true);

  auto* cmd_ens = app.add_subcommand("ensemble", "multi-run ensemble report");
  add_common(cmd_ens, true);

  std::string which;
  auto* cmd_repro =
      app.add_subcommand("repro", "reproduce a study: 4.1, 4.2 or 4.3");
  cmd_repro->add_option("which", which, "study id")->required();
  add_common(cmd_repro, false);

  std::string scale_spec;
  auto* cmd_sweep =
      app.add_subcommand("sweep", "proposal-scale sweep, e.g. c=0.1,0.2,0.4");
  cmd_sweep->add_option("scales", scale_spec, "c=<comma list>")->required();
  add_common(cmd_sweep, true);

  CLI11_PARSE(app, argc, argv);

  try {
    const aims::OutputFormats formats = aims::OutputFormats::parse(format_list);

    const auto apply_overrides = [&](aims::RunConfig& cfg) {
      if (!out_dir.empty()) cfg.out_dir = out_dir;
      if (seed) cfg.seed = *seed;
      if (runs) cfg.runs = *runs;
    };

    if (*cmd_run) {
      aims::RunConfig cfg = load_config(config_path);
      apply_overrides(cfg);
      cfg.runs = 1;
      aims::run_single(cfg, formats);
      std::cout << "wrote " << cfg.out_dir << "\n";
    } else if (*cmd_ens) {
      aims::RunConfig cfg = load_config(config_path);
      apply_overrides(cfg);
      aims::run_ensemble(cfg, formats, threads);
      std::cout << "wrote " << cfg.out_dir << "\n";
    } else if (*cmd_repro) {
      aims::ExperimentOptions opts;
      opts.formats = formats;
      opts.threads = threads;
      if (seed) opts.seed = *seed;
      if (runs) opts.runs = *runs;
      if (!out_dir.empty()) opts.out_dir = out_dir;
      nlohmann::json report;
      if (which == "4.1") {
        report = aims::run_experiment_4_1(opts);
      } else if (which == "4.2") {
        report = aims::run_experiment_4_2(opts);
      } else if (which == "4.3") {
        report = aims::run_experiment_4_3(opts);
      } else {
        throw std::invalid_argument("unknown study id: " + which +
                                    " (expected 4.1, 4.2 or 4.3)");
      }
      std::cout << report["experiment"].get<std::string>() << " done\n";
    } else if (*cmd_sweep) {
      aims::RunConfig cfg = load_config(config_path);
      apply_overrides(cfg);
      aims::ExperimentOptions opts;
      opts.formats = formats;
      opts.threads = threads;
      opts.seed = cfg.seed;
      opts.runs = runs.value_or(10);
      opts.out_dir = cfg.out_dir;
      aims::run_sweep_c(cfg, parse_scale_list(scale_spec), opts);
      std::cout << "wrote " << cfg.out_dir << "\n";
    }
  } catch (const std::exception& e) {
    const nlohmann::json err = {{"error", {{"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}
