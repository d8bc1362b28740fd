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

#include "aims/outputs.hpp"

#include <charconv>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace aims {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file: " + path);
  return out;
}

void write_chain_rows(std::ostream& out, std::size_t level,
                      const std::vector<ParamVector>& states,
                      const std::vector<double>& log_target) {
  for (std::size_t i = 0; i < states.size(); ++i) {
    out << level << ',' << i;
    for (double v : states[i]) out << ',' << format_double(v);
    out << ',' << format_double(log_target[i]) << '\n';
  }
}

void write_chain_header(std::ostream& out, std::size_t dim) {
  out << "level,step";
  for (std::size_t k = 0; k < dim; ++k) out << ",theta" << k;
  out << ",log_target\n";
}

}  // namespace

void write_chain_csv(const std::string& path, const AimsRunResult& result,
                     const TargetModel& model) {
  auto out = open_out(path);
  write_chain_header(out, model.dim());

  std::vector<double> prior_lt(result.prior_sample.size());
  for (std::size_t i = 0; i < prior_lt.size(); ++i) {
    prior_lt[i] = model.log_prior(result.prior_sample.points[i]);
  }
  write_chain_rows(out, 0, result.prior_sample.points, prior_lt);

  const std::size_t m = result.schedule.levels();
  const std::size_t first_level = result.kept_all_levels ? 1 : m;
  for (std::size_t idx = 0; idx < result.levels.size(); ++idx) {
    write_chain_rows(out, first_level + idx, result.levels[idx].states,
                     result.levels[idx].log_target);
  }
}

void write_rwmh_csv(const std::string& path, const RwmhResult& result) {
  auto out = open_out(path);
  write_chain_header(out, result.states.empty() ? 0 : result.states[0].size());
  write_chain_rows(out, 0, result.states, result.log_target);
}

nlohmann::json schedule_to_json(const AnnealingSchedule& schedule) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t j = 0; j < schedule.betas.size(); ++j) {
    nlohmann::json entry = {{"level", j},
                            {"beta", schedule.betas[j]},
                            {"ess_to_posterior", schedule.ess_to_posterior[j]}};
    if (j < schedule.ess_to_next.size()) {
      entry["ess_to_next"] = schedule.ess_to_next[j];
    } else {
      entry["ess_to_next"] = nullptr;
    }
    arr.push_back(std::move(entry));
  }
  return arr;
}

nlohmann::json level_summaries_to_json(const std::vector<LevelSummary>& levels) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : levels) {
    arr.push_back({{"level", s.level},
                   {"beta", s.beta},
                   {"chain_length", s.chain_length},
                   {"local_accepts", s.local_accepts},
                   {"global_accepts", s.global_accepts},
                   {"repeats", s.repeats},
                   {"local_rate", s.local_rate},
                   {"global_rate", s.global_rate},
                   {"incoming_ess", s.incoming_ess},
                   {"low_incoming_ess", s.low_incoming_ess},
                   {"lag1_log_target", s.lag1_log_target}});
  }
  return arr;
}

nlohmann::json make_run_summary(const TargetModel& model, const RunConfig& config,
                                const AimsRunResult& result) {
  const Moments post = posterior_moments(result.posterior_states());
  return {{"timestamp", utc_timestamp()},
          {"model", {{"id", model.id()}, {"constants", model.constants()}}},
          {"config", config},
          {"m", result.schedule.levels()},
          {"schedule", schedule_to_json(result.schedule)},
          {"levels", level_summaries_to_json(result.level_summaries)},
          {"posterior",
           {{"n", result.posterior_states().size()},
            {"mean", post.mean},
            {"covariance", post.covariance}}}};
}

void write_json(const std::string& path, const nlohmann::json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

namespace {

constexpr double kPlotSize = 640.0;
constexpr double kMargin = 40.0;

double map_x(double v, double lo, double hi) {
  return kMargin + (v - lo) / (hi - lo) * (kPlotSize - 2 * kMargin);
}

double map_y(double v, double lo, double hi) {
  return kPlotSize - kMargin - (v - lo) / (hi - lo) * (kPlotSize - 2 * kMargin);
}

void svg_open(std::ostream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kPlotSize
      << "\" height=\"" << kPlotSize << "\" viewBox=\"0 0 " << kPlotSize << ' '
      << kPlotSize << "\">\n";
  out << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\""
      << kPlotSize - 2 * kMargin << "\" height=\"" << kPlotSize - 2 * kMargin
      << "\" fill=\"white\" stroke=\"black\"/>\n";
}

}  // namespace

void write_scatter_svg(const std::string& path,
                       const std::vector<ParamVector>& points,
                       const SupportBox& box,
                       const std::vector<ParamVector>& crosses) {
  auto out = open_out(path);
  svg_open(out);
  for (const auto& p : points) {
    out << "<circle cx=\"" << format_double(map_x(p[0], box.lo[0], box.hi[0]))
        << "\" cy=\"" << format_double(map_y(p[1], box.lo[1], box.hi[1]))
        << "\" r=\"1.5\" fill=\"steelblue\" fill-opacity=\"0.6\"/>\n";
  }
  for (const auto& c : crosses) {
    const double x = map_x(c[0], box.lo[0], box.hi[0]);
    const double y = map_y(c[1], box.lo[1], box.hi[1]);
    out << "<path d=\"M" << format_double(x - 5) << ' ' << format_double(y - 5)
        << " L" << format_double(x + 5) << ' ' << format_double(y + 5) << " M"
        << format_double(x - 5) << ' ' << format_double(y + 5) << " L"
        << format_double(x + 5) << ' ' << format_double(y - 5)
        << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  out << "</svg>\n";
}

void write_trajectory_svg(const std::string& path,
                          const std::vector<ParamVector>& states,
                          const SupportBox& box) {
  auto out = open_out(path);
  svg_open(out);
  out << "<polyline fill=\"none\" stroke=\"firebrick\" stroke-width=\"0.5\" "
         "points=\"";
  for (const auto& s : states) {
    out << format_double(map_x(s[0], box.lo[0], box.hi[0])) << ','
        << format_double(map_y(s[1], box.lo[1], box.hi[1])) << ' ';
  }
  out << "\"/>\n</svg>\n";
}

void write_beta_schedule_svg(const std::string& path,
                             const std::vector<std::vector<double>>& beta_runs) {
  std::size_t max_m = 1;
  for (const auto& b : beta_runs) max_m = std::max(max_m, b.size() - 1);
  auto out = open_out(path);
  svg_open(out);
  for (const auto& betas : beta_runs) {
    out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-opacity=\"0.5\" "
           "stroke-width=\"1\" points=\"";
    for (std::size_t j = 0; j < betas.size(); ++j) {
      out << format_double(
                 map_x(static_cast<double>(j), 0.0, static_cast<double>(max_m)))
          << ',' << format_double(map_y(betas[j], 0.0, 1.0)) << ' ';
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace aims
