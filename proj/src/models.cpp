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

#include "aims/models.hpp"

#include <cmath>

namespace aims {

namespace {

nlohmann::json box_json(const SupportBox& box) {
  return {{"lo", box.lo}, {"hi", box.hi}};
}

}  // namespace

// --------------------------------------------------------------------------
// GaussianMixture2D

const std::array<std::array<double, 2>, GaussianMixture2D::kNumModes>&
GaussianMixture2D::mode_centers() {
  static const std::array<std::array<double, 2>, kNumModes> centers = {{
      {9.3093148112343602, 7.0979265657629806},
      {4.6539434745778454, 8.2336233285870755},
      {7.4057282965216533, 2.6507533592551011},
      {8.8950169214883807, 4.512405915694357},
      {2.79222323677795, 0.91613253225894975},
      {7.5324278066848169, 0.6390670212547267},
      {7.6465065133533248, 5.4183344730835596},
      {8.5425715386699537, 8.6515887037338963},
      {6.6392333443471241, 7.989229069822203},
      {3.9350200516716818, 5.0394357230751403},
  }};
  return centers;
}

GaussianMixture2D::GaussianMixture2D() {
  box_.lo = {0.0, 0.0};
  box_.hi = {kBoxSide, kBoxSide};
}

double GaussianMixture2D::log_prior(const ParamVector& theta) const {
  if (!box_.contains(theta)) return kNegInf;
  return -2.0 * std::log(kBoxSide);
}

double GaussianMixture2D::log_likelihood(const ParamVector& theta) const {
  // Equally weighted components, evaluated in log space so the value stays
  // finite far from every mode.
  const double var = kModeSd * kModeSd;
  std::array<double, kNumModes> terms;
  const auto& centers = mode_centers();
  for (std::size_t i = 0; i < kNumModes; ++i) {
    const double dx = theta[0] - centers[i][0];
    const double dy = theta[1] - centers[i][1];
    terms[i] = iso_gaussian_logpdf(dx * dx + dy * dy, 2, var);
  }
  const double log_weight = -std::log(static_cast<double>(kNumModes));
  return log_weight + log_sum_exp(terms);
}

ParamVector GaussianMixture2D::sample_prior(Rng& rng) const {
  return {kBoxSide * rng.uniform01(), kBoxSide * rng.uniform01()};
}

nlohmann::json GaussianMixture2D::constants() const {
  nlohmann::json centers = nlohmann::json::array();
  for (const auto& c : mode_centers()) centers.push_back({c[0], c[1]});
  return {{"box", box_json(box_)},
          {"num_modes", kNumModes},
          {"mode_sd", kModeSd},
          {"mode_weight", 1.0 / static_cast<double>(kNumModes)},
          {"mode_centers", centers},
          {"mode_centers_draw", "rng seed 86, uniform on the square"}};
}

// --------------------------------------------------------------------------
// BimodalGaussian

BimodalGaussian::BimodalGaussian(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("BimodalGaussian: dim must be >= 1");
  box_.lo.assign(dim, -kBoxHalfSide);
  box_.hi.assign(dim, kBoxHalfSide);
}

double BimodalGaussian::log_prior(const ParamVector& theta) const {
  if (!box_.contains(theta)) return kNegInf;
  return -static_cast<double>(dim_) * std::log(2.0 * kBoxHalfSide);
}

double BimodalGaussian::log_likelihood(const ParamVector& theta) const {
  const double var = kModeSd * kModeSd;
  double d2_pos = 0.0;
  double d2_neg = 0.0;
  for (double v : theta) {
    d2_pos += (v - kModeOffset) * (v - kModeOffset);
    d2_neg += (v + kModeOffset) * (v + kModeOffset);
  }
  const std::array<double, 2> terms = {
      iso_gaussian_logpdf(d2_pos, dim_, var),
      iso_gaussian_logpdf(d2_neg, dim_, var)};
  return log_sum_exp(terms);
}

ParamVector BimodalGaussian::sample_prior(Rng& rng) const {
  ParamVector theta(dim_);
  for (auto& v : theta) v = rng.uniform(-kBoxHalfSide, kBoxHalfSide);
  return theta;
}

std::string BimodalGaussian::id() const {
  return "bimodal:" + std::to_string(dim_);
}

nlohmann::json BimodalGaussian::constants() const {
  return {{"dim", dim_},
          {"box_half_side", kBoxHalfSide},
          {"mode_sd", kModeSd},
          {"mode_offset", kModeOffset}};
}

// --------------------------------------------------------------------------
// FfnnRegression

double ffnn_predict(const ParamVector& theta, double x) {
  return theta[0] * std::tanh(theta[2] * x + theta[4]) +
         theta[1] * std::tanh(theta[3] * x + theta[5]);
}

FfnnDataset make_ffnn_dataset(Rng& rng, const ParamVector& true_theta,
                              double noise_sd) {
  if (!(noise_sd > 0.0)) {
    throw std::invalid_argument("make_ffnn_dataset: noise_sd must be > 0");
  }
  FfnnDataset data;
  data.xs.resize(100);
  data.ys.resize(100);
  for (std::size_t i = 1; i <= 100; ++i) {
    const double x = static_cast<double>(i) / 10.0;
    data.xs[i - 1] = x;
    data.ys[i - 1] = ffnn_predict(true_theta, x) + noise_sd * rng.normal();
  }
  return data;
}

const ParamVector& FfnnRegression::true_parameters() {
  static const ParamVector theta = {5.0, -5.0, -1.0, -3.0, 5.0, 2.0};
  return theta;
}

FfnnRegression::FfnnRegression(FfnnDataset data, std::uint64_t data_seed)
    : data_(std::move(data)), data_seed_(data_seed) {
  if (data_.xs.size() != data_.ys.size() || data_.xs.empty()) {
    throw std::invalid_argument("FfnnRegression: malformed dataset");
  }
}

std::unique_ptr<FfnnRegression> FfnnRegression::with_default_data(
    std::uint64_t data_seed) {
  Rng rng(data_seed);
  return std::make_unique<FfnnRegression>(
      make_ffnn_dataset(rng, true_parameters(), kTrueNoiseSd), data_seed);
}

double FfnnRegression::log_prior(const ParamVector& theta) const {
  const double var = kPriorSd * kPriorSd;
  double d2 = 0.0;
  for (double v : theta) d2 += v * v;
  return iso_gaussian_logpdf(d2, 7, var);
}

double FfnnRegression::log_likelihood(const ParamVector& theta) const {
  // theta[6] is the log precision: sigma^2 = exp(-theta[6]).
  const double log_var = -theta[6];
  const double inv_var = std::exp(theta[6]);
  const std::size_t n = data_.xs.size();
  double sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = data_.ys[i] - ffnn_predict(theta, data_.xs[i]);
    sq += r * r;
  }
  return -0.5 * static_cast<double>(n) * (kLogTwoPi + log_var) -
         0.5 * sq * inv_var;
}

ParamVector FfnnRegression::sample_prior(Rng& rng) const {
  ParamVector theta(7);
  for (auto& v : theta) v = kPriorSd * rng.normal();
  return theta;
}

nlohmann::json FfnnRegression::constants() const {
  return {{"prior_sd", kPriorSd},
          {"true_parameters", true_parameters()},
          {"true_noise_sd", kTrueNoiseSd},
          {"data_seed", data_seed_},
          {"n_data", data_.xs.size()}};
}

// --------------------------------------------------------------------------
// StdNormalTest

double StdNormalTest::log_prior(const ParamVector& theta) const {
  double d2 = 0.0;
  for (double v : theta) d2 += v * v;
  return iso_gaussian_logpdf(d2, dim_, 2.0);
}

double StdNormalTest::log_likelihood(const ParamVector& theta) const {
  double d2 = 0.0;
  for (double v : theta) d2 += v * v;
  return -0.25 * d2;
}

ParamVector StdNormalTest::sample_prior(Rng& rng) const {
  ParamVector theta(dim_);
  const double sd = std::sqrt(2.0);
  for (auto& v : theta) v = sd * rng.normal();
  return theta;
}

std::string StdNormalTest::id() const {
  return dim_ == 1 ? "stdnorm-test" : "stdnorm-test:" + std::to_string(dim_);
}

nlohmann::json StdNormalTest::constants() const {
  return {{"dim", dim_}, {"prior_var", 2.0}, {"posterior_var", 1.0}};
}

// --------------------------------------------------------------------------
// Factory

std::unique_ptr<TargetModel> make_model(const std::string& id,
                                        const nlohmann::json& params) {
  const auto parse_dim = [&](const std::string& tail) {
    const std::size_t d = std::stoul(tail);
    if (d == 0) throw std::invalid_argument("make_model: dimension must be >= 1");
    return d;
  };

  if (id == "mixture2d") return std::make_unique<GaussianMixture2D>();
  if (id.rfind("bimodal:", 0) == 0) {
    return std::make_unique<BimodalGaussian>(parse_dim(id.substr(8)));
  }
  if (id == "ffnn") {
    std::uint64_t seed = FfnnRegression::kDefaultDataSeed;
    if (params.is_object() && params.contains("data_seed")) {
      seed = params.at("data_seed").get<std::uint64_t>();
    }
    return FfnnRegression::with_default_data(seed);
  }
  if (id == "stdnorm-test") return std::make_unique<StdNormalTest>(1);
  if (id.rfind("stdnorm-test:", 0) == 0) {
    return std::make_unique<StdNormalTest>(parse_dim(id.substr(13)));
  }
  throw std::invalid_argument("make_model: unknown model id '" + id + "'");
}

}  // namespace aims
