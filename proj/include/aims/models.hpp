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

#ifndef AIMS_MODELS_HPP
#define AIMS_MODELS_HPP

#include <array>
#include <memory>
#include <optional>

#include "aims/model.hpp"

namespace aims {

/// Truncated mixture of 10 isotropic Gaussians on the square [0,10]^2.
/// Uniform prior on the square; likelihood is the equally-weighted mixture
/// with sd 0.1 around fixed centers.
class GaussianMixture2D final : public TargetModel {
 public:
  static constexpr double kBoxSide = 10.0;
  static constexpr double kModeSd = 0.1;
  static constexpr std::size_t kNumModes = 10;

  /// Mode centers: one uniform draw on the square with Rng seed 86
  /// (x then y per mode), redrawn over seeds until all pairwise distances
  /// are >= 1.2 and every center is >= 0.6 from the boundary. Frozen here
  /// so every build and every ground-truth quadrature sees the same target.
  static const std::array<std::array<double, 2>, kNumModes>& mode_centers();

  GaussianMixture2D();

  std::size_t dim() const override { return 2; }
  double log_prior(const ParamVector& theta) const override;
  double log_likelihood(const ParamVector& theta) const override;
  ParamVector sample_prior(Rng& rng) const override;
  const SupportBox* support_box() const override { return &box_; }
  std::string id() const override { return "mixture2d"; }
  nlohmann::json constants() const override;

 private:
  SupportBox box_;
};

/// Truncated sum of two isotropic Gaussians on the cube [-2,2]^d, centered
/// at (0.5,...,0.5) and (-0.5,...,-0.5) with sd 0.5. Uniform prior on the
/// cube. The likelihood is symmetric under theta -> -theta.
class BimodalGaussian final : public TargetModel {
 public:
  static constexpr double kBoxHalfSide = 2.0;
  static constexpr double kModeSd = 0.5;
  static constexpr double kModeOffset = 0.5;

  explicit BimodalGaussian(std::size_t dim);

  std::size_t dim() const override { return dim_; }
  double log_prior(const ParamVector& theta) const override;
  double log_likelihood(const ParamVector& theta) const override;
  ParamVector sample_prior(Rng& rng) const override;
  const SupportBox* support_box() const override { return &box_; }
  std::string id() const override;
  nlohmann::json constants() const override;

 private:
  std::size_t dim_;
  SupportBox box_;
};

/// One-hidden-layer tanh network output: a1*tanh(b1*x + g1) + a2*tanh(b2*x + g2).
/// Layout of theta: (a1, a2, b1, b2, g1, g2, log_precision).
double ffnn_predict(const ParamVector& theta, double x);

struct FfnnDataset {
  std::vector<double> xs;
  std::vector<double> ys;
};

/// Synthetic regression data: x_i = i/10 for i = 1..100,
/// y_i = prediction(true_theta, x_i) + Normal(0, sigma^2).
FfnnDataset make_ffnn_dataset(Rng& rng, const ParamVector& true_theta,
                              double noise_sd);

/// Bayesian updating of the 7-parameter tanh network. Independent
/// Normal(0, 5^2) priors on every coordinate; the last coordinate is the log
/// precision of the Gaussian observation noise, so the likelihood uses
/// sigma^2 = exp(-theta[6]). Support is all of R^7.
class FfnnRegression final : public TargetModel {
 public:
  static constexpr double kPriorSd = 5.0;
  static constexpr std::uint64_t kDefaultDataSeed = 424242;

  /// True generating parameters (a1,a2,b1,b2,g1,g2) and noise sd used for
  /// the synthetic dataset.
  static const ParamVector& true_parameters();
  static constexpr double kTrueNoiseSd = 0.1;

  explicit FfnnRegression(FfnnDataset data, std::uint64_t data_seed = 0);

  /// Builds the model with its canonical dataset (seeded draw).
  static std::unique_ptr<FfnnRegression> with_default_data(
      std::uint64_t data_seed = kDefaultDataSeed);

  std::size_t dim() const override { return 7; }
  double log_prior(const ParamVector& theta) const override;
  double log_likelihood(const ParamVector& theta) const override;
  ParamVector sample_prior(Rng& rng) const override;
  std::string id() const override { return "ffnn"; }
  nlohmann::json constants() const override;

  const FfnnDataset& dataset() const { return data_; }

 private:
  FfnnDataset data_;
  std::uint64_t data_seed_;
};

/// Self-test model on R^d: prior N(0, 2I), log-likelihood -|theta|^2/4.
/// The annealed density at beta is N(0, 2/(1+beta) I); the posterior is the
/// standard normal. Handy because every annealed moment is known in closed
/// form.
class StdNormalTest final : public TargetModel {
 public:
  explicit StdNormalTest(std::size_t dim = 1) : dim_(dim) {}

  std::size_t dim() const override { return dim_; }
  double log_prior(const ParamVector& theta) const override;
  double log_likelihood(const ParamVector& theta) const override;
  ParamVector sample_prior(Rng& rng) const override;
  std::string id() const override;
  nlohmann::json constants() const override;

 private:
  std::size_t dim_;
};

/// Builds a model from its string id: "mixture2d", "bimodal:<d>", "ffnn",
/// "stdnorm-test" or "stdnorm-test:<d>". Throws std::invalid_argument on an
/// unknown id. `params` may carry model options (e.g. {"data_seed": n} for
/// ffnn).
std::unique_ptr<TargetModel> make_model(
    const std::string& id, const nlohmann::json& params = nlohmann::json());

}  // namespace aims

#endif  // AIMS_MODELS_HPP
