// Copyright 2026 The NeighborDiv Authors.
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

#ifndef NDIV_CALIBRATION_HPP_
#define NDIV_CALIBRATION_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "common.hpp"

namespace ndiv {

enum class Reference { kMedian, kMean };
enum class Fallback { kZero, kMedianOfValid, kValidOnly };

inline constexpr double kDefaultLambda = 1.0;
inline constexpr double kDegenerateSigma = 1e-15;

struct CalibrationConfig {
  Reference reference = Reference::kMedian;
  Fallback fallback = Fallback::kZero;
  double threshold_lambda = kDefaultLambda;
  bool emit_predictions = true;
};

struct AnomalyScores {
  std::vector<double> scores;  // NaN where evaluated_mask is false
  std::optional<std::vector<std::uint8_t>> predictions;
  double reference_value = 0.0;
  double mu_delta = 0.0;
  double sigma_delta = 0.0;
  std::optional<double> tau;
  std::vector<bool> evaluated_mask;
  std::vector<bool> valid_mask;
};

// Median (midpoint of the middle two for even counts) or mean over the
// entries where `valid` is set.
double global_reference(std::span<const double> values, const std::vector<bool>& valid,
                        Reference mode);

// |value - reference| for valid entries, NaN elsewhere.
std::vector<double> deviations(std::span<const double> values, const std::vector<bool>& valid,
                               double reference);

struct Standardized {
  std::vector<double> scores;  // NaN where not valid
  double mu = 0.0;
  double sigma = 0.0;  // population form
};

// z-scores over the valid entries; all zero when sigma < kDegenerateSigma.
Standardized standardize(std::span<const double> deltas, const std::vector<bool>& valid);

AnomalyScores apply_fallback(const Standardized& valid_scores, const std::vector<bool>& valid,
                             Fallback policy);

// tau = mean + lambda * std over the emitted (evaluated) scores; a node is
// flagged when its score is strictly above tau.
void binary_threshold(AnomalyScores& scores, double lambda);

// Reference, deviation, standardization, fallback and, if requested,
// thresholding, in that order.
AnomalyScores calibrate(std::span<const double> raw, const std::vector<bool>& valid,
                        const CalibrationConfig& config);

}  // namespace ndiv

#endif  // NDIV_CALIBRATION_HPP_
