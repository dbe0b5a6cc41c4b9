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

#include "calibration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ndiv {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_lengths(std::size_t values, std::size_t mask) {
  if (values != mask) throw Error(ErrorCode::kDimension, "value and mask lengths differ");
}

double median_of(std::vector<double> v) {
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

}  // namespace

double global_reference(std::span<const double> values, const std::vector<bool>& valid,
                        Reference mode) {
  check_lengths(values.size(), valid.size());
  std::vector<double> selected;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (valid[i]) selected.push_back(values[i]);
  }
  if (selected.empty()) {
    throw Error(ErrorCode::kDegenerate, "no valid nodes to compute a global reference from");
  }
  if (mode == Reference::kMedian) return median_of(std::move(selected));
  double sum = 0.0;
  for (double v : selected) sum += v;
  return sum / static_cast<double>(selected.size());
}

std::vector<double> deviations(std::span<const double> values, const std::vector<bool>& valid,
                               double reference) {
  check_lengths(values.size(), valid.size());
  std::vector<double> out(values.size(), kNaN);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (valid[i]) out[i] = std::abs(values[i] - reference);
  }
  return out;
}

Standardized standardize(std::span<const double> deltas, const std::vector<bool>& valid) {
  check_lengths(deltas.size(), valid.size());
  Standardized out;
  out.scores.assign(deltas.size(), kNaN);
  std::size_t count = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!valid[i]) continue;
    sum += deltas[i];
    ++count;
  }
  if (count == 0) return out;
  out.mu = sum / static_cast<double>(count);
  double ss = 0.0;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (valid[i]) ss += (deltas[i] - out.mu) * (deltas[i] - out.mu);
  }
  out.sigma = std::sqrt(ss / static_cast<double>(count));
  const bool degenerate = out.sigma < kDegenerateSigma;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!valid[i]) continue;
    out.scores[i] = degenerate ? 0.0 : (deltas[i] - out.mu) / out.sigma;
  }
  return out;
}

AnomalyScores apply_fallback(const Standardized& valid_scores, const std::vector<bool>& valid,
                             Fallback policy) {
  check_lengths(valid_scores.scores.size(), valid.size());
  AnomalyScores out;
  out.mu_delta = valid_scores.mu;
  out.sigma_delta = valid_scores.sigma;
  out.valid_mask = valid;
  out.scores = valid_scores.scores;
  out.evaluated_mask.assign(valid.size(), true);

  double fill = 0.0;
  if (policy == Fallback::kMedianOfValid) {
    std::vector<double> selected;
    for (std::size_t i = 0; i < valid.size(); ++i) {
      if (valid[i]) selected.push_back(valid_scores.scores[i]);
    }
    fill = selected.empty() ? 0.0 : median_of(std::move(selected));
  }
  for (std::size_t i = 0; i < valid.size(); ++i) {
    if (valid[i]) continue;
    if (policy == Fallback::kValidOnly) {
      out.evaluated_mask[i] = false;
      out.scores[i] = kNaN;
    } else {
      out.scores[i] = fill;
    }
  }
  return out;
}

void binary_threshold(AnomalyScores& scores, double lambda) {
  std::size_t count = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < scores.scores.size(); ++i) {
    if (!scores.evaluated_mask[i]) continue;
    sum += scores.scores[i];
    ++count;
  }
  const double mu = count ? sum / static_cast<double>(count) : 0.0;
  double ss = 0.0;
  for (std::size_t i = 0; i < scores.scores.size(); ++i) {
    if (scores.evaluated_mask[i]) ss += (scores.scores[i] - mu) * (scores.scores[i] - mu);
  }
  double sigma = count ? std::sqrt(ss / static_cast<double>(count)) : 0.0;
  // Constant scores: rounding in the mean must not flag anything.
  const bool degenerate = sigma < kDegenerateSigma;
  if (degenerate) sigma = 0.0;
  const double tau = mu + lambda * sigma;

  std::vector<std::uint8_t> predictions(scores.scores.size(), 0);
  for (std::size_t i = 0; i < scores.scores.size() && !degenerate; ++i) {
    if (scores.evaluated_mask[i] && scores.scores[i] > tau) predictions[i] = 1;
  }
  scores.tau = tau;
  scores.predictions = std::move(predictions);
}

AnomalyScores calibrate(std::span<const double> raw, const std::vector<bool>& valid,
                        const CalibrationConfig& config) {
  const double reference = global_reference(raw, valid, config.reference);
  const Standardized standardized = standardize(deviations(raw, valid, reference), valid);
  AnomalyScores out = apply_fallback(standardized, valid, config.fallback);
  out.reference_value = reference;
  if (config.emit_predictions) binary_threshold(out, config.threshold_lambda);
  return out;
}

}  // namespace ndiv
