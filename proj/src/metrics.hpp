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

#ifndef NDIV_METRICS_HPP_
#define NDIV_METRICS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace ndiv {

struct PrPoint {
  double recall = 0.0;
  double precision = 0.0;
};

struct EvalReport {
  double auc = 0.0;
  double ap = 0.0;
  std::map<std::size_t, double> precision_at_k;
  double ks_statistic = 0.0;
  std::vector<PrPoint> pr_points;
  std::size_t n_evaluated = 0;
  std::size_t n_positive = 0;
  std::string method;
  std::string config_digest;
};

// ROC AUC via the Mann-Whitney statistic with average ranks for ties.
double auc(std::span<const double> scores, std::span<const std::uint8_t> labels);

// Step-interpolated average precision over the ranking by descending score,
// ties broken by ascending index.
double average_precision(std::span<const double> scores, std::span<const std::uint8_t> labels);

double precision_at_k(std::span<const double> scores, std::span<const std::uint8_t> labels,
                      std::size_t k);

// Two-sample Kolmogorov-Smirnov statistic between positive and negative scores.
double ks_statistic(std::span<const double> scores, std::span<const std::uint8_t> labels);

// One (recall, precision) point per prefix of the ranking used by AP.
std::vector<PrPoint> pr_curve(std::span<const double> scores, std::span<const std::uint8_t> labels);

// Ranking positions by descending score then ascending index.
std::vector<std::size_t> ranking_order(std::span<const double> scores);

inline const std::vector<std::size_t> kDefaultPrecisionKs = {100, 500, 1000, 5000};

// All metrics on the entries selected by `mask` (all entries when empty).
// Each K is clamped to the number of evaluated nodes.
EvalReport evaluate(std::span<const double> scores, std::span<const std::uint8_t> labels,
                    const std::vector<bool>& mask,
                    const std::vector<std::size_t>& ks = kDefaultPrecisionKs);

}  // namespace ndiv

#endif  // NDIV_METRICS_HPP_
