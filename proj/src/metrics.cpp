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

#include "metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ndiv {
namespace {

std::pair<std::size_t, std::size_t> class_counts(std::span<const double> scores,
                                                 std::span<const std::uint8_t> labels) {
  if (scores.size() != labels.size()) {
    throw Error(ErrorCode::kDimension, "score and label vectors differ in length");
  }
  std::size_t positives = 0;
  for (auto y : labels) positives += y ? 1 : 0;
  return {positives, labels.size() - positives};
}

void require_both_classes(std::size_t positives, std::size_t negatives, const char* metric) {
  if (positives == 0 || negatives == 0) {
    throw Error(ErrorCode::kUndefinedMetric,
                std::string(metric) + " is undefined: labels must contain both classes (got " +
                    std::to_string(positives) + " positive, " + std::to_string(negatives) +
                    " negative)");
  }
}

void require_positive(std::size_t positives, const char* metric) {
  if (positives == 0) {
    throw Error(ErrorCode::kUndefinedMetric,
                std::string(metric) + " is undefined: labels contain no positives");
  }
}

}  // namespace

std::vector<std::size_t> ranking_order(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return order;
}

double auc(std::span<const double> scores, std::span<const std::uint8_t> labels) {
  const auto [positives, negatives] = class_counts(scores, labels);
  require_both_classes(positives, negatives, "AUC");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });
  double positive_rank_sum = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && scores[order[j + 1]] == scores[order[i]]) ++j;
    // Ranks i+1 .. j+1 share their average.
    const double rank = 0.5 * static_cast<double>(i + 1 + j + 1);
    for (std::size_t t = i; t <= j; ++t) {
      if (labels[order[t]]) positive_rank_sum += rank;
    }
    i = j + 1;
  }
  const double np = static_cast<double>(positives);
  const double nn = static_cast<double>(negatives);
  return (positive_rank_sum - np * (np + 1.0) / 2.0) / (np * nn);
}

double average_precision(std::span<const double> scores, std::span<const std::uint8_t> labels) {
  const auto [positives, negatives] = class_counts(scores, labels);
  require_positive(positives, "average precision");
  const auto order = ranking_order(scores);
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (!labels[order[rank]]) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(rank + 1);
  }
  return sum / static_cast<double>(positives);
}

double precision_at_k(std::span<const double> scores, std::span<const std::uint8_t> labels,
                      std::size_t k) {
  class_counts(scores, labels);
  if (k < 1 || k > scores.size()) {
    throw Error(ErrorCode::kInvalidArgument, "precision@K requires 1 <= K <= " +
                                                 std::to_string(scores.size()) + ", got " +
                                                 std::to_string(k));
  }
  const auto order = ranking_order(scores);
  std::size_t hits = 0;
  for (std::size_t rank = 0; rank < k; ++rank) hits += labels[order[rank]] ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(k);
}

double ks_statistic(std::span<const double> scores, std::span<const std::uint8_t> labels) {
  const auto [positives, negatives] = class_counts(scores, labels);
  require_both_classes(positives, negatives, "KS statistic");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });
  std::size_t seen_pos = 0;
  std::size_t seen_neg = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (labels[order[i]]) {
      ++seen_pos;
    } else {
      ++seen_neg;
    }
    // Evaluate the CDFs only once every tied value has been consumed.
    if (i + 1 < order.size() && scores[order[i + 1]] == scores[order[i]]) continue;
    const double gap = std::abs(static_cast<double>(seen_pos) / static_cast<double>(positives) -
                                static_cast<double>(seen_neg) / static_cast<double>(negatives));
    best = std::max(best, gap);
  }
  return best;
}

std::vector<PrPoint> pr_curve(std::span<const double> scores, std::span<const std::uint8_t> labels) {
  const auto [positives, negatives] = class_counts(scores, labels);
  require_positive(positives, "precision-recall curve");
  const auto order = ranking_order(scores);
  std::vector<PrPoint> points;
  points.reserve(order.size());
  std::size_t hits = 0;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    hits += labels[order[rank]] ? 1 : 0;
    points.push_back({static_cast<double>(hits) / static_cast<double>(positives),
                      static_cast<double>(hits) / static_cast<double>(rank + 1)});
  }
  return points;
}

EvalReport evaluate(std::span<const double> scores, std::span<const std::uint8_t> labels,
                    const std::vector<bool>& mask, const std::vector<std::size_t>& ks) {
  if (scores.size() != labels.size() || (!mask.empty() && mask.size() != scores.size())) {
    throw Error(ErrorCode::kDimension, "scores, labels and mask differ in length");
  }
  std::vector<double> s;
  std::vector<std::uint8_t> y;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!mask.empty() && !mask[i]) continue;
    s.push_back(scores[i]);
    y.push_back(labels[i]);
  }
  EvalReport report;
  report.n_evaluated = s.size();
  report.n_positive = static_cast<std::size_t>(std::count(y.begin(), y.end(), 1));
  report.auc = auc(s, y);
  report.ap = average_precision(s, y);
  report.ks_statistic = ks_statistic(s, y);
  report.pr_points = pr_curve(s, y);
  for (std::size_t k : ks) {
    const std::size_t clamped = std::clamp<std::size_t>(k, 1, s.size());
    report.precision_at_k[clamped] = precision_at_k(s, y, clamped);
  }
  return report;
}

}  // namespace ndiv
