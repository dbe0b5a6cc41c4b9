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

#ifndef NDIV_DIVERSITY_HPP_
#define NDIV_DIVERSITY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "projection.hpp"

namespace ndiv {

enum class DiversityStatistic { kVariance, kStdDev, kMean, kEntropy };

struct DiversityConfig {
  DiversityStatistic statistic = DiversityStatistic::kVariance;
  // Absent means every neighbor pair is evaluated.
  std::optional<std::uint64_t> sampling_budget;
  int entropy_bins = 10;
  std::uint64_t master_seed = 0;
  std::size_t threads = 0;  // 0 = default_thread_count()

  void validate() const;
};

struct DiversityScores {
  std::vector<double> values;  // NaN where the node is not valid
  std::vector<bool> valid_mask;
  std::vector<std::uint64_t> pairs_evaluated;
};

using PairIndex = std::pair<std::uint32_t, std::uint32_t>;
using PairRng = std::mt19937_64;

// Number of unordered pairs among `degree` items.
constexpr std::uint64_t pair_count(std::uint64_t degree) {
  return degree < 2 ? 0 : degree * (degree - 1) / 2;
}

// Bijection between flat indices [0, C(d,2)) and pairs p < q. Flat indices
// follow colexicographic order: m = q(q-1)/2 + p.
std::uint64_t pair_to_flat(PairIndex pair);
PairIndex flat_to_pair(std::uint64_t flat);

// Uniform sample of min(budget, C(d,2)) distinct pairs, returned in ascending
// flat-index order. When the budget covers every pair no randomness is drawn.
std::vector<PairIndex> sample_pairs(std::uint32_t degree, std::uint64_t budget, PairRng& rng);

// Seed for node `node` derived from the master seed; independent of the
// order in which nodes are visited.
std::uint64_t node_seed(std::uint64_t master_seed, std::uint64_t node);

inline double pairwise_similarity(std::span<const double> a, std::span<const double> b) {
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  return dot > 1.0 ? 1.0 : (dot < -1.0 ? -1.0 : dot);
}

// Streaming accumulator for the dispersion statistics.
class SimilarityAccumulator {
 public:
  explicit SimilarityAccumulator(DiversityStatistic statistic, int entropy_bins = 10);

  void add(double similarity);
  std::uint64_t count() const { return count_; }
  double result() const;

 private:
  DiversityStatistic statistic_;
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  std::vector<std::uint64_t> histogram_;
};

double dispersion_statistic(std::span<const double> similarities, const DiversityConfig& config);

std::optional<double> neighbor_diversity(const AttributedGraph& graph, const ProjectedFeatures& pf,
                                         NodeId node, const DiversityConfig& config);

DiversityScores diversity_all(const AttributedGraph& graph, const ProjectedFeatures& pf,
                              const DiversityConfig& config);

}  // namespace ndiv

#endif  // NDIV_DIVERSITY_HPP_
