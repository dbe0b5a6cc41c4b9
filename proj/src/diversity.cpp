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

#include "diversity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "parallel.hpp"

namespace ndiv {

void DiversityConfig::validate() const {
  if (sampling_budget && *sampling_budget < 1) {
    throw Error(ErrorCode::kInvalidArgument, "sampling budget must be >= 1");
  }
  if (entropy_bins < 2) throw Error(ErrorCode::kInvalidArgument, "entropy_bins must be >= 2");
}

std::uint64_t pair_to_flat(PairIndex pair) {
  const std::uint64_t q = pair.second;
  return q * (q - 1) / 2 + pair.first;
}

PairIndex flat_to_pair(std::uint64_t flat) {
  auto q = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(flat))) / 2.0);
  while (q > 1 && q * (q - 1) / 2 > flat) --q;
  while ((q + 1) * q / 2 <= flat) ++q;
  const std::uint64_t p = flat - q * (q - 1) / 2;
  return {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q)};
}

std::vector<PairIndex> sample_pairs(std::uint32_t degree, std::uint64_t budget, PairRng& rng) {
  if (degree < 2) throw Error(ErrorCode::kPrecondition, "sample_pairs: degree must be >= 2");
  if (budget < 1) throw Error(ErrorCode::kPrecondition, "sample_pairs: budget must be >= 1");
  const std::uint64_t total = pair_count(degree);
  std::vector<PairIndex> pairs;
  if (budget >= total) {
    pairs.reserve(total);
    for (std::uint32_t q = 1; q < degree; ++q) {
      for (std::uint32_t p = 0; p < q; ++p) pairs.emplace_back(p, q);
    }
    return pairs;
  }

  // Floyd's algorithm: exactly `budget` distinct flat indices, uniformly.
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(budget * 2);
  std::vector<std::uint64_t> flat;
  flat.reserve(budget);
  for (std::uint64_t j = total - budget; j < total; ++j) {
    std::uniform_int_distribution<std::uint64_t> pick(0, j);
    const std::uint64_t t = pick(rng);
    const std::uint64_t value = chosen.insert(t).second ? t : j;
    if (value == j) chosen.insert(j);
    flat.push_back(value);
  }
  std::sort(flat.begin(), flat.end());
  pairs.reserve(budget);
  for (auto m : flat) pairs.push_back(flat_to_pair(m));
  return pairs;
}

std::uint64_t node_seed(std::uint64_t master_seed, std::uint64_t node) {
  // splitmix64 finalizer over a combination of both inputs.
  std::uint64_t z = master_seed * 0x9E3779B97F4A7C15ULL + node + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SimilarityAccumulator::SimilarityAccumulator(DiversityStatistic statistic, int entropy_bins)
    : statistic_(statistic) {
  if (statistic_ == DiversityStatistic::kEntropy) {
    histogram_.assign(static_cast<std::size_t>(entropy_bins), 0);
  }
}

void SimilarityAccumulator::add(double similarity) {
  ++count_;
  const double delta = similarity - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (similarity - mean_);
  if (!histogram_.empty()) {
    const auto bins = histogram_.size();
    auto bin = static_cast<std::size_t>(std::floor((similarity + 1.0) / 2.0 * static_cast<double>(bins)));
    histogram_[std::min(bin, bins - 1)] += 1;
  }
}

double SimilarityAccumulator::result() const {
  if (count_ == 0) throw Error(ErrorCode::kPrecondition, "dispersion of an empty similarity set");
  const double variance = std::max(0.0, m2_ / static_cast<double>(count_));
  switch (statistic_) {
    case DiversityStatistic::kVariance: return variance;
    case DiversityStatistic::kStdDev: return std::sqrt(variance);
    case DiversityStatistic::kMean: return mean_;
    case DiversityStatistic::kEntropy: {
      double h = 0.0;
      for (auto c : histogram_) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(count_);
        h -= p * std::log(p);
      }
      return h;
    }
  }
  return variance;
}

double dispersion_statistic(std::span<const double> similarities, const DiversityConfig& config) {
  if (similarities.empty()) {
    throw Error(ErrorCode::kPrecondition, "dispersion_statistic: empty similarity list");
  }
  SimilarityAccumulator acc(config.statistic, config.entropy_bins);
  for (double s : similarities) acc.add(s);
  return acc.result();
}

namespace {

struct NodeResult {
  double value = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t pairs = 0;
  bool valid = false;
};

// Neighbor directions are copied into `scratch` so the pair loops run over
// contiguous memory.
NodeResult evaluate_node(const AttributedGraph& graph, const ProjectedFeatures& pf, NodeId node,
                         const DiversityConfig& config, std::vector<double>& scratch) {
  NodeResult result;
  const auto nbrs = graph.neighbors(node);
  const std::size_t d = nbrs.size();
  if (d < 2) return result;

  const std::size_t r = static_cast<std::size_t>(pf.directions.cols());
  scratch.resize(d * r);
  for (std::size_t j = 0; j < d; ++j) {
    const double* row = pf.directions.row(nbrs[j]).data();
    std::copy(row, row + r, scratch.data() + j * r);
  }
  const auto dir = [&](std::size_t j) { return std::span<const double>(scratch.data() + j * r, r); };

  SimilarityAccumulator acc(config.statistic, config.entropy_bins);
  const std::uint64_t total = pair_count(d);
  if (!config.sampling_budget || *config.sampling_budget >= total) {
    for (std::size_t q = 1; q < d; ++q) {
      for (std::size_t p = 0; p < q; ++p) acc.add(pairwise_similarity(dir(p), dir(q)));
    }
  } else {
    PairRng rng(node_seed(config.master_seed, node));
    for (const auto& [p, q] : sample_pairs(static_cast<std::uint32_t>(d), *config.sampling_budget, rng)) {
      acc.add(pairwise_similarity(dir(p), dir(q)));
    }
  }
  result.value = acc.result();
  result.pairs = acc.count();
  result.valid = true;
  return result;
}

void check_inputs(const AttributedGraph& graph, const ProjectedFeatures& pf) {
  if (static_cast<std::size_t>(pf.directions.rows()) != graph.num_nodes()) {
    throw Error(ErrorCode::kDimension, "projected features do not match the graph's node count");
  }
}

}  // namespace

std::optional<double> neighbor_diversity(const AttributedGraph& graph, const ProjectedFeatures& pf,
                                         NodeId node, const DiversityConfig& config) {
  config.validate();
  check_inputs(graph, pf);
  if (node >= graph.num_nodes()) throw Error(ErrorCode::kIndex, "node index out of range");
  std::vector<double> scratch;
  const NodeResult r = evaluate_node(graph, pf, node, config, scratch);
  if (!r.valid) return std::nullopt;
  return r.value;
}

DiversityScores diversity_all(const AttributedGraph& graph, const ProjectedFeatures& pf,
                              const DiversityConfig& config) {
  config.validate();
  check_inputs(graph, pf);
  const std::size_t n = graph.num_nodes();
  DiversityScores out;
  out.values.assign(n, std::numeric_limits<double>::quiet_NaN());
  out.pairs_evaluated.assign(n, 0);
  std::vector<std::uint8_t> valid(n, 0);

  parallel_for(n, config.threads, [&](std::size_t begin, std::size_t end) {
    std::vector<double> scratch;
    for (std::size_t i = begin; i < end; ++i) {
      const NodeResult r = evaluate_node(graph, pf, static_cast<NodeId>(i), config, scratch);
      out.values[i] = r.value;
      out.pairs_evaluated[i] = r.pairs;
      valid[i] = r.valid ? 1 : 0;
    }
  });
  out.valid_mask.assign(valid.begin(), valid.end());
  return out;
}

}  // namespace ndiv
