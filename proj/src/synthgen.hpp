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

#ifndef NDIV_SYNTHGEN_HPP_
#define NDIV_SYNTHGEN_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "graph.hpp"

namespace ndiv {

enum class AnomalyType { kTypeH, kTypeD, kMixed };

const char* anomaly_type_name(AnomalyType type);

// Planted-partition benchmark with homophily-calibrated edge probabilities.
struct SyntheticSpec {
  std::size_t n = 2000;
  std::size_t communities = 5;
  double target_homophily = 0.5;
  double avg_degree = 15.0;
  std::size_t feature_dim = 50;
  double center_variance = 9.0;
  double noise_variance = 1.0;
  AnomalyType anomaly_type = AnomalyType::kMixed;
  std::size_t anomalies_per_type = 50;
  std::uint64_t seed = 0;

  void validate() const;
};

struct EdgeProbabilities {
  double p_in = 0.0;
  double p_out = 0.0;
};

struct InjectedAnomaly {
  NodeId node = 0;
  AnomalyType type = AnomalyType::kTypeH;  // kTypeH or kTypeD
};

struct SyntheticGraph {
  AttributedGraph graph;  // carries labels once anomalies are injected
  std::vector<int> communities;
  double measured_homophily = 0.0;  // of the pre-injection graph
  std::vector<InjectedAnomaly> anomalies;
};

// p_in = deg*h / (n/k - 1), p_out = deg*(1-h) / (n - n/k). With a single
// community every edge is intra-community and p_in = deg / (n - 1).
EdgeProbabilities sbm_probabilities(const SyntheticSpec& spec);

// Samples every unordered pair independently; node i belongs to community
// i / (n/k). Features are community center plus isotropic Gaussian noise.
SyntheticGraph generate_sbm(const SyntheticSpec& spec);

double homophily_ratio(const AttributedGraph& graph, const std::vector<int>& communities);

// Rewires anomalies_per_type nodes per requested type. Anomalies are drawn
// among nodes with degree >= 2 that are not adjacent to an earlier anomaly,
// keep their degree, and only receive non-anomalous neighbors.
SyntheticGraph inject_anomalies(SyntheticGraph graph, const SyntheticSpec& spec);

// generate_sbm followed by inject_anomalies.
SyntheticGraph generate_benchmark(const SyntheticSpec& spec);

// Writes edges.txt, features.csv, labels.txt, communities.txt and meta.json.
void write_synthetic(const SyntheticGraph& graph, const SyntheticSpec& spec,
                     const std::filesystem::path& out_dir);

}  // namespace ndiv

#endif  // NDIV_SYNTHGEN_HPP_
