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

#ifndef NDIV_PIPELINE_HPP_
#define NDIV_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "baselines.hpp"
#include "calibration.hpp"
#include "diversity.hpp"
#include "graph.hpp"
#include "projection.hpp"

namespace ndiv {

enum class Method { kNeighborDiv, kLcc, kNrs, kPcd, kAmenEgo };

const char* method_name(Method method);
const char* statistic_name(DiversityStatistic statistic);
const char* reference_name(Reference reference);
const char* fallback_name(Fallback fallback);

Method parse_method(const std::string& text);
DiversityStatistic parse_statistic(const std::string& text);
Reference parse_reference(const std::string& text);
Fallback parse_fallback(const std::string& text);

// Complete scorer configuration. `seed` drives both the randomized SVD and
// the per-node pair sampling streams.
struct ScoreConfig {
  Method method = Method::kNeighborDiv;
  int rank = kDefaultRank;
  DiversityStatistic statistic = DiversityStatistic::kVariance;
  std::optional<std::uint64_t> sampling_budget;
  int entropy_bins = 10;
  CalibrationConfig calibration;
  PcdOptions pcd;
  std::uint64_t seed = 0;
  std::size_t threads = 0;

  DiversityConfig diversity_config() const;
  void validate() const;
};

struct ScoreResult {
  AnomalyScores scores;
  std::vector<double> raw_values;  // D_i or the heuristic's R_i (NaN where undefined)
  std::vector<bool> raw_valid;
  std::vector<std::uint64_t> pairs_evaluated;  // neighbordiv only
  int rank_used = 0;
};

// Projection, diversity and calibration for a precomputed projection.
AnomalyScores score_projected(const AttributedGraph& graph, const ProjectedFeatures& pf,
                              const DiversityConfig& diversity, const CalibrationConfig& calibration);

AnomalyScores score_graph(const AttributedGraph& graph, const DiversityConfig& diversity,
                          const CalibrationConfig& calibration, int rank = kDefaultRank,
                          std::uint64_t seed = 0);

// Dispatches on config.method; every scorer shares the calibration stage.
ScoreResult run_scorer(const AttributedGraph& graph, const ScoreConfig& config);

// Canonical "key=value;..." rendering of everything that affects the output.
std::string config_canonical(const ScoreConfig& config);
// 64-bit FNV-1a of config_canonical, as 16 hex digits.
std::string config_digest(const ScoreConfig& config);

}  // namespace ndiv

#endif  // NDIV_PIPELINE_HPP_
