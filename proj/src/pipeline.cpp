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

#include "pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace ndiv {

const char* method_name(Method method) {
  switch (method) {
    case Method::kNeighborDiv: return "neighbordiv";
    case Method::kLcc: return "lcc";
    case Method::kNrs: return "nrs";
    case Method::kPcd: return "pcd";
    case Method::kAmenEgo: return "amen";
  }
  return "unknown";
}

const char* statistic_name(DiversityStatistic statistic) {
  switch (statistic) {
    case DiversityStatistic::kVariance: return "variance";
    case DiversityStatistic::kStdDev: return "std";
    case DiversityStatistic::kMean: return "mean";
    case DiversityStatistic::kEntropy: return "entropy";
  }
  return "unknown";
}

const char* reference_name(Reference reference) {
  return reference == Reference::kMedian ? "median" : "mean";
}

const char* fallback_name(Fallback fallback) {
  switch (fallback) {
    case Fallback::kZero: return "zero";
    case Fallback::kMedianOfValid: return "median";
    case Fallback::kValidOnly: return "valid_only";
  }
  return "unknown";
}

Method parse_method(const std::string& text) {
  if (text == "neighbordiv") return Method::kNeighborDiv;
  if (text == "lcc") return Method::kLcc;
  if (text == "nrs") return Method::kNrs;
  if (text == "pcd") return Method::kPcd;
  if (text == "amen" || text == "amen_ego") return Method::kAmenEgo;
  throw Error(ErrorCode::kInvalidArgument, "unknown method '" + text + "'");
}

DiversityStatistic parse_statistic(const std::string& text) {
  if (text == "variance") return DiversityStatistic::kVariance;
  if (text == "std" || text == "std_dev") return DiversityStatistic::kStdDev;
  if (text == "mean") return DiversityStatistic::kMean;
  if (text == "entropy") return DiversityStatistic::kEntropy;
  throw Error(ErrorCode::kInvalidArgument, "unknown statistic '" + text + "'");
}

Reference parse_reference(const std::string& text) {
  if (text == "median") return Reference::kMedian;
  if (text == "mean") return Reference::kMean;
  throw Error(ErrorCode::kInvalidArgument, "unknown reference '" + text + "'");
}

Fallback parse_fallback(const std::string& text) {
  if (text == "zero") return Fallback::kZero;
  if (text == "median" || text == "median_of_valid") return Fallback::kMedianOfValid;
  if (text == "valid_only" || text == "valid-only") return Fallback::kValidOnly;
  throw Error(ErrorCode::kInvalidArgument, "unknown fallback '" + text + "'");
}

DiversityConfig ScoreConfig::diversity_config() const {
  DiversityConfig d;
  d.statistic = statistic;
  d.sampling_budget = sampling_budget;
  d.entropy_bins = entropy_bins;
  d.master_seed = seed;
  d.threads = threads;
  return d;
}

void ScoreConfig::validate() const {
  if (rank < 1) throw Error(ErrorCode::kInvalidArgument, "rank must be >= 1");
  diversity_config().validate();
  pcd.validate();
  if (!std::isfinite(calibration.threshold_lambda)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda must be finite");
  }
}

AnomalyScores score_projected(const AttributedGraph& graph, const ProjectedFeatures& pf,
                              const DiversityConfig& diversity, const CalibrationConfig& calibration) {
  const DiversityScores ds = diversity_all(graph, pf, diversity);
  return calibrate(ds.values, ds.valid_mask, calibration);
}

AnomalyScores score_graph(const AttributedGraph& graph, const DiversityConfig& diversity,
                          const CalibrationConfig& calibration, int rank, std::uint64_t seed) {
  return score_projected(graph, project(graph, rank, seed), diversity, calibration);
}

ScoreResult run_scorer(const AttributedGraph& graph, const ScoreConfig& config) {
  config.validate();
  ScoreResult result;
  if (config.method == Method::kLcc) {
    const RawHeuristicScores raw = lcc_scores(graph, config.threads);
    result.scores = calibrate_heuristic(raw, config.calibration);
    result.raw_values = raw.values;
    result.raw_valid = raw.valid_mask;
    return result;
  }

  const ProjectedFeatures pf = project(graph, config.rank, config.seed);
  result.rank_used = pf.rank_used;
  RawHeuristicScores raw;
  switch (config.method) {
    case Method::kNeighborDiv: {
      DiversityScores ds = diversity_all(graph, pf, config.diversity_config());
      raw.values = std::move(ds.values);
      raw.valid_mask = std::move(ds.valid_mask);
      result.pairs_evaluated = std::move(ds.pairs_evaluated);
      break;
    }
    case Method::kNrs: raw = nrs_scores(graph, pf, config.threads); break;
    case Method::kPcd: raw = pcd_scores(graph, pf, config.pcd, config.threads); break;
    case Method::kAmenEgo: raw = amen_ego_scores(graph, pf, config.threads); break;
    case Method::kLcc: break;
  }
  result.scores = calibrate_heuristic(raw, config.calibration);
  for (std::size_t i = 0; i < raw.values.size(); ++i) {
    if (!raw.valid_mask[i]) raw.values[i] = std::numeric_limits<double>::quiet_NaN();
  }
  result.raw_values = std::move(raw.values);
  result.raw_valid = std::move(raw.valid_mask);
  return result;
}

std::string config_canonical(const ScoreConfig& config) {
  std::ostringstream out;
  char lambda[32];
  std::snprintf(lambda, sizeof(lambda), "%.17g", config.calibration.threshold_lambda);
  out << "method=" << method_name(config.method) << ";rank=" << config.rank
      << ";statistic=" << statistic_name(config.statistic) << ";pairs="
      << (config.sampling_budget ? std::to_string(*config.sampling_budget) : "full")
      << ";entropy_bins=" << config.entropy_bins
      << ";reference=" << reference_name(config.calibration.reference)
      << ";fallback=" << fallback_name(config.calibration.fallback) << ";lambda=" << lambda
      << ";threshold=" << (config.calibration.emit_predictions ? 1 : 0) << ";pcd_weights=";
  for (std::size_t i = 0; i < config.pcd.hop_weights.size(); ++i) {
    char w[32];
    std::snprintf(w, sizeof(w), "%.17g", config.pcd.hop_weights[i]);
    out << (i ? "," : "") << w;
  }
  out << ";seed=" << config.seed;
  return out.str();
}

std::string config_digest(const ScoreConfig& config) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char c : config_canonical(config)) {
    hash ^= c;
    hash *= 0x100000001B3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace ndiv
