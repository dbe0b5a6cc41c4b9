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

#ifndef NDIV_REPORT_HPP_
#define NDIV_REPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "calibration.hpp"
#include "metrics.hpp"
#include "pipeline.hpp"

namespace ndiv {

// Rounds to 6 significant digits so serialized reports are byte-stable.
double report_number(double value);

// "%.17g" rendering used for full-precision CSV columns.
std::string full_precision(double value);

struct RunSummary {
  std::size_t num_nodes = 0;
  std::size_t num_edges = 0;
  std::size_t num_valid = 0;
  int rank_used = 0;
};

// JSON run report with a fixed key order. `metrics` is omitted when absent.
std::string run_report_json(const ScoreConfig& config, const RunSummary& summary,
                            const AnomalyScores& scores, const EvalReport* metrics);

// node_id,score[,prediction]; rows for nodes outside evaluated_mask are
// skipped. `node_ids` maps dense ids to the ids written (identity if empty).
void write_scores_csv(const AnomalyScores& scores, std::span<const std::int64_t> node_ids,
                      bool include_predictions, const std::filesystem::path& path);

void write_pr_csv(std::span<const PrPoint> points, const std::filesystem::path& path);

// node_id,value,valid,pairs (pairs column only when provided).
void write_values_csv(std::span<const double> values, const std::vector<bool>& valid,
                      std::span<const std::uint64_t> pairs, std::span<const std::int64_t> node_ids,
                      const std::filesystem::path& path);

void write_matrix_csv(const Matrix& m, const std::filesystem::path& path);

}  // namespace ndiv

#endif  // NDIV_REPORT_HPP_
