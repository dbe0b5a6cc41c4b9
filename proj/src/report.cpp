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

#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

namespace ndiv {
namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  return out;
}

std::int64_t id_of(std::span<const std::int64_t> node_ids, std::size_t i) {
  return node_ids.empty() ? static_cast<std::int64_t>(i) : node_ids[i];
}

nlohmann::ordered_json number_or_null(double value) {
  if (!std::isfinite(value)) return nullptr;
  return report_number(value);
}

}  // namespace

double report_number(double value) {
  if (!std::isfinite(value) || value == 0.0) return value == 0.0 ? 0.0 : value;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return std::strtod(buf, nullptr);
}

std::string full_precision(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string run_report_json(const ScoreConfig& config, const RunSummary& summary,
                            const AnomalyScores& scores, const EvalReport* metrics) {
  nlohmann::ordered_json report;
  report["method"] = method_name(config.method);

  nlohmann::ordered_json cfg;
  cfg["method"] = method_name(config.method);
  cfg["rank"] = config.rank;
  cfg["statistic"] = statistic_name(config.statistic);
  if (config.sampling_budget) {
    cfg["pairs"] = *config.sampling_budget;
  } else {
    cfg["pairs"] = "full";
  }
  cfg["entropy_bins"] = config.entropy_bins;
  cfg["reference"] = reference_name(config.calibration.reference);
  cfg["fallback"] = fallback_name(config.calibration.fallback);
  cfg["lambda"] = report_number(config.calibration.threshold_lambda);
  cfg["threshold"] = config.calibration.emit_predictions;
  nlohmann::ordered_json weights = nlohmann::ordered_json::array();
  for (double w : config.pcd.hop_weights) weights.push_back(report_number(w));
  cfg["pcd_weights"] = std::move(weights);
  cfg["seed"] = config.seed;
  report["config"] = std::move(cfg);
  report["config_digest"] = config_digest(config);

  report["graph"] = {{"num_nodes", summary.num_nodes},
                     {"num_edges", summary.num_edges},
                     {"num_valid", summary.num_valid},
                     {"rank_used", summary.rank_used}};

  nlohmann::ordered_json calibration;
  calibration["reference_value"] = number_or_null(scores.reference_value);
  calibration["mu_delta"] = number_or_null(scores.mu_delta);
  calibration["sigma_delta"] = number_or_null(scores.sigma_delta);
  calibration["tau"] = scores.tau ? number_or_null(*scores.tau) : nlohmann::ordered_json(nullptr);
  report["calibration"] = std::move(calibration);

  if (scores.predictions) {
    std::size_t flagged = 0;
    for (auto p : *scores.predictions) flagged += p;
    report["num_flagged"] = flagged;
  }

  if (metrics) {
    nlohmann::ordered_json m;
    m["auc"] = report_number(metrics->auc);
    m["ap"] = report_number(metrics->ap);
    nlohmann::ordered_json pk;
    for (const auto& [k, v] : metrics->precision_at_k) pk[std::to_string(k)] = report_number(v);
    m["precision_at_k"] = std::move(pk);
    m["ks_statistic"] = report_number(metrics->ks_statistic);
    m["n_evaluated"] = metrics->n_evaluated;
    m["n_positive"] = metrics->n_positive;
    report["metrics"] = std::move(m);
  }
  return report.dump(2) + "\n";
}

void write_scores_csv(const AnomalyScores& scores, std::span<const std::int64_t> node_ids,
                      bool include_predictions, const std::filesystem::path& path) {
  include_predictions = include_predictions && scores.predictions.has_value();
  auto out = open_output(path);
  out << (include_predictions ? "node_id,score,prediction\n" : "node_id,score\n");
  for (std::size_t i = 0; i < scores.scores.size(); ++i) {
    if (!scores.evaluated_mask[i]) continue;
    out << id_of(node_ids, i) << ',' << full_precision(scores.scores[i]);
    if (include_predictions) out << ',' << static_cast<int>((*scores.predictions)[i]);
    out << '\n';
  }
}

void write_pr_csv(std::span<const PrPoint> points, const std::filesystem::path& path) {
  auto out = open_output(path);
  out << "recall,precision\n";
  for (const auto& p : points) out << full_precision(p.recall) << ',' << full_precision(p.precision) << '\n';
}

void write_values_csv(std::span<const double> values, const std::vector<bool>& valid,
                      std::span<const std::uint64_t> pairs, std::span<const std::int64_t> node_ids,
                      const std::filesystem::path& path) {
  auto out = open_output(path);
  out << (pairs.empty() ? "node_id,value,valid\n" : "node_id,value,valid,pairs\n");
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << id_of(node_ids, i) << ',' << (valid[i] ? full_precision(values[i]) : std::string()) << ','
        << (valid[i] ? 1 : 0);
    if (!pairs.empty()) out << ',' << pairs[i];
    out << '\n';
  }
}

void write_matrix_csv(const Matrix& m, const std::filesystem::path& path) {
  auto out = open_output(path);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << full_precision(m(i, j));
    }
    out << '\n';
  }
}

}  // namespace ndiv
