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


#include "ndiv/ndiv.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <filesystem>
#include <limits>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"
#include "graph.hpp"
#include "metrics.hpp"
#include "pipeline.hpp"
#include "projection.hpp"
#include "report.hpp"
#include "synthgen.hpp"

struct ndiv_graph {
  ndiv::AttributedGraph graph;
  std::vector<std::int64_t> node_ids;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

struct ndiv_result {
  ndiv::ScoreResult result;
  std::vector<std::uint8_t> evaluated;
  std::vector<std::uint8_t> valid;
  std::size_t num_nodes = 0;
  std::size_t num_edges = 0;
};

struct ndiv_eval {
  ndiv::EvalReport report;
};

struct ndiv_synthetic {
  ndiv::SyntheticSpec spec;
  ndiv::SyntheticGraph synthetic;
  ndiv_graph view;
};

namespace {

thread_local std::string g_last_error;

ndiv_status to_status(ndiv::ErrorCode code) {
  switch (code) {
    case ndiv::ErrorCode::kInvalidArgument: return NDIV_ERR_INVALID_ARGUMENT;
    case ndiv::ErrorCode::kParse: return NDIV_ERR_PARSE;
    case ndiv::ErrorCode::kDimension: return NDIV_ERR_DIMENSION;
    case ndiv::ErrorCode::kValidation: return NDIV_ERR_VALIDATION;
    case ndiv::ErrorCode::kIndex: return NDIV_ERR_INDEX;
    case ndiv::ErrorCode::kIo: return NDIV_ERR_IO;
    case ndiv::ErrorCode::kDegenerate: return NDIV_ERR_DEGENERATE;
    case ndiv::ErrorCode::kUndefinedMetric: return NDIV_ERR_UNDEFINED_METRIC;
    case ndiv::ErrorCode::kSpec: return NDIV_ERR_SPEC;
    case ndiv::ErrorCode::kPrecondition: return NDIV_ERR_PRECONDITION;
  }
  return NDIV_ERR_INTERNAL;
}

ndiv_status fail(ndiv_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
ndiv_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return NDIV_OK;
  } catch (const ndiv::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(NDIV_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NDIV_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NDIV_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    throw ndiv::Error(ndiv::ErrorCode::kInvalidArgument, std::string(what) + " is null");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::uint8_t> to_bytes(const std::vector<bool>& mask) {
  return {mask.begin(), mask.end()};
}

ndiv::ScoreConfig to_internal(const ndiv_score_config& c) {
  ndiv::ScoreConfig cfg;
  switch (c.method) {
    case NDIV_METHOD_NEIGHBORDIV: cfg.method = ndiv::Method::kNeighborDiv; break;
    case NDIV_METHOD_LCC: cfg.method = ndiv::Method::kLcc; break;
    case NDIV_METHOD_NRS: cfg.method = ndiv::Method::kNrs; break;
    case NDIV_METHOD_PCD: cfg.method = ndiv::Method::kPcd; break;
    case NDIV_METHOD_AMEN: cfg.method = ndiv::Method::kAmenEgo; break;
    default: throw ndiv::Error(ndiv::ErrorCode::kInvalidArgument, "unknown method");
  }
  switch (c.statistic) {
    case NDIV_STAT_VARIANCE: cfg.statistic = ndiv::DiversityStatistic::kVariance; break;
    case NDIV_STAT_STD: cfg.statistic = ndiv::DiversityStatistic::kStdDev; break;
    case NDIV_STAT_MEAN: cfg.statistic = ndiv::DiversityStatistic::kMean; break;
    case NDIV_STAT_ENTROPY: cfg.statistic = ndiv::DiversityStatistic::kEntropy; break;
    default: throw ndiv::Error(ndiv::ErrorCode::kInvalidArgument, "unknown statistic");
  }
  switch (c.reference) {
    case NDIV_REF_MEDIAN: cfg.calibration.reference = ndiv::Reference::kMedian; break;
    case NDIV_REF_MEAN: cfg.calibration.reference = ndiv::Reference::kMean; break;
    default: throw ndiv::Error(ndiv::ErrorCode::kInvalidArgument, "unknown reference");
  }
  switch (c.fallback) {
    case NDIV_FALLBACK_ZERO: cfg.calibration.fallback = ndiv::Fallback::kZero; break;
    case NDIV_FALLBACK_MEDIAN: cfg.calibration.fallback = ndiv::Fallback::kMedianOfValid; break;
    case NDIV_FALLBACK_VALID_ONLY: cfg.calibration.fallback = ndiv::Fallback::kValidOnly; break;
    default: throw ndiv::Error(ndiv::ErrorCode::kInvalidArgument, "unknown fallback");
  }
  cfg.rank = c.rank;
  if (c.pair_budget > 0) cfg.sampling_budget = c.pair_budget;
  cfg.entropy_bins = c.entropy_bins;
  cfg.calibration.threshold_lambda = c.lambda;
  cfg.calibration.emit_predictions = c.emit_predictions != 0;
  cfg.pcd.hop_weights.assign(std::begin(c.pcd_weights), std::end(c.pcd_weights));
  cfg.seed = c.seed;
  cfg.threads = c.threads;
  return cfg;
}

ndiv::SyntheticSpec to_internal(const ndiv_synth_spec& s) {
  ndiv::SyntheticSpec spec;
  spec.n = s.n;
  spec.communities = s.communities;
  spec.target_homophily = s.target_homophily;
  spec.avg_degree = s.avg_degree;
  spec.feature_dim = s.feature_dim;
  spec.center_variance = s.center_variance;
  spec.noise_variance = s.noise_variance;
  switch (s.anomaly_type) {
    case NDIV_ANOMALY_TYPE_H: spec.anomaly_type = ndiv::AnomalyType::kTypeH; break;
    case NDIV_ANOMALY_TYPE_D: spec.anomaly_type = ndiv::AnomalyType::kTypeD; break;
    case NDIV_ANOMALY_MIXED: spec.anomaly_type = ndiv::AnomalyType::kMixed; break;
    default: throw ndiv::Error(ndiv::ErrorCode::kInvalidArgument, "unknown anomaly type");
  }
  spec.anomalies_per_type = s.anomalies_per_type;
  spec.seed = s.seed;
  return spec;
}

std::vector<std::int64_t> node_ids_of(const ndiv_graph& g) {
  if (!g.node_ids.empty()) return g.node_ids;
  std::vector<std::int64_t> ids(g.graph.num_nodes());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<std::int64_t>(i);
  return ids;
}

template <typename Enum, typename Parse>
ndiv_status parse_enum(const char* text, Enum* out, Parse parse) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = static_cast<Enum>(parse(text));
  });
}

}  // namespace

extern "C" {

const char* ndiv_version(void) { return "0.1.0"; }

const char* ndiv_status_name(ndiv_status status) {
  switch (status) {
    case NDIV_OK: return "ok";
    case NDIV_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case NDIV_ERR_PARSE: return "parse_error";
    case NDIV_ERR_DIMENSION: return "dimension_error";
    case NDIV_ERR_VALIDATION: return "validation_error";
    case NDIV_ERR_INDEX: return "index_error";
    case NDIV_ERR_IO: return "io_error";
    case NDIV_ERR_DEGENERATE: return "degenerate";
    case NDIV_ERR_UNDEFINED_METRIC: return "undefined_metric";
    case NDIV_ERR_SPEC: return "spec_error";
    case NDIV_ERR_PRECONDITION: return "precondition_violation";
    case NDIV_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* ndiv_last_error(void) { return g_last_error.c_str(); }

void ndiv_string_free(char* text) { std::free(text); }

ndiv_status ndiv_parse_method(const char* text, ndiv_method* out) {
  return parse_enum(text, out, [](const char* t) { return static_cast<int>(ndiv::parse_method(t)); });
}

ndiv_status ndiv_parse_statistic(const char* text, ndiv_statistic* out) {
  return parse_enum(text, out,
                    [](const char* t) { return static_cast<int>(ndiv::parse_statistic(t)); });
}

ndiv_status ndiv_parse_reference(const char* text, ndiv_reference* out) {
  return parse_enum(text, out,
                    [](const char* t) { return static_cast<int>(ndiv::parse_reference(t)); });
}

ndiv_status ndiv_parse_fallback(const char* text, ndiv_fallback* out) {
  return parse_enum(text, out,
                    [](const char* t) { return static_cast<int>(ndiv::parse_fallback(t)); });
}

ndiv_status ndiv_parse_anomaly_type(const char* text, ndiv_anomaly_type* out) {
  return parse_enum(text, out, [](const char* t) {
    const std::string s(t);
    if (s == "type_h" || s == "h") return static_cast<int>(NDIV_ANOMALY_TYPE_H);
    if (s == "type_d" || s == "d") return static_cast<int>(NDIV_ANOMALY_TYPE_D);
    if (s == "mixed") return static_cast<int>(NDIV_ANOMALY_MIXED);
    throw ndiv::Error(ndiv::ErrorCode::kInvalidArgument, "unknown anomaly type '" + s + "'");
  });
}

const char* ndiv_method_name(ndiv_method method) {
  switch (method) {
    case NDIV_METHOD_NEIGHBORDIV: return ndiv::method_name(ndiv::Method::kNeighborDiv);
    case NDIV_METHOD_LCC: return ndiv::method_name(ndiv::Method::kLcc);
    case NDIV_METHOD_NRS: return ndiv::method_name(ndiv::Method::kNrs);
    case NDIV_METHOD_PCD: return ndiv::method_name(ndiv::Method::kPcd);
    case NDIV_METHOD_AMEN: return ndiv::method_name(ndiv::Method::kAmenEgo);
  }
  return "unknown";
}

const char* ndiv_anomaly_type_name(ndiv_anomaly_type type) {
  switch (type) {
    case NDIV_ANOMALY_TYPE_H: return ndiv::anomaly_type_name(ndiv::AnomalyType::kTypeH);
    case NDIV_ANOMALY_TYPE_D: return ndiv::anomaly_type_name(ndiv::AnomalyType::kTypeD);
    case NDIV_ANOMALY_MIXED: return ndiv::anomaly_type_name(ndiv::AnomalyType::kMixed);
  }
  return "unknown";
}

ndiv_status ndiv_graph_load(const char* edges_path, const char* features_path,
                            const char* labels_path, ndiv_graph** out) {
  return guarded([&] {
    require(edges_path, "edges_path");
    require(features_path, "features_path");
    require(out, "out");
    std::optional<std::filesystem::path> labels;
    if (labels_path != nullptr) labels = labels_path;
    ndiv::LoadedGraph loaded = ndiv::load_graph(edges_path, features_path, labels);
    auto g = std::make_unique<ndiv_graph>();
    g->graph = std::move(loaded.graph);
    g->node_ids = std::move(loaded.node_ids);
    g->self_loops_dropped = loaded.self_loops_dropped;
    g->duplicates_dropped = loaded.duplicates_dropped;
    *out = g.release();
  });
}

ndiv_status ndiv_graph_from_arrays(size_t n, size_t d, const double* features, size_t m,
                                   const uint32_t* src, const uint32_t* dst, const uint8_t* labels,
                                   ndiv_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (n * d > 0) require(features, "features");
    if (m > 0) {
      require(src, "src");
      require(dst, "dst");
    }
    ndiv::Matrix x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < n * d; ++i) {
      if (!std::isfinite(features[i])) {
        throw ndiv::Error(ndiv::ErrorCode::kValidation, "non-finite feature value");
      }
      x.data()[i] = features[i];
    }
    std::vector<ndiv::Edge> edges(m);
    for (std::size_t e = 0; e < m; ++e) edges[e] = {src[e], dst[e]};
    std::optional<std::vector<std::uint8_t>> y;
    if (labels != nullptr) {
      y.emplace(labels, labels + n);
      for (auto v : *y) {
        if (v > 1) throw ndiv::Error(ndiv::ErrorCode::kValidation, "labels must be 0 or 1");
      }
    }
    auto g = std::make_unique<ndiv_graph>();
    g->graph = ndiv::build_graph(edges, std::move(x), std::move(y));
    *out = g.release();
  });
}

void ndiv_graph_free(ndiv_graph* graph) { delete graph; }

size_t ndiv_graph_num_nodes(const ndiv_graph* graph) { return graph->graph.num_nodes(); }
size_t ndiv_graph_num_edges(const ndiv_graph* graph) { return graph->graph.num_edges(); }
size_t ndiv_graph_feature_dim(const ndiv_graph* graph) { return graph->graph.feature_dim(); }

size_t ndiv_graph_degree(const ndiv_graph* graph, size_t node) {
  return graph->graph.degree(static_cast<ndiv::NodeId>(node));
}

int64_t ndiv_graph_node_id(const ndiv_graph* graph, size_t node) {
  return graph->node_ids.empty() ? static_cast<int64_t>(node) : graph->node_ids[node];
}

const uint8_t* ndiv_graph_labels(const ndiv_graph* graph) {
  const auto& labels = graph->graph.labels();
  return labels ? labels->data() : nullptr;
}

size_t ndiv_graph_self_loops_dropped(const ndiv_graph* graph) { return graph->self_loops_dropped; }
size_t ndiv_graph_duplicates_dropped(const ndiv_graph* graph) { return graph->duplicates_dropped; }

ndiv_status ndiv_graph_write_projection(const ndiv_graph* graph, int rank, uint64_t seed,
                                        const char* path) {
  return guarded([&] {
    require(graph, "graph");
    require(path, "path");
    const ndiv::ProjectedFeatures pf = ndiv::project(graph->graph, rank, seed);
    ndiv::write_matrix_csv(pf.projected, path);
  });
}

void ndiv_score_config_init(ndiv_score_config* config) {
  const ndiv::ScoreConfig d;
  config->method = NDIV_METHOD_NEIGHBORDIV;
  config->rank = d.rank;
  config->statistic = NDIV_STAT_VARIANCE;
  config->pair_budget = 0;
  config->entropy_bins = d.entropy_bins;
  config->reference = NDIV_REF_MEDIAN;
  config->fallback = NDIV_FALLBACK_ZERO;
  config->lambda = d.calibration.threshold_lambda;
  config->emit_predictions = d.calibration.emit_predictions ? 1 : 0;
  for (std::size_t i = 0; i < 3; ++i) config->pcd_weights[i] = d.pcd.hop_weights[i];
  config->seed = 0;
  config->threads = 0;
}

ndiv_status ndiv_score_config_canonical(const ndiv_score_config* config, char** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    *out = copy_string(ndiv::config_canonical(to_internal(*config)));
  });
}

ndiv_status ndiv_score_config_digest(const ndiv_score_config* config, char** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    *out = copy_string(ndiv::config_digest(to_internal(*config)));
  });
}

ndiv_status ndiv_score(const ndiv_graph* graph, const ndiv_score_config* config,
                       ndiv_result** out) {
  return guarded([&] {
    require(graph, "graph");
    require(config, "config");
    require(out, "out");
    auto r = std::make_unique<ndiv_result>();
    r->result = ndiv::run_scorer(graph->graph, to_internal(*config));
    r->evaluated = to_bytes(r->result.scores.evaluated_mask);
    r->valid = to_bytes(r->result.raw_valid);
    r->num_nodes = graph->graph.num_nodes();
    r->num_edges = graph->graph.num_edges();
    *out = r.release();
  });
}

void ndiv_result_free(ndiv_result* result) { delete result; }

size_t ndiv_result_size(const ndiv_result* result) { return result->result.scores.scores.size(); }

const double* ndiv_result_scores(const ndiv_result* result) {
  return result->result.scores.scores.data();
}

const uint8_t* ndiv_result_evaluated(const ndiv_result* result) { return result->evaluated.data(); }

const uint8_t* ndiv_result_predictions(const ndiv_result* result) {
  const auto& p = result->result.scores.predictions;
  return p ? p->data() : nullptr;
}

const double* ndiv_result_raw(const ndiv_result* result) {
  return result->result.raw_values.data();
}

const uint8_t* ndiv_result_valid(const ndiv_result* result) { return result->valid.data(); }

void ndiv_result_calibration(const ndiv_result* result, ndiv_calibration* out) {
  const ndiv::AnomalyScores& s = result->result.scores;
  out->reference_value = s.reference_value;
  out->mu_delta = s.mu_delta;
  out->sigma_delta = s.sigma_delta;
  out->tau = s.tau ? *s.tau : std::numeric_limits<double>::quiet_NaN();
  out->num_valid = static_cast<std::size_t>(std::count(s.valid_mask.begin(), s.valid_mask.end(), true));
  out->num_flagged = 0;
  if (s.predictions) {
    for (auto p : *s.predictions) out->num_flagged += p;
  }
  out->rank_used = result->result.rank_used;
}

ndiv_status ndiv_result_write_csv(const ndiv_result* result, const ndiv_graph* graph,
                                  const char* path) {
  return guarded([&] {
    require(result, "result");
    require(graph, "graph");
    require(path, "path");
    const auto ids = node_ids_of(*graph);
    ndiv::write_scores_csv(result->result.scores, ids,
                           result->result.scores.predictions.has_value(), path);
  });
}

ndiv_status ndiv_result_write_raw_csv(const ndiv_result* result, const ndiv_graph* graph,
                                      const char* path) {
  return guarded([&] {
    require(result, "result");
    require(graph, "graph");
    require(path, "path");
    const auto ids = node_ids_of(*graph);
    ndiv::write_values_csv(result->result.raw_values, result->result.raw_valid,
                           result->result.pairs_evaluated, ids, path);
  });
}

ndiv_status ndiv_evaluate(const ndiv_result* result, const uint8_t* labels, const size_t* ks,
                          size_t num_ks, ndiv_eval** out) {
  return guarded([&] {
    require(result, "result");
    require(labels, "labels");
    require(out, "out");
    const auto& s = result->result.scores;
    std::vector<std::size_t> cutoffs = ndiv::kDefaultPrecisionKs;
    if (ks != nullptr) cutoffs.assign(ks, ks + num_ks);
    auto e = std::make_unique<ndiv_eval>();
    e->report = ndiv::evaluate(s.scores, std::span<const std::uint8_t>(labels, s.scores.size()),
                               s.evaluated_mask, cutoffs);
    *out = e.release();
  });
}

void ndiv_eval_free(ndiv_eval* eval) { delete eval; }

double ndiv_eval_auc(const ndiv_eval* eval) { return eval->report.auc; }
double ndiv_eval_ap(const ndiv_eval* eval) { return eval->report.ap; }
double ndiv_eval_ks(const ndiv_eval* eval) { return eval->report.ks_statistic; }
size_t ndiv_eval_num_evaluated(const ndiv_eval* eval) { return eval->report.n_evaluated; }
size_t ndiv_eval_num_positive(const ndiv_eval* eval) { return eval->report.n_positive; }

ndiv_status ndiv_eval_precision_at(const ndiv_eval* eval, size_t k, double* out) {
  return guarded([&] {
    require(eval, "eval");
    require(out, "out");
    const std::size_t clamped = std::clamp<std::size_t>(k, 1, eval->report.n_evaluated);
    auto it = eval->report.precision_at_k.find(clamped);
    if (it == eval->report.precision_at_k.end()) {
      throw ndiv::Error(ndiv::ErrorCode::kInvalidArgument,
                        "precision at " + std::to_string(k) + " was not computed");
    }
    *out = it->second;
  });
}

ndiv_status ndiv_eval_write_pr_csv(const ndiv_eval* eval, const char* path) {
  return guarded([&] {
    require(eval, "eval");
    require(path, "path");
    ndiv::write_pr_csv(eval->report.pr_points, path);
  });
}

ndiv_status ndiv_report_json(const ndiv_graph* graph, const ndiv_result* result,
                             const ndiv_score_config* config, const ndiv_eval* eval, char** out) {
  return guarded([&] {
    require(graph, "graph");
    require(result, "result");
    require(config, "config");
    require(out, "out");
    ndiv::RunSummary summary;
    summary.num_nodes = result->num_nodes;
    summary.num_edges = result->num_edges;
    summary.num_valid = static_cast<std::size_t>(
        std::count(result->result.raw_valid.begin(), result->result.raw_valid.end(), true));
    summary.rank_used = result->result.rank_used;
    *out = copy_string(ndiv::run_report_json(to_internal(*config), summary, result->result.scores,
                                             eval ? &eval->report : nullptr));
  });
}

void ndiv_synth_spec_init(ndiv_synth_spec* spec) {
  const ndiv::SyntheticSpec d;
  spec->n = d.n;
  spec->communities = d.communities;
  spec->target_homophily = d.target_homophily;
  spec->avg_degree = d.avg_degree;
  spec->feature_dim = d.feature_dim;
  spec->center_variance = d.center_variance;
  spec->noise_variance = d.noise_variance;
  spec->anomaly_type = NDIV_ANOMALY_MIXED;
  spec->anomalies_per_type = d.anomalies_per_type;
  spec->seed = d.seed;
}

ndiv_status ndiv_synth_probabilities(const ndiv_synth_spec* spec, double* p_in, double* p_out) {
  return guarded([&] {
    require(spec, "spec");
    require(p_in, "p_in");
    require(p_out, "p_out");
    const auto p = ndiv::sbm_probabilities(to_internal(*spec));
    *p_in = p.p_in;
    *p_out = p.p_out;
  });
}

ndiv_status ndiv_synth_generate(const ndiv_synth_spec* spec, ndiv_synthetic** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    auto s = std::make_unique<ndiv_synthetic>();
    s->spec = to_internal(*spec);
    s->synthetic = ndiv::generate_benchmark(s->spec);
    s->view.graph = s->synthetic.graph;
    *out = s.release();
  });
}

void ndiv_synth_free(ndiv_synthetic* synthetic) { delete synthetic; }

const ndiv_graph* ndiv_synth_graph(const ndiv_synthetic* synthetic) { return &synthetic->view; }

double ndiv_synth_measured_homophily(const ndiv_synthetic* synthetic) {
  return synthetic->synthetic.measured_homophily;
}

ndiv_status ndiv_synth_write(const ndiv_synthetic* synthetic, const char* out_dir) {
  return guarded([&] {
    require(synthetic, "synthetic");
    require(out_dir, "out_dir");
    ndiv::write_synthetic(synthetic->synthetic, synthetic->spec, out_dir);
  });
}

}  // extern "C"
