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


/* C interface to the NeighborDiv scoring engine.
 *
 * Every handle is opaque and owned by the caller once returned; release it with
 * the matching *_free function. Functions that can fail return ndiv_status and
 * record a message retrievable with ndiv_last_error() on the calling thread.
 */
#ifndef NDIV_NDIV_H_
#define NDIV_NDIV_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(NDIV_BUILDING_LIBRARY)
#define NDIV_API __declspec(dllexport)
#else
#define NDIV_API __declspec(dllimport)
#endif
#else
#define NDIV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ndiv_status {
  NDIV_OK = 0,
  NDIV_ERR_INVALID_ARGUMENT = 1,
  NDIV_ERR_PARSE = 2,
  NDIV_ERR_DIMENSION = 3,
  NDIV_ERR_VALIDATION = 4,
  NDIV_ERR_INDEX = 5,
  NDIV_ERR_IO = 6,
  NDIV_ERR_DEGENERATE = 7,
  NDIV_ERR_UNDEFINED_METRIC = 8,
  NDIV_ERR_SPEC = 9,
  NDIV_ERR_PRECONDITION = 10,
  NDIV_ERR_INTERNAL = 11
} ndiv_status;

typedef enum ndiv_method {
  NDIV_METHOD_NEIGHBORDIV = 0,
  NDIV_METHOD_LCC = 1,
  NDIV_METHOD_NRS = 2,
  NDIV_METHOD_PCD = 3,
  NDIV_METHOD_AMEN = 4
} ndiv_method;

typedef enum ndiv_statistic {
  NDIV_STAT_VARIANCE = 0,
  NDIV_STAT_STD = 1,
  NDIV_STAT_MEAN = 2,
  NDIV_STAT_ENTROPY = 3
} ndiv_statistic;

typedef enum ndiv_reference { NDIV_REF_MEDIAN = 0, NDIV_REF_MEAN = 1 } ndiv_reference;

typedef enum ndiv_fallback {
  NDIV_FALLBACK_ZERO = 0,
  NDIV_FALLBACK_MEDIAN = 1,
  NDIV_FALLBACK_VALID_ONLY = 2
} ndiv_fallback;

typedef enum ndiv_anomaly_type {
  NDIV_ANOMALY_TYPE_H = 0,
  NDIV_ANOMALY_TYPE_D = 1,
  NDIV_ANOMALY_MIXED = 2
} ndiv_anomaly_type;

typedef struct ndiv_graph ndiv_graph;
typedef struct ndiv_result ndiv_result;
typedef struct ndiv_eval ndiv_eval;
typedef struct ndiv_synthetic ndiv_synthetic;

NDIV_API const char* ndiv_version(void);
NDIV_API const char* ndiv_status_name(ndiv_status status);

/* Message of the last failed call on this thread; empty string if none. */
NDIV_API const char* ndiv_last_error(void);

/* Releases strings returned through char** out-parameters. */
NDIV_API void ndiv_string_free(char* text);

/* Name parsing. Accepts the same spellings as the command line. */
NDIV_API ndiv_status ndiv_parse_method(const char* text, ndiv_method* out);
NDIV_API ndiv_status ndiv_parse_statistic(const char* text, ndiv_statistic* out);
NDIV_API ndiv_status ndiv_parse_reference(const char* text, ndiv_reference* out);
NDIV_API ndiv_status ndiv_parse_fallback(const char* text, ndiv_fallback* out);
NDIV_API ndiv_status ndiv_parse_anomaly_type(const char* text, ndiv_anomaly_type* out);
NDIV_API const char* ndiv_method_name(ndiv_method method);
NDIV_API const char* ndiv_anomaly_type_name(ndiv_anomaly_type type);

/* ---- graphs ---- */

NDIV_API ndiv_status ndiv_graph_load(const char* edges_path, const char* features_path,
                                     const char* labels_path /* nullable */, ndiv_graph** out);

/* Builds a graph from memory. features is row-major n x d; edges are m (src, dst)
 * pairs of dense ids in [0, n); labels may be NULL. */
NDIV_API ndiv_status ndiv_graph_from_arrays(size_t n, size_t d, const double* features, size_t m,
                                            const uint32_t* src, const uint32_t* dst,
                                            const uint8_t* labels, ndiv_graph** out);

NDIV_API void ndiv_graph_free(ndiv_graph* graph);

NDIV_API size_t ndiv_graph_num_nodes(const ndiv_graph* graph);
NDIV_API size_t ndiv_graph_num_edges(const ndiv_graph* graph);
NDIV_API size_t ndiv_graph_feature_dim(const ndiv_graph* graph);
NDIV_API size_t ndiv_graph_degree(const ndiv_graph* graph, size_t node);

/* Id the node carried in the input file (differs from the index only when the
 * loader remapped sparse ids). */
NDIV_API int64_t ndiv_graph_node_id(const ndiv_graph* graph, size_t node);

/* NULL when the graph carries no labels. Length is ndiv_graph_num_nodes. */
NDIV_API const uint8_t* ndiv_graph_labels(const ndiv_graph* graph);

NDIV_API size_t ndiv_graph_self_loops_dropped(const ndiv_graph* graph);
NDIV_API size_t ndiv_graph_duplicates_dropped(const ndiv_graph* graph);

/* Writes the r-dimensional projected features, one row per node. */
NDIV_API ndiv_status ndiv_graph_write_projection(const ndiv_graph* graph, int rank, uint64_t seed,
                                                 const char* path);

/* ---- scoring ---- */

typedef struct ndiv_score_config {
  ndiv_method method;
  int rank;
  ndiv_statistic statistic;
  uint64_t pair_budget; /* 0 means every neighbor pair */
  int entropy_bins;
  ndiv_reference reference;
  ndiv_fallback fallback;
  double lambda;
  int emit_predictions;
  double pcd_weights[3];
  uint64_t seed;
  size_t threads; /* 0 means NDIV_THREADS or the hardware default */
} ndiv_score_config;

NDIV_API void ndiv_score_config_init(ndiv_score_config* config);

/* Canonical text form and its 16-hex-digit digest. Thread count is excluded. */
NDIV_API ndiv_status ndiv_score_config_canonical(const ndiv_score_config* config, char** out);
NDIV_API ndiv_status ndiv_score_config_digest(const ndiv_score_config* config, char** out);

NDIV_API ndiv_status ndiv_score(const ndiv_graph* graph, const ndiv_score_config* config,
                                ndiv_result** out);

NDIV_API void ndiv_result_free(ndiv_result* result);

NDIV_API size_t ndiv_result_size(const ndiv_result* result);

/* Calibrated scores; NaN for nodes excluded by the valid_only fallback. */
NDIV_API const double* ndiv_result_scores(const ndiv_result* result);

/* 1 where the node received a score. */
NDIV_API const uint8_t* ndiv_result_evaluated(const ndiv_result* result);

/* Binary flags, or NULL when thresholding was disabled. */
NDIV_API const uint8_t* ndiv_result_predictions(const ndiv_result* result);

/* Uncalibrated statistic (D_i or the heuristic score); NaN where undefined. */
NDIV_API const double* ndiv_result_raw(const ndiv_result* result);
NDIV_API const uint8_t* ndiv_result_valid(const ndiv_result* result);

typedef struct ndiv_calibration {
  double reference_value;
  double mu_delta;
  double sigma_delta;
  double tau; /* NaN when no threshold was computed */
  size_t num_valid;
  size_t num_flagged;
  int rank_used;
} ndiv_calibration;

NDIV_API void ndiv_result_calibration(const ndiv_result* result, ndiv_calibration* out);

/* node_id,score[,prediction] with node ids taken from the graph. */
NDIV_API ndiv_status ndiv_result_write_csv(const ndiv_result* result, const ndiv_graph* graph,
                                           const char* path);

/* node_id,value,valid[,pairs] dump of the raw statistic. */
NDIV_API ndiv_status ndiv_result_write_raw_csv(const ndiv_result* result, const ndiv_graph* graph,
                                               const char* path);

/* ---- evaluation ---- */

/* Scores against labels (length ndiv_result_size). ks may be NULL to use the
 * default cutoffs {100, 500, 1000, 5000}; cutoffs are clamped to the number of
 * evaluated nodes. */
NDIV_API ndiv_status ndiv_evaluate(const ndiv_result* result, const uint8_t* labels,
                                   const size_t* ks, size_t num_ks, ndiv_eval** out);

NDIV_API void ndiv_eval_free(ndiv_eval* eval);

NDIV_API double ndiv_eval_auc(const ndiv_eval* eval);
NDIV_API double ndiv_eval_ap(const ndiv_eval* eval);
NDIV_API double ndiv_eval_ks(const ndiv_eval* eval);
NDIV_API size_t ndiv_eval_num_evaluated(const ndiv_eval* eval);
NDIV_API size_t ndiv_eval_num_positive(const ndiv_eval* eval);

/* Precision at the requested cutoff k (before clamping). */
NDIV_API ndiv_status ndiv_eval_precision_at(const ndiv_eval* eval, size_t k, double* out);

NDIV_API ndiv_status ndiv_eval_write_pr_csv(const ndiv_eval* eval, const char* path);

/* JSON run report; eval may be NULL. Numbers carry 6 significant digits. */
NDIV_API ndiv_status ndiv_report_json(const ndiv_graph* graph, const ndiv_result* result,
                                      const ndiv_score_config* config, const ndiv_eval* eval,
                                      char** out);

/* ---- synthetic benchmark ---- */

typedef struct ndiv_synth_spec {
  size_t n;
  size_t communities;
  double target_homophily;
  double avg_degree;
  size_t feature_dim;
  double center_variance;
  double noise_variance;
  ndiv_anomaly_type anomaly_type;
  size_t anomalies_per_type;
  uint64_t seed;
} ndiv_synth_spec;

NDIV_API void ndiv_synth_spec_init(ndiv_synth_spec* spec);

NDIV_API ndiv_status ndiv_synth_probabilities(const ndiv_synth_spec* spec, double* p_in,
                                              double* p_out);

/* SBM graph with anomalies injected and labels attached. */
NDIV_API ndiv_status ndiv_synth_generate(const ndiv_synth_spec* spec, ndiv_synthetic** out);

NDIV_API void ndiv_synth_free(ndiv_synthetic* synthetic);

/* Borrowed; valid until the synthetic handle is freed. */
NDIV_API const ndiv_graph* ndiv_synth_graph(const ndiv_synthetic* synthetic);

NDIV_API double ndiv_synth_measured_homophily(const ndiv_synthetic* synthetic);

/* edges.txt, features.csv, labels.txt, communities.txt and meta.json. */
NDIV_API ndiv_status ndiv_synth_write(const ndiv_synthetic* synthetic, const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* NDIV_NDIV_H_ */
