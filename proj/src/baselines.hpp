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

#ifndef NDIV_BASELINES_HPP_
#define NDIV_BASELINES_HPP_

#include <cstddef>
#include <vector>

#include "calibration.hpp"
#include "graph.hpp"
#include "projection.hpp"

namespace ndiv {

enum class HeuristicKind { kLcc, kNrs, kPcd, kAmenEgo };

struct PcdOptions {
  std::vector<double> hop_weights = {1.0, 0.7, 0.5};  // one weight per propagation round

  void validate() const;
};

struct RawHeuristicScores {
  std::vector<double> values;
  std::vector<bool> valid_mask;
};

// Local clustering coefficient 2T / (d(d-1)); valid where degree >= 2.
RawHeuristicScores lcc_scores(const AttributedGraph& graph, std::size_t threads = 0);

// ||x_i - (A_hat X)_i||_2 over the l1-normalized projection, with
// A_hat = D^-1/2 A D^-1/2 and degrees clamped at 1. Valid where degree >= 1.
RawHeuristicScores nrs_scores(const AttributedGraph& graph, const ProjectedFeatures& pf,
                              std::size_t threads = 0);

// Weighted sum of (1 - cos(h^(l-1)_i, h^(l)_i)) over propagation rounds
// h^(l) = A_hat h^(l-1), h^(0) = normalized projection. Cosine against a zero
// vector is 0. Valid where degree >= 1.
RawHeuristicScores pcd_scores(const AttributedGraph& graph, const ProjectedFeatures& pf,
                              const PcdOptions& options = {}, std::size_t threads = 0);

// Ego-network attributed normality: for C = {i} + N(i) with boundary B,
//   x_I(f) = sum_{p,q in C} (A_pq - k_p k_q / 2m) x_p(f) x_q(f)
//   x_E(f) = -sum_{(p,b) in E, p in C, b in B} (1 - min(1, k_p k_b / 2m)) x_p(f) x_b(f)
// on per-dimension [0,1]-rescaled features. Each vector is divided by
// max(1, max_f |.|) and clipped (x_I to [0,1], x_E to [-1,0]); the normality is
// ||max(x_I + x_E, 0)||_2, or max_f (x_I + x_E)(f) when nothing is positive.
// The raw score is the negated normality. Valid where degree >= 2.
RawHeuristicScores amen_ego_scores(const AttributedGraph& graph, const ProjectedFeatures& pf,
                                   std::size_t threads = 0);

// Per-dimension min-max rescale to [0,1]; constant columns become 0.
Matrix rescale_unit_interval(const Matrix& x);

struct AmenVectors {
  Vector internal;      // x_I
  Vector external;      // x_E
  Vector internal_hat;  // rescaled x_I, in [0,1]
  Vector external_hat;  // rescaled x_E, in [-1,0]
  double normality = 0.0;
};

// AMEN-Ego contribution vectors of one node over pre-rescaled features.
AmenVectors amen_ego_vectors(const AttributedGraph& graph, const Matrix& rescaled, NodeId node);

AnomalyScores calibrate_heuristic(const RawHeuristicScores& raw, const CalibrationConfig& config);

}  // namespace ndiv

#endif  // NDIV_BASELINES_HPP_
