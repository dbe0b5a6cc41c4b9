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

#include "baselines.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"

namespace ndiv {
namespace {

double clamp_degree(std::size_t d) { return static_cast<double>(std::max<std::size_t>(d, 1)); }

// One round of A_hat * h.
Matrix propagate(const AttributedGraph& graph, const Matrix& h, std::size_t threads) {
  Matrix out = Matrix::Zero(h.rows(), h.cols());
  parallel_for(graph.num_nodes(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto node = static_cast<NodeId>(i);
      const double di = clamp_degree(graph.degree(node));
      for (NodeId j : graph.neighbors(node)) {
        out.row(i) += h.row(j) / std::sqrt(di * clamp_degree(graph.degree(j)));
      }
    }
  });
  return out;
}

double cosine_or_zero(const Eigen::Ref<const Vector>& a, const Eigen::Ref<const Vector>& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na < kZeroRowThreshold || nb < kZeroRowThreshold) return 0.0;
  return std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
}

std::vector<bool> degree_mask(const AttributedGraph& graph, std::size_t min_degree) {
  std::vector<bool> mask(graph.num_nodes());
  for (NodeId i = 0; i < graph.num_nodes(); ++i) mask[i] = graph.degree(i) >= min_degree;
  return mask;
}

void check_projection(const AttributedGraph& graph, const ProjectedFeatures& pf) {
  if (static_cast<std::size_t>(pf.normalized.rows()) != graph.num_nodes()) {
    throw Error(ErrorCode::kDimension, "projected features do not match the graph's node count");
  }
}

}  // namespace

void PcdOptions::validate() const {
  if (hop_weights.empty()) throw Error(ErrorCode::kInvalidArgument, "PCD needs at least one hop");
  for (double w : hop_weights) {
    if (!(w > 0.0)) throw Error(ErrorCode::kInvalidArgument, "PCD hop weights must be positive");
  }
}

RawHeuristicScores lcc_scores(const AttributedGraph& graph, std::size_t threads) {
  RawHeuristicScores out;
  const std::size_t n = graph.num_nodes();
  out.values.assign(n, 0.0);
  out.valid_mask = degree_mask(graph, 2);
  parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto nbrs = graph.neighbors(static_cast<NodeId>(i));
      const std::size_t d = nbrs.size();
      if (d < 2) continue;
      std::size_t links = 0;  // each triangle edge seen from both endpoints
      for (NodeId p : nbrs) {
        const auto other = graph.neighbors(p);
        auto a = nbrs.begin();
        auto b = other.begin();
        while (a != nbrs.end() && b != other.end()) {
          if (*a < *b) {
            ++a;
          } else if (*b < *a) {
            ++b;
          } else {
            ++links;
            ++a;
            ++b;
          }
        }
      }
      const double triangles = static_cast<double>(links) / 2.0;
      out.values[i] = 2.0 * triangles / (static_cast<double>(d) * static_cast<double>(d - 1));
    }
  });
  return out;
}

RawHeuristicScores nrs_scores(const AttributedGraph& graph, const ProjectedFeatures& pf,
                              std::size_t threads) {
  check_projection(graph, pf);
  const Matrix aggregated = propagate(graph, pf.normalized, threads);
  RawHeuristicScores out;
  out.values.resize(graph.num_nodes());
  for (std::size_t i = 0; i < graph.num_nodes(); ++i) {
    out.values[i] = (pf.normalized.row(i) - aggregated.row(i)).norm();
  }
  out.valid_mask = degree_mask(graph, 1);
  return out;
}

RawHeuristicScores pcd_scores(const AttributedGraph& graph, const ProjectedFeatures& pf,
                              const PcdOptions& options, std::size_t threads) {
  options.validate();
  check_projection(graph, pf);
  RawHeuristicScores out;
  out.values.assign(graph.num_nodes(), 0.0);
  Matrix previous = pf.normalized;
  for (double weight : options.hop_weights) {
    Matrix current = propagate(graph, previous, threads);
    for (Eigen::Index i = 0; i < current.rows(); ++i) {
      out.values[static_cast<std::size_t>(i)] +=
          weight * (1.0 - cosine_or_zero(previous.row(i).transpose(), current.row(i).transpose()));
    }
    previous = std::move(current);
  }
  out.valid_mask = degree_mask(graph, 1);
  return out;
}

Matrix rescale_unit_interval(const Matrix& x) {
  Matrix out = x;
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double lo = x.col(j).minCoeff();
    const double hi = x.col(j).maxCoeff();
    if (hi - lo <= 0.0) {
      out.col(j).setZero();
    } else {
      out.col(j) = (x.col(j).array() - lo) / (hi - lo);
    }
  }
  return out;
}

AmenVectors amen_ego_vectors(const AttributedGraph& graph, const Matrix& rescaled, NodeId node) {
  const Eigen::Index dims = rescaled.cols();
  AmenVectors v;
  v.internal = Vector::Zero(dims);
  v.external = Vector::Zero(dims);
  const double two_m = 2.0 * static_cast<double>(graph.num_edges());

  const auto nbrs = graph.neighbors(node);
  std::vector<NodeId> members(nbrs.begin(), nbrs.end());
  members.insert(std::lower_bound(members.begin(), members.end(), node), node);
  const auto in_ego = [&members](NodeId x) {
    return std::binary_search(members.begin(), members.end(), x);
  };

  Vector weighted_sum = Vector::Zero(dims);
  for (NodeId p : members) {
    const auto xp = rescaled.row(p).transpose();
    const double kp = static_cast<double>(graph.degree(p));
    weighted_sum += kp * xp;
    for (NodeId b : graph.neighbors(p)) {
      const auto xb = rescaled.row(b).transpose();
      if (in_ego(b)) {
        // Ordered pair (p, b); the reverse is visited from b.
        v.internal += xp.cwiseProduct(xb);
      } else {
        const double null_term = std::min(1.0, kp * static_cast<double>(graph.degree(b)) / two_m);
        v.external -= (1.0 - null_term) * xp.cwiseProduct(xb);
      }
    }
  }
  if (two_m > 0.0) v.internal -= weighted_sum.cwiseProduct(weighted_sum) / two_m;

  const double scale_i = std::max(1.0, v.internal.cwiseAbs().maxCoeff());
  const double scale_e = std::max(1.0, v.external.cwiseAbs().maxCoeff());
  v.internal_hat = (v.internal / scale_i).cwiseMax(0.0).cwiseMin(1.0);
  v.external_hat = (v.external / scale_e).cwiseMax(-1.0).cwiseMin(0.0);

  const Vector combined = v.internal_hat + v.external_hat;
  const Vector positive = combined.cwiseMax(0.0);
  v.normality = (combined.array() > 0.0).any() ? positive.norm() : combined.maxCoeff();
  return v;
}

RawHeuristicScores amen_ego_scores(const AttributedGraph& graph, const ProjectedFeatures& pf,
                                   std::size_t threads) {
  check_projection(graph, pf);
  const Matrix rescaled = rescale_unit_interval(pf.normalized);
  RawHeuristicScores out;
  out.values.assign(graph.num_nodes(), 0.0);
  out.valid_mask = degree_mask(graph, 2);
  parallel_for(graph.num_nodes(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (!out.valid_mask[i]) continue;
      const AmenVectors v = amen_ego_vectors(graph, rescaled, static_cast<NodeId>(i));
      out.values[i] = 0.0 - v.normality;
    }
  });
  return out;
}

AnomalyScores calibrate_heuristic(const RawHeuristicScores& raw, const CalibrationConfig& config) {
  return calibrate(raw.values, raw.valid_mask, config);
}

}  // namespace ndiv
