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

#ifndef NDIV_PROJECTION_HPP_
#define NDIV_PROJECTION_HPP_

#include <cstdint>

#include "common.hpp"
#include "graph.hpp"

namespace ndiv {

inline constexpr int kDefaultRank = 8;

// Below this min(n, d) the projection uses an exact dense SVD; above it a
// randomized range finder.
inline constexpr Eigen::Index kExactSvdLimit = 64;
inline constexpr int kPowerIterations = 4;
inline constexpr int kOversampling = 10;

// Rows with norm below this are treated as zero vectors.
inline constexpr double kZeroRowThreshold = 1e-15;

struct ProjectedFeatures {
  Matrix projected;   // U_k * Sigma_k
  Matrix normalized;  // l1-normalized rows of `projected`
  Matrix directions;  // l2-unit rows of `normalized` (zero rows stay zero)
  int rank_used = 0;
  std::uint64_t seed = 0;
};

// Top-k left singular vectors scaled by their singular values, with
// k = min(rank, rows, cols). Columns are ordered by descending singular value
// and each is sign-flipped so its largest-magnitude entry is positive.
// Features are not centered.
Matrix truncated_svd(const Matrix& x, int rank, std::uint64_t seed);

Matrix l1_normalize_rows(const Matrix& p);
Matrix unit_directions(const Matrix& p);

// Builds the normalized and direction matrices from an existing projection.
ProjectedFeatures make_projected(Matrix projected, std::uint64_t seed = 0);

ProjectedFeatures project(const AttributedGraph& graph, int rank = kDefaultRank,
                          std::uint64_t seed = 0);

}  // namespace ndiv

#endif  // NDIV_PROJECTION_HPP_
