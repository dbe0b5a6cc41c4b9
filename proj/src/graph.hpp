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

#ifndef NDIV_GRAPH_HPP_
#define NDIV_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "common.hpp"

namespace ndiv {

using Edge = std::pair<NodeId, NodeId>;

// Result of parsing an edge-list file. `edges` are expressed in dense ids;
// `original_ids[dense]` recovers the id used in the file. Dense ids follow the
// ascending order of the original ids, so a file whose ids already span
// 0..n-1 maps onto itself.
struct EdgeList {
  std::vector<Edge> edges;  // u < v, sorted, unique
  std::vector<std::int64_t> original_ids;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;

  std::size_t node_count() const { return original_ids.size(); }
  bool is_identity_mapping() const;
  // Same edges expressed with the file's own ids.
  std::vector<Edge> edges_with_original_ids() const;
};

EdgeList load_edge_list(const std::filesystem::path& path);
Matrix load_features(const std::filesystem::path& path, std::size_t expected_rows);
std::vector<std::uint8_t> load_labels(const std::filesystem::path& path,
                                      std::size_t expected_rows);

// Undirected, unweighted graph in CSR form with dense node features.
// Immutable after construction.
class AttributedGraph {
 public:
  AttributedGraph() = default;

  std::size_t num_nodes() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return neighbors_.size() / 2; }
  std::size_t feature_dim() const { return static_cast<std::size_t>(features_.cols()); }

  std::span<const NodeId> neighbors(NodeId node) const {
    return {neighbors_.data() + offsets_[node], offsets_[node + 1] - offsets_[node]};
  }
  std::size_t degree(NodeId node) const { return offsets_[node + 1] - offsets_[node]; }
  bool has_edge(NodeId u, NodeId v) const;

  const Matrix& features() const { return features_; }
  const std::optional<std::vector<std::uint8_t>>& labels() const { return labels_; }
  const std::optional<std::vector<int>>& communities() const { return communities_; }

  std::span<const std::size_t> offsets() const { return offsets_; }
  std::span<const NodeId> adjacency() const { return neighbors_; }

  // Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<Edge> edge_list() const;

  void set_communities(std::vector<int> communities);

 private:
  friend AttributedGraph build_graph(std::span<const Edge>, Matrix,
                                     std::optional<std::vector<std::uint8_t>>);

  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
  Matrix features_;
  std::optional<std::vector<std::uint8_t>> labels_;
  std::optional<std::vector<int>> communities_;
};

// Builds a symmetric CSR adjacency. Edges may be given in either direction
// and may repeat; self-loops are ignored. Node count is the feature row count.
AttributedGraph build_graph(std::span<const Edge> edges, Matrix features,
                            std::optional<std::vector<std::uint8_t>> labels = std::nullopt);

struct NodeDegreeProfile {
  std::vector<std::size_t> degrees;
  std::vector<bool> valid_mask;  // degree >= 2
  std::size_t isolated_count = 0;
  std::size_t degree_one_count = 0;

  std::size_t valid_count() const { return degrees.size() - isolated_count - degree_one_count; }
};

NodeDegreeProfile degree_profile(const AttributedGraph& graph);

// Loads edges/features/labels and resolves node ids. When every edge id is
// below the feature row count the file ids are used as-is (isolated nodes are
// kept); otherwise the dense remapping must match the feature row count.
struct LoadedGraph {
  AttributedGraph graph;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
  bool remapped = false;
  std::vector<std::int64_t> node_ids;  // file id of each node; empty when ids are used as-is
};

LoadedGraph load_graph(const std::filesystem::path& edges_path,
                       const std::filesystem::path& features_path,
                       const std::optional<std::filesystem::path>& labels_path);

void write_edge_list(const AttributedGraph& graph, const std::filesystem::path& path);
void write_features(const Matrix& features, const std::filesystem::path& path);
void write_labels(std::span<const std::uint8_t> labels, const std::filesystem::path& path);

}  // namespace ndiv

#endif  // NDIV_GRAPH_HPP_
