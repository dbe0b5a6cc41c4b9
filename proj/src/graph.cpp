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

#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string_view>

namespace ndiv {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kDimension: return "dimension error";
    case ErrorCode::kValidation: return "validation error";
    case ErrorCode::kIndex: return "index error";
    case ErrorCode::kIo: return "I/O error";
    case ErrorCode::kDegenerate: return "degenerate input";
    case ErrorCode::kUndefinedMetric: return "undefined metric";
    case ErrorCode::kSpec: return "invalid specification";
    case ErrorCode::kPrecondition: return "precondition violated";
  }
  return "unknown error";
}

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool is_comment_or_blank(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#' || line.front() == '%';
}

std::string where(const std::filesystem::path& path, std::size_t line_no) {
  return path.string() + ":" + std::to_string(line_no);
}

}  // namespace

bool EdgeList::is_identity_mapping() const {
  for (std::size_t i = 0; i < original_ids.size(); ++i) {
    if (original_ids[i] != static_cast<std::int64_t>(i)) return false;
  }
  return true;
}

std::vector<Edge> EdgeList::edges_with_original_ids() const {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    out.emplace_back(static_cast<NodeId>(original_ids[u]), static_cast<NodeId>(original_ids[v]));
  }
  return out;
}

EdgeList load_edge_list(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  EdgeList result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    std::istringstream fields{std::string(trim(line))};
    std::string a, b, extra;
    fields >> a >> b;
    std::int64_t u = -1, v = -1;
    const auto parse_id = [](const std::string& token, std::int64_t& out) {
      const auto* end = token.data() + token.size();
      auto [ptr, ec] = std::from_chars(token.data(), end, out);
      return ec == std::errc() && ptr == end && out >= 0;
    };
    // Trailing columns (weights, timestamps) are ignored.
    if (b.empty() || !parse_id(a, u) || !parse_id(b, v)) {
      throw Error(ErrorCode::kParse,
                  where(path, line_no) + ": expected two non-negative integer node ids");
    }
    if (u > std::numeric_limits<NodeId>::max() - 1 || v > std::numeric_limits<NodeId>::max() - 1) {
      throw Error(ErrorCode::kParse, where(path, line_no) + ": node id out of range");
    }
    if (u == v) {
      ++result.self_loops_dropped;
      continue;
    }
    raw.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (line_no == 0 || (raw.empty() && result.self_loops_dropped == 0)) {
    throw Error(ErrorCode::kParse, "'" + path.string() + "' contains no edges");
  }

  std::vector<std::int64_t> ids;
  ids.reserve(raw.size() * 2);
  for (const auto& [u, v] : raw) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const auto dense = [&ids](std::int64_t id) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };

  const std::size_t before = raw.size();
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  result.duplicates_dropped = before - raw.size();
  result.edges.reserve(raw.size());
  for (const auto& [u, v] : raw) result.edges.emplace_back(dense(u), dense(v));
  result.original_ids = std::move(ids);
  return result;
}

Matrix load_features(const std::filesystem::path& path, std::size_t expected_rows) {
  auto in = open_input(path);
  std::vector<double> values;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    const std::string_view row = trim(line);
    const char sep = row.find('\t') != std::string_view::npos ? '\t' : ',';
    std::size_t col = 0;
    std::size_t start = 0;
    while (true) {
      const auto stop = row.find(sep, start);
      const auto cell = trim(row.substr(start, stop == std::string_view::npos ? row.npos : stop - start));
      double value = 0.0;
      const auto* end = cell.data() + cell.size();
      auto [ptr, ec] = std::from_chars(cell.data(), end, value);
      if (cell.empty() || ec != std::errc() || ptr != end) {
        throw Error(ErrorCode::kParse, where(path, line_no) + ", column " + std::to_string(col + 1) +
                                           ": non-numeric value '" + std::string(cell) + "'");
      }
      if (!std::isfinite(value)) {
        throw Error(ErrorCode::kValidation, where(path, line_no) + ", column " +
                                                std::to_string(col + 1) + ": non-finite value");
      }
      values.push_back(value);
      ++col;
      if (stop == std::string_view::npos) break;
      start = stop + 1;
    }
    if (rows == 0) {
      cols = col;
    } else if (col != cols) {
      throw Error(ErrorCode::kDimension, where(path, line_no) + ": expected " +
                                             std::to_string(cols) + " columns, found " +
                                             std::to_string(col));
    }
    ++rows;
  }
  if (rows != expected_rows) {
    throw Error(ErrorCode::kDimension, "'" + path.string() + "' has " + std::to_string(rows) +
                                           " rows, expected " + std::to_string(expected_rows));
  }
  Matrix features(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  std::copy(values.begin(), values.end(), features.data());
  return features;
}

std::vector<std::uint8_t> load_labels(const std::filesystem::path& path, std::size_t expected_rows) {
  auto in = open_input(path);
  std::vector<std::uint8_t> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    const auto cell = trim(line);
    long value = 0;
    const auto* end = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(cell.data(), end, value);
    if (ec != std::errc() || ptr != end) {
      throw Error(ErrorCode::kParse, where(path, line_no) + ": expected an integer label");
    }
    if (value != 0 && value != 1) {
      throw Error(ErrorCode::kValidation,
                  where(path, line_no) + ": label " + std::to_string(value) + " is not 0 or 1");
    }
    labels.push_back(static_cast<std::uint8_t>(value));
  }
  if (labels.size() != expected_rows) {
    throw Error(ErrorCode::kDimension, "'" + path.string() + "' has " +
                                           std::to_string(labels.size()) + " labels, expected " +
                                           std::to_string(expected_rows));
  }
  return labels;
}

bool AttributedGraph::has_edge(NodeId u, NodeId v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> AttributedGraph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void AttributedGraph::set_communities(std::vector<int> communities) {
  if (communities.size() != num_nodes()) {
    throw Error(ErrorCode::kDimension, "community vector length does not match node count");
  }
  communities_ = std::move(communities);
}

AttributedGraph build_graph(std::span<const Edge> edges, Matrix features,
                            std::optional<std::vector<std::uint8_t>> labels) {
  const std::size_t n = static_cast<std::size_t>(features.rows());
  if (!features.allFinite()) {
    throw Error(ErrorCode::kValidation, "feature matrix contains non-finite values");
  }
  if (labels) {
    if (labels->size() != n) {
      throw Error(ErrorCode::kDimension, "label vector length does not match node count");
    }
    for (auto y : *labels) {
      if (y > 1) throw Error(ErrorCode::kValidation, "labels must be 0 or 1");
    }
  }

  std::vector<std::size_t> counts(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kIndex, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                         ") references a node >= " + std::to_string(n));
    }
    if (u == v) continue;
    ++counts[u + 1];
    ++counts[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) counts[i + 1] += counts[i];

  std::vector<NodeId> scratch(counts.back());
  std::vector<std::size_t> cursor(counts.begin(), counts.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    scratch[cursor[u]++] = v;
    scratch[cursor[v]++] = u;
  }

  AttributedGraph g;
  g.offsets_.assign(n + 1, 0);
  g.neighbors_.reserve(scratch.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto first = scratch.begin() + static_cast<std::ptrdiff_t>(counts[i]);
    auto last = scratch.begin() + static_cast<std::ptrdiff_t>(counts[i + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    g.neighbors_.insert(g.neighbors_.end(), first, last);
    g.offsets_[i + 1] = g.neighbors_.size();
  }
  g.neighbors_.shrink_to_fit();
  g.features_ = std::move(features);
  g.labels_ = std::move(labels);
  return g;
}

NodeDegreeProfile degree_profile(const AttributedGraph& graph) {
  NodeDegreeProfile profile;
  const std::size_t n = graph.num_nodes();
  profile.degrees.resize(n);
  profile.valid_mask.resize(n);
  for (NodeId i = 0; i < n; ++i) {
    const std::size_t d = graph.degree(i);
    profile.degrees[i] = d;
    profile.valid_mask[i] = d >= 2;
    if (d == 0) ++profile.isolated_count;
    if (d == 1) ++profile.degree_one_count;
  }
  return profile;
}

LoadedGraph load_graph(const std::filesystem::path& edges_path,
                       const std::filesystem::path& features_path,
                       const std::optional<std::filesystem::path>& labels_path) {
  if (!std::filesystem::exists(features_path)) {
    throw Error(ErrorCode::kIo, "features file '" + features_path.string() + "' does not exist");
  }
  EdgeList edge_list = load_edge_list(edges_path);

  // Row count is not known up front; count data rows first.
  std::size_t rows = 0;
  {
    auto in = open_input(features_path);
    std::string line;
    while (std::getline(in, line)) {
      if (!is_comment_or_blank(line)) ++rows;
    }
  }

  LoadedGraph loaded;
  loaded.self_loops_dropped = edge_list.self_loops_dropped;
  loaded.duplicates_dropped = edge_list.duplicates_dropped;

  std::vector<Edge> edges;
  const std::int64_t max_id = edge_list.original_ids.empty() ? -1 : edge_list.original_ids.back();
  if (max_id < static_cast<std::int64_t>(rows)) {
    edges = edge_list.edges_with_original_ids();
  } else if (edge_list.node_count() == rows) {
    edges = edge_list.edges;
    loaded.remapped = true;
    loaded.node_ids = edge_list.original_ids;
  } else {
    throw Error(ErrorCode::kIndex, "edge list references node id " + std::to_string(max_id) +
                                       " but the feature file has only " + std::to_string(rows) +
                                       " rows");
  }

  Matrix features = load_features(features_path, rows);
  std::optional<std::vector<std::uint8_t>> labels;
  if (labels_path) labels = load_labels(*labels_path, rows);
  loaded.graph = build_graph(edges, std::move(features), std::move(labels));
  return loaded;
}

namespace {

void append_double(std::string& out, double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, ptr);
}

}  // namespace

void write_edge_list(const AttributedGraph& graph, const std::filesystem::path& path) {
  auto out = open_output(path);
  for (const auto& [u, v] : graph.edge_list()) out << u << ' ' << v << '\n';
}

void write_features(const Matrix& features, const std::filesystem::path& path) {
  auto out = open_output(path);
  std::string row;
  for (Eigen::Index i = 0; i < features.rows(); ++i) {
    row.clear();
    for (Eigen::Index j = 0; j < features.cols(); ++j) {
      if (j) row.push_back(',');
      append_double(row, features(i, j));
    }
    row.push_back('\n');
    out << row;
  }
}

void write_labels(std::span<const std::uint8_t> labels, const std::filesystem::path& path) {
  auto out = open_output(path);
  for (auto y : labels) out << static_cast<int>(y) << '\n';
}

}  // namespace ndiv
