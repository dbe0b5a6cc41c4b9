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

#include "synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include <json.hpp>

#include "report.hpp"

namespace ndiv {
namespace {

using Rng = std::mt19937_64;

std::uint64_t injection_seed(std::uint64_t seed) {
  std::uint64_t z = seed + 0xA0761D6478BD642FULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Appends Bernoulli(p) successes over [first, last) using geometric skips.
void sample_segment(NodeId u, std::size_t first, std::size_t last, double p, Rng& rng,
                    std::vector<Edge>& edges) {
  if (p <= 0.0 || first >= last) return;
  if (p >= 1.0) {
    for (std::size_t v = first; v < last; ++v) edges.emplace_back(u, static_cast<NodeId>(v));
    return;
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double log_q = std::log1p(-p);
  std::size_t v = first;
  while (true) {
    const double r = unit(rng);
    const double skip = std::floor(std::log1p(-r) / log_q);
    if (skip >= static_cast<double>(last - v)) return;
    v += static_cast<std::size_t>(skip);
    edges.emplace_back(u, static_cast<NodeId>(v));
    ++v;
    if (v >= last) return;
  }
}

}  // namespace

const char* anomaly_type_name(AnomalyType type) {
  switch (type) {
    case AnomalyType::kTypeH: return "type_h";
    case AnomalyType::kTypeD: return "type_d";
    case AnomalyType::kMixed: return "mixed";
  }
  return "unknown";
}

void SyntheticSpec::validate() const {
  if (n < 2) throw Error(ErrorCode::kSpec, "n must be at least 2");
  if (communities < 1) throw Error(ErrorCode::kSpec, "communities must be >= 1");
  if (n % communities != 0) {
    throw Error(ErrorCode::kSpec, "n (" + std::to_string(n) + ") is not divisible by communities (" +
                                      std::to_string(communities) + ")");
  }
  if (!(target_homophily > 0.0 && target_homophily < 1.0)) {
    throw Error(ErrorCode::kSpec, "target homophily must lie in (0, 1)");
  }
  if (!(avg_degree > 0.0)) throw Error(ErrorCode::kSpec, "average degree must be positive");
  if (feature_dim < 1) throw Error(ErrorCode::kSpec, "feature_dim must be >= 1");
  if (center_variance < 0.0 || noise_variance < 0.0) {
    throw Error(ErrorCode::kSpec, "variances must be non-negative");
  }
  if (communities > 1 && n / communities < 2) {
    throw Error(ErrorCode::kSpec, "communities must contain at least two nodes");
  }
}

EdgeProbabilities sbm_probabilities(const SyntheticSpec& spec) {
  spec.validate();
  const double n = static_cast<double>(spec.n);
  const double block = n / static_cast<double>(spec.communities);
  EdgeProbabilities p;
  if (spec.communities == 1) {
    p.p_in = spec.avg_degree / (n - 1.0);
  } else {
    p.p_in = spec.avg_degree * spec.target_homophily / (block - 1.0);
    p.p_out = spec.avg_degree * (1.0 - spec.target_homophily) / (n - block);
  }
  constexpr double kSlack = 1e-9;
  if (p.p_in > 1.0 + kSlack || p.p_out > 1.0 + kSlack) {
    throw Error(ErrorCode::kSpec, "infeasible specification: edge probability exceeds 1 (p_in=" +
                                      std::to_string(p.p_in) + ", p_out=" +
                                      std::to_string(p.p_out) + ")");
  }
  p.p_in = std::min(p.p_in, 1.0);
  p.p_out = std::min(p.p_out, 1.0);
  return p;
}

SyntheticGraph generate_sbm(const SyntheticSpec& spec) {
  const EdgeProbabilities prob = sbm_probabilities(spec);
  const std::size_t n = spec.n;
  const std::size_t block = n / spec.communities;
  Rng rng(spec.seed);

  std::vector<int> communities(n);
  for (std::size_t i = 0; i < n; ++i) communities[i] = static_cast<int>(i / block);

  std::normal_distribution<double> center_dist(0.0, std::sqrt(spec.center_variance));
  std::normal_distribution<double> noise_dist(0.0, std::sqrt(spec.noise_variance));
  const auto dims = static_cast<Eigen::Index>(spec.feature_dim);
  Matrix centers(static_cast<Eigen::Index>(spec.communities), dims);
  for (Eigen::Index c = 0; c < centers.rows(); ++c) {
    for (Eigen::Index f = 0; f < dims; ++f) centers(c, f) = center_dist(rng);
  }
  Matrix features(static_cast<Eigen::Index>(n), dims);
  for (std::size_t i = 0; i < n; ++i) {
    for (Eigen::Index f = 0; f < dims; ++f) {
      features(static_cast<Eigen::Index>(i), f) = centers(communities[i], f) + noise_dist(rng);
    }
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(spec.avg_degree * static_cast<double>(n) / 2.0 * 1.1));
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t block_end = (u / block + 1) * block;
    const auto node = static_cast<NodeId>(u);
    sample_segment(node, u + 1, block_end, prob.p_in, rng, edges);
    sample_segment(node, block_end, n, prob.p_out, rng, edges);
  }

  SyntheticGraph out;
  out.graph = build_graph(edges, std::move(features));
  out.graph.set_communities(communities);
  out.communities = std::move(communities);
  out.measured_homophily = out.graph.num_edges() ? homophily_ratio(out.graph, out.communities) : 0.0;
  return out;
}

double homophily_ratio(const AttributedGraph& graph, const std::vector<int>& communities) {
  if (communities.size() != graph.num_nodes()) {
    throw Error(ErrorCode::kDimension, "community vector length does not match node count");
  }
  if (graph.num_edges() == 0) {
    throw Error(ErrorCode::kDegenerate, "homophily ratio is undefined for a graph without edges");
  }
  std::size_t same = 0;
  const auto edges = graph.edge_list();
  for (const auto& [u, v] : edges) same += communities[u] == communities[v] ? 1 : 0;
  return static_cast<double>(same) / static_cast<double>(edges.size());
}

SyntheticGraph inject_anomalies(SyntheticGraph sg, const SyntheticSpec& spec) {
  spec.validate();
  const std::size_t n = sg.graph.num_nodes();
  const std::size_t k = spec.communities;
  const std::size_t block = n / k;
  if (sg.communities.size() != n) {
    throw Error(ErrorCode::kDimension, "community vector length does not match node count");
  }

  std::vector<AnomalyType> plan;
  if (spec.anomaly_type == AnomalyType::kMixed) {
    plan.assign(spec.anomalies_per_type, AnomalyType::kTypeH);
    plan.insert(plan.end(), spec.anomalies_per_type, AnomalyType::kTypeD);
  } else {
    plan.assign(spec.anomalies_per_type, spec.anomaly_type);
  }

  std::vector<std::vector<NodeId>> adj(n);
  std::vector<NodeId> candidates;
  for (NodeId i = 0; i < n; ++i) {
    const auto nbrs = sg.graph.neighbors(i);
    adj[i].assign(nbrs.begin(), nbrs.end());
    if (nbrs.size() >= 2) candidates.push_back(i);
  }
  if (!plan.empty() && candidates.empty()) {
    throw Error(ErrorCode::kSpec, "no node with degree >= 2 is available for anomaly injection");
  }

  Rng rng(injection_seed(spec.seed));
  std::uniform_int_distribution<std::size_t> pick_candidate(0, candidates.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_community(0, k - 1);
  std::uniform_int_distribution<std::size_t> pick_member(0, block - 1);
  std::vector<bool> anomalous(n, false);
  std::vector<std::size_t> anomalies_in_community(k, 0);

  // Phase 1: pick every anomaly node, remembering its pre-injection degree.
  std::vector<std::size_t> target_degree;
  for (AnomalyType type : plan) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < n && !placed; ++attempt) {
      const NodeId v = candidates[pick_candidate(rng)];
      if (anomalous[v]) continue;
      const auto own = static_cast<std::size_t>(sg.communities[v]);
      // Type-H needs enough non-anomalous members of its own community.
      if (type == AnomalyType::kTypeH && adj[v].size() + anomalies_in_community[own] + 1 > block) {
        continue;
      }
      anomalous[v] = true;
      ++anomalies_in_community[own];
      sg.anomalies.push_back({v, type});
      target_degree.push_back(adj[v].size());
      placed = true;
    }
    if (!placed) {
      throw Error(ErrorCode::kSpec, std::string("could not place a ") + anomaly_type_name(type) +
                                        " anomaly after " + std::to_string(n) + " attempts");
    }
  }

  // Phase 2: drop every edge touching an anomaly, then give each anomaly its
  // original number of neighbors, drawn from non-anomalous nodes.
  for (NodeId u = 0; u < n; ++u) {
    if (anomalous[u]) {
      adj[u].clear();
      continue;
    }
    std::erase_if(adj[u], [&](NodeId v) { return anomalous[v]; });
  }
  for (std::size_t a = 0; a < sg.anomalies.size(); ++a) {
    const auto [node, type] = sg.anomalies[a];
    const std::size_t degree = target_degree[a];
    const auto own = static_cast<std::size_t>(sg.communities[node]);
    const std::size_t eligible = type == AnomalyType::kTypeH
                                     ? block - anomalies_in_community[own]
                                     : n - sg.anomalies.size();
    if (eligible < degree) {
      throw Error(ErrorCode::kSpec, "not enough non-anomalous nodes to rewire node " +
                                        std::to_string(node));
    }
    std::vector<NodeId> fresh;
    while (fresh.size() < degree) {
      const std::size_t community = type == AnomalyType::kTypeH ? own : pick_community(rng);
      const auto v = static_cast<NodeId>(community * block + pick_member(rng));
      if (anomalous[v]) continue;
      if (std::find(fresh.begin(), fresh.end(), v) != fresh.end()) continue;
      fresh.push_back(v);
    }
    for (NodeId v : fresh) adj[v].push_back(node);
    adj[node] = std::move(fresh);
  }

  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : adj[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  std::vector<std::uint8_t> labels(n, 0);
  for (const auto& a : sg.anomalies) labels[a.node] = 1;
  Matrix features = sg.graph.features();
  sg.graph = build_graph(edges, std::move(features), std::move(labels));
  sg.graph.set_communities(sg.communities);
  return sg;
}

SyntheticGraph generate_benchmark(const SyntheticSpec& spec) {
  return inject_anomalies(generate_sbm(spec), spec);
}

void write_synthetic(const SyntheticGraph& graph, const SyntheticSpec& spec,
                     const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create '" + out_dir.string() + "'");

  write_edge_list(graph.graph, out_dir / "edges.txt");
  write_features(graph.graph.features(), out_dir / "features.csv");
  if (graph.graph.labels()) write_labels(*graph.graph.labels(), out_dir / "labels.txt");
  {
    std::ofstream out(out_dir / "communities.txt", std::ios::binary);
    if (!out) throw Error(ErrorCode::kIo, "cannot write communities file");
    for (int c : graph.communities) out << c << '\n';
  }

  const EdgeProbabilities prob = sbm_probabilities(spec);
  nlohmann::ordered_json meta;
  meta["spec"] = {
      {"n", spec.n},
      {"communities", spec.communities},
      {"target_homophily", report_number(spec.target_homophily)},
      {"avg_degree", report_number(spec.avg_degree)},
      {"feature_dim", spec.feature_dim},
      {"center_variance", report_number(spec.center_variance)},
      {"noise_variance", report_number(spec.noise_variance)},
      {"anomaly_type", anomaly_type_name(spec.anomaly_type)},
      {"anomalies_per_type", spec.anomalies_per_type},
  };
  meta["seed"] = spec.seed;
  meta["p_in"] = report_number(prob.p_in);
  meta["p_out"] = report_number(prob.p_out);
  meta["num_nodes"] = graph.graph.num_nodes();
  meta["num_edges"] = graph.graph.num_edges();
  meta["measured_homophily"] = report_number(graph.measured_homophily);
  nlohmann::ordered_json anomalies = nlohmann::ordered_json::array();
  for (const auto& a : graph.anomalies) {
    anomalies.push_back({{"node", a.node}, {"type", anomaly_type_name(a.type)}});
  }
  meta["anomalies"] = std::move(anomalies);

  std::ofstream out(out_dir / "meta.json", std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write meta.json");
  out << meta.dump(2) << '\n';
}

}  // namespace ndiv
