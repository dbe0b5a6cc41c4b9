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


#include <doctest.h>

#include <json.hpp>
#include <set>

#include "synthgen.hpp"
#include "test_util.hpp"

using ndiv::AnomalyType;
using ndiv::SyntheticSpec;

namespace {

SyntheticSpec spec_with(double h, AnomalyType type, std::uint64_t seed) {
  SyntheticSpec s;
  s.target_homophily = h;
  s.anomaly_type = type;
  s.seed = seed;
  return s;
}

}  // namespace

TEST_CASE("edge probabilities") {
  const auto p = ndiv::sbm_probabilities(SyntheticSpec{});
  CHECK(p.p_in == doctest::Approx(7.5 / 399.0).epsilon(1e-14));
  CHECK(p.p_out == doctest::Approx(7.5 / 1600.0).epsilon(1e-14));

  SyntheticSpec high;
  high.target_homophily = 0.99;
  CHECK(ndiv::sbm_probabilities(high).p_in == doctest::Approx(15 * 0.99 / 399.0));
  CHECK(ndiv::sbm_probabilities(high).p_in == doctest::Approx(0.0372).epsilon(1e-3));

  high.target_homophily = 1.0 - 1e-12;
  CHECK(ndiv::sbm_probabilities(high).p_out < 1e-12);
  high.target_homophily = 1e-12;
  CHECK(ndiv::sbm_probabilities(high).p_in < 1e-12);

  SyntheticSpec dense;
  dense.n = 20;
  dense.avg_degree = 10;
  dense.target_homophily = 0.9;
  CHECK_THROWS_AS(ndiv::sbm_probabilities(dense), ndiv::Error);
}

TEST_CASE("spec validation") {
  SyntheticSpec s;
  s.n = 2001;
  CHECK_THROWS_AS(s.validate(), ndiv::Error);
  s = {};
  s.target_homophily = 1.0;
  CHECK_THROWS_AS(s.validate(), ndiv::Error);
  s = {};
  s.target_homophily = 0.0;
  CHECK_THROWS_AS(s.validate(), ndiv::Error);
}

TEST_CASE("homophily ratio") {
  const ndiv::Matrix x = ndiv::Matrix::Zero(5, 1);
  const std::vector<ndiv::Edge> triangle = {{0, 1}, {1, 2}, {0, 2}};
  CHECK(ndiv::homophily_ratio(ndiv::build_graph(triangle, x), {0, 0, 0, 1, 1}) == 1.0);
  const std::vector<ndiv::Edge> cross = {{0, 3}};
  CHECK(ndiv::homophily_ratio(ndiv::build_graph(cross, x), {0, 0, 0, 1, 1}) == 0.0);
  const std::vector<ndiv::Edge> mixed = {{0, 1}, {1, 2}, {3, 4}, {2, 3}};
  CHECK(ndiv::homophily_ratio(ndiv::build_graph(mixed, x), {0, 0, 0, 1, 1}) == 0.75);
  CHECK_THROWS_AS(ndiv::homophily_ratio(ndiv::build_graph(std::vector<ndiv::Edge>{}, x), {0, 0, 0, 1, 1}),
                  ndiv::Error);
}

TEST_CASE("generated graphs hit the calibration targets") {
  for (double h : {0.5, 0.9}) {
    double degree_sum = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto sg = ndiv::generate_sbm(spec_with(h, AnomalyType::kMixed, seed));
      CHECK(sg.graph.num_nodes() == 2000);
      CHECK(std::fabs(sg.measured_homophily - h) <= 0.03);
      degree_sum += 2.0 * static_cast<double>(sg.graph.num_edges()) / 2000.0;
    }
    CHECK(std::fabs(degree_sum / 10.0 - 15.0) <= 0.5);
  }
}

TEST_CASE("single community") {
  SyntheticSpec s;
  s.n = 200;
  s.communities = 1;
  s.avg_degree = 6;
  const auto sg = ndiv::generate_sbm(s);
  CHECK(sg.measured_homophily == 1.0);
}

TEST_CASE("generation is deterministic") {
  const auto s = spec_with(0.3, AnomalyType::kMixed, 77);
  const auto a = ndiv::generate_benchmark(s);
  const auto b = ndiv::generate_benchmark(s);
  CHECK(a.graph.edge_list() == b.graph.edge_list());
  CHECK(a.graph.features() == b.graph.features());
  CHECK(*a.graph.labels() == *b.graph.labels());
  const auto c = ndiv::generate_benchmark(spec_with(0.3, AnomalyType::kMixed, 78));
  CHECK(c.graph.edge_list() != a.graph.edge_list());
}

TEST_CASE("anomaly injection invariants") {
  for (auto type : {AnomalyType::kTypeH, AnomalyType::kTypeD, AnomalyType::kMixed}) {
    const auto s = spec_with(0.5, type, 3);
    const auto before = ndiv::generate_sbm(s);
    const auto after = ndiv::inject_anomalies(before, s);
    const auto& g = after.graph;
    const auto& labels = *g.labels();

    const std::size_t expected = type == AnomalyType::kMixed ? 100 : 50;
    CHECK(after.anomalies.size() == expected);
    CHECK(std::count(labels.begin(), labels.end(), 1) == static_cast<long>(expected));

    for (const auto& a : after.anomalies) {
      CHECK(labels[a.node] == 1);
      CHECK(g.degree(a.node) == before.graph.degree(a.node));
      CHECK(g.degree(a.node) >= 2);
      const auto nb = g.neighbors(a.node);
      std::set<int> comms;
      for (auto j : nb) comms.insert(after.communities[j]);
      if (a.type == AnomalyType::kTypeH) {
        CHECK(comms.size() == 1);
        CHECK(*comms.begin() == after.communities[a.node]);
      }
    }
    for (ndiv::NodeId i = 0; i < g.num_nodes(); ++i) {
      const auto nb = g.neighbors(i);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        CHECK(nb[k] != i);
        if (k > 0) CHECK(nb[k - 1] < nb[k]);
        CHECK(g.has_edge(nb[k], i));
      }
    }
  }
}

TEST_CASE("type-D neighborhoods span several communities") {
  // P(at most 2 of 5 communities among >= 10 uniform draws) is about 0.001.
  int wide = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto sg = ndiv::generate_benchmark(spec_with(0.5, AnomalyType::kTypeD, seed));
    for (const auto& a : sg.anomalies) {
      if (sg.graph.degree(a.node) < 10) continue;
      std::set<int> comms;
      for (auto j : sg.graph.neighbors(a.node)) comms.insert(sg.communities[j]);
      ++total;
      wide += comms.size() >= 3;
    }
  }
  REQUIRE(total > 100);
  CHECK(static_cast<double>(wide) / total > 0.99);
}

TEST_CASE("mixed benchmark has a 5% anomaly rate") {
  const auto sg = ndiv::generate_benchmark(spec_with(0.5, AnomalyType::kMixed, 0));
  const auto& y = *sg.graph.labels();
  CHECK(std::count(y.begin(), y.end(), 1) == 100);
  CHECK(y.size() == 2000);
}

TEST_CASE("writing a benchmark") {
  testutil::TempDir dir;
  auto s = spec_with(0.7, AnomalyType::kTypeH, 4);
  s.n = 300;
  s.anomalies_per_type = 5;
  s.avg_degree = 8;
  const auto sg = ndiv::generate_benchmark(s);
  ndiv::write_synthetic(sg, s, dir.path());
  for (const char* f : {"edges.txt", "features.csv", "labels.txt", "communities.txt", "meta.json"}) {
    CHECK(std::filesystem::exists(dir / f));
  }
  const auto meta = nlohmann::json::parse(testutil::read_file(dir / "meta.json"));
  CHECK(meta["seed"] == 4);
  CHECK(meta["spec"]["n"] == 300);
  CHECK(meta["anomalies"].size() == 5);
  const auto back = ndiv::load_graph(dir / "edges.txt", dir / "features.csv",
                                     std::filesystem::path(dir / "labels.txt"));
  CHECK(back.graph.edge_list() == sg.graph.edge_list());
  CHECK(*back.graph.labels() == *sg.graph.labels());
}
