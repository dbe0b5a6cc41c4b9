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

#include "metrics.hpp"
#include "test_util.hpp"

using Labels = std::vector<std::uint8_t>;
using Scores = std::vector<double>;

TEST_CASE("AUC") {
  CHECK(ndiv::auc(Scores{0.9, 0.8, 0.1, 0.2}, Labels{1, 1, 0, 0}) == 1.0);
  CHECK(ndiv::auc(Scores{0.1, 0.2, 0.9, 0.8}, Labels{1, 1, 0, 0}) == 0.0);
  CHECK(ndiv::auc(Scores{0.5, 0.5, 0.5, 0.5}, Labels{1, 0, 1, 0}) == 0.5);
  CHECK_THROWS_AS(ndiv::auc(Scores{0.1, 0.2}, Labels{1, 1}), ndiv::Error);
  CHECK_THROWS_AS(ndiv::auc(Scores{0.1, 0.2}, Labels{0, 0}), ndiv::Error);
}

TEST_CASE("average precision") {
  CHECK(ndiv::average_precision(Scores{0.9, 0.8, 0.3, 0.1}, Labels{1, 1, 0, 0}) == 1.0);
  CHECK(ndiv::average_precision(Scores{0.1, 0.5, 0.6, 0.7, 0.8}, Labels{1, 0, 0, 0, 0}) ==
        doctest::Approx(0.2));
  // Ties fall back to ascending index: the positive at index 0 comes first.
  CHECK(ndiv::average_precision(Scores{0.5, 0.5}, Labels{1, 0}) == 1.0);
  CHECK(ndiv::average_precision(Scores{0.5, 0.5}, Labels{0, 1}) == 0.5);
}

TEST_CASE("precision at K") {
  Scores s(10);
  for (int i = 0; i < 10; ++i) s[i] = 10.0 - i;  // rank r+1 at index r
  Labels y(10, 0);
  y[0] = y[1] = y[4] = 1;
  CHECK(ndiv::precision_at_k(s, y, 5) == doctest::Approx(0.6));
  CHECK(ndiv::precision_at_k(s, y, 2) == 1.0);
  Labels none(10, 0);
  none[9] = 1;
  CHECK(ndiv::precision_at_k(s, none, 3) == 0.0);
}

TEST_CASE("KS statistic") {
  CHECK(ndiv::ks_statistic(Scores{1, 2, 3, 1, 2, 3}, Labels{1, 1, 1, 0, 0, 0}) == 0.0);
  CHECK(ndiv::ks_statistic(Scores{5, 6, 1, 2}, Labels{1, 1, 0, 0}) == 1.0);
}

TEST_CASE("PR curve") {
  const auto perfect = ndiv::pr_curve(Scores{0.9, 0.8, 0.2, 0.1}, Labels{1, 1, 0, 0});
  REQUIRE(perfect.size() == 4);
  CHECK(perfect[0].recall == 0.5);
  CHECK(perfect[0].precision == 1.0);
  CHECK(perfect[1].recall == 1.0);
  CHECK(perfect[1].precision == 1.0);
  const auto single = ndiv::pr_curve(Scores{0.9, 0.1, 0.2, 0.3}, Labels{1, 0, 0, 0});
  CHECK(single.front().recall == 1.0);
  CHECK(single.front().precision == 1.0);
}

TEST_CASE("metrics match brute-force definitions") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + trial % 30;
    std::uniform_int_distribution<int> level(0, trial % 3 == 0 ? 3 : 1000);
    Scores s(n);
    Labels y(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = level(rng) / 7.0;
      y[i] = static_cast<std::uint8_t>(rng() % 2);
    }
    y[0] = 1;
    y[1] = 0;
    CHECK(ndiv::auc(s, y) == oracle::auc(s, y));
    CHECK(ndiv::average_precision(s, y) == doctest::Approx(oracle::average_precision(s, y)).epsilon(1e-12));
    CHECK(ndiv::ks_statistic(s, y) == oracle::ks(s, y));
    for (std::size_t k = 1; k <= n; ++k) CHECK(ndiv::precision_at_k(s, y, k) == oracle::precision_at(s, y, k));

    // AP re-derived from the emitted PR points.
    const auto pts = ndiv::pr_curve(s, y);
    double ap = 0.0, last_recall = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i > 0) CHECK(pts[i].recall >= pts[i - 1].recall);
      ap += (pts[i].recall - last_recall) * pts[i].precision;
      last_recall = pts[i].recall;
    }
    CHECK(ap == doctest::Approx(ndiv::average_precision(s, y)).epsilon(1e-12));
  }
}

TEST_CASE("evaluate") {
  const Scores s = {0.9, std::numeric_limits<double>::quiet_NaN(), 0.1, 0.8, 0.3};
  const Labels y = {1, 1, 0, 1, 0};
  const std::vector<bool> mask = {true, false, true, true, true};
  const auto r = ndiv::evaluate(s, y, mask, {2, 100});
  CHECK(r.n_evaluated == 4);
  CHECK(r.n_positive == 2);
  CHECK(r.auc == 1.0);
  CHECK(r.precision_at_k.at(2) == 1.0);
  CHECK(r.precision_at_k.at(4) == 0.5);
  CHECK_THROWS_AS(ndiv::evaluate(s, Labels{1, 1}, mask), ndiv::Error);
}
