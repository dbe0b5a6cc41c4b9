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


// Acceptance suite. Prints one PASS/FAIL line per criterion; `--criterion N`
// runs a single one. Exit status is nonzero when any selected criterion fails.

#include <sys/wait.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "diversity.hpp"
#include "metrics.hpp"
#include "pipeline.hpp"
#include "synthgen.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v, int precision = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::string fmt_sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double pop_std(const std::vector<double>& v) {
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size()));
}

double run_auc(const ndiv::SyntheticGraph& sg, const ndiv::ScoreConfig& cfg) {
  const auto r = ndiv::run_scorer(sg.graph, cfg);
  return ndiv::evaluate(r.scores.scores, *sg.graph.labels(), r.scores.evaluated_mask).auc;
}

// ---- homophily sweep shared by criteria 1-4 and 10 ----

const std::vector<double> kHomophily = {0.1, 0.3, 0.5, 0.7, 0.9};
constexpr int kSweepSeeds = 3;

struct SweepKey {
  ndiv::AnomalyType type;
  ndiv::Method method;
  double h;
  auto operator<=>(const SweepKey&) const = default;
};

struct Sweep {
  std::map<SweepKey, double> mean_auc;
  std::size_t normalization_checks = 0;
  double worst_mean = 0.0;
  double worst_std = 0.0;
  double type_h_seconds = 0.0;
};

// Valid-node scores of a non-degenerate calibration have mean 0 and
// population std 1.
void check_normalization(const ndiv::AnomalyScores& s, Sweep& sweep) {
  if (s.sigma_delta < ndiv::kDegenerateSigma) return;
  std::vector<double> v;
  for (std::size_t i = 0; i < s.scores.size(); ++i) {
    if (s.valid_mask[i]) v.push_back(s.scores[i]);
  }
  sweep.worst_mean = std::max(sweep.worst_mean, std::fabs(mean_of(v)));
  sweep.worst_std = std::max(sweep.worst_std, std::fabs(pop_std(v) - 1.0));
  ++sweep.normalization_checks;
}

const Sweep& sweep() {
  static const Sweep result = [] {
    Sweep s;
    const std::vector<std::pair<ndiv::AnomalyType, std::vector<ndiv::Method>>> plan = {
        {ndiv::AnomalyType::kTypeH, {ndiv::Method::kNeighborDiv}},
        {ndiv::AnomalyType::kTypeD, {ndiv::Method::kNeighborDiv}},
        {ndiv::AnomalyType::kMixed,
         {ndiv::Method::kNeighborDiv, ndiv::Method::kNrs, ndiv::Method::kAmenEgo}},
    };
    for (const auto& [type, methods] : plan) {
      const auto start = std::chrono::steady_clock::now();
      for (double h : kHomophily) {
        std::map<ndiv::Method, double> total;
        for (int seed = 0; seed < kSweepSeeds; ++seed) {
          ndiv::SyntheticSpec spec;
          spec.target_homophily = h;
          spec.anomaly_type = type;
          spec.seed = static_cast<std::uint64_t>(seed);
          const auto sg = ndiv::generate_benchmark(spec);
          for (auto method : methods) {
            ndiv::ScoreConfig cfg;
            cfg.method = method;
            const auto r = ndiv::run_scorer(sg.graph, cfg);
            check_normalization(r.scores, s);
            total[method] +=
                ndiv::evaluate(r.scores.scores, *sg.graph.labels(), r.scores.evaluated_mask).auc;
          }
        }
        for (const auto& [method, sum] : total) s.mean_auc[{type, method, h}] = sum / kSweepSeeds;
      }
      if (type == ndiv::AnomalyType::kTypeH) {
        s.type_h_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      }
    }
    return s;
  }();
  return result;
}

double cell(ndiv::AnomalyType type, ndiv::Method method, double h) {
  return sweep().mean_auc.at({type, method, h});
}

std::string row(ndiv::AnomalyType type, ndiv::Method method) {
  std::string out;
  for (double h : kHomophily) out += (out.empty() ? "" : " ") + fmt(cell(type, method, h), 3);
  return out;
}

Outcome criterion1() {
  const std::vector<double> floor = {0.948, 0.945, 0.928, 0.883, 0.749};
  bool ok = true;
  for (std::size_t i = 0; i < kHomophily.size(); ++i) {
    ok = ok && cell(ndiv::AnomalyType::kTypeH, ndiv::Method::kNeighborDiv, kHomophily[i]) >= floor[i];
  }
  const double seconds = sweep().type_h_seconds;
  ok = ok && seconds < 120.0;
  return {ok, "type_h AUC " + row(ndiv::AnomalyType::kTypeH, ndiv::Method::kNeighborDiv) +
                  " (floors 0.948 0.945 0.928 0.883 0.749); " + fmt(seconds, 1) + " s"};
}

Outcome criterion2() {
  bool ok = true;
  for (double h : kHomophily) {
    const double a = cell(ndiv::AnomalyType::kTypeD, ndiv::Method::kNeighborDiv, h);
    ok = ok && (h <= 0.7 ? a >= 0.72 : a < 0.55);
  }
  return {ok, "type_d AUC " + row(ndiv::AnomalyType::kTypeD, ndiv::Method::kNeighborDiv) +
                  " (need >= 0.72 for h <= 0.7, < 0.55 at 0.9)"};
}

Outcome criterion3() {
  bool ok = true;
  for (double h : kHomophily) {
    if (h <= 0.7) ok = ok && cell(ndiv::AnomalyType::kMixed, ndiv::Method::kNeighborDiv, h) >= 0.80;
  }
  return {ok, "mixed AUC " + row(ndiv::AnomalyType::kMixed, ndiv::Method::kNeighborDiv) +
                  " (need >= 0.80 for h <= 0.7)"};
}

Outcome criterion4() {
  bool ok = true;
  for (double h : kHomophily) {
    if (h > 0.7) continue;
    const double nd = cell(ndiv::AnomalyType::kMixed, ndiv::Method::kNeighborDiv, h);
    ok = ok && nd > cell(ndiv::AnomalyType::kMixed, ndiv::Method::kNrs, h) &&
         nd > cell(ndiv::AnomalyType::kMixed, ndiv::Method::kAmenEgo, h);
  }
  return {ok, "mixed AUC neighbordiv " + row(ndiv::AnomalyType::kMixed, ndiv::Method::kNeighborDiv) +
                  " | nrs " + row(ndiv::AnomalyType::kMixed, ndiv::Method::kNrs) + " | amen " +
                  row(ndiv::AnomalyType::kMixed, ndiv::Method::kAmenEgo)};
}

// ---- dense graph for criteria 5 and 6 ----

const ndiv::SyntheticGraph& dense_graph() {
  static const ndiv::SyntheticGraph g = [] {
    ndiv::SyntheticSpec spec;
    spec.n = 5000;
    spec.avg_degree = 200;
    spec.target_homophily = 0.5;
    spec.anomaly_type = ndiv::AnomalyType::kMixed;
    return ndiv::generate_benchmark(spec);
  }();
  return g;
}

Outcome criterion5() {
  const auto& sg = dense_graph();
  ndiv::ScoreConfig cfg;
  const double full = run_auc(sg, cfg);
  std::vector<double> sampled;
  std::vector<double> gaps;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    cfg.sampling_budget = 100;
    cfg.seed = seed;
    sampled.push_back(run_auc(sg, cfg));
    gaps.push_back(std::fabs(sampled.back() - full));
  }
  const double gap = mean_of(gaps);
  const double spread = pop_std(sampled);
  return {gap <= 0.015 && spread <= 0.005,
          "AUC full " + fmt(full) + ", k=100 mean " + fmt(mean_of(sampled)) + "; mean |gap| " +
              fmt(gap) + " (<= 0.015), std " + fmt(spread) + " (<= 0.005)"};
}

double best_time(const ndiv::SyntheticGraph& sg, const ndiv::ScoreConfig& cfg) {
  double best = 1e300;
  for (int rep = 0; rep < 3; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = ndiv::run_scorer(sg.graph, cfg);
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

Outcome criterion6() {
  const auto& sg = dense_graph();
  ndiv::ScoreConfig cfg;
  const double full = best_time(sg, cfg);
  cfg.sampling_budget = 100;
  const double sampled = best_time(sg, cfg);
  return {sampled <= full / 5.0, "full " + fmt(full, 3) + " s, k=100 " + fmt(sampled, 3) +
                                     " s, speedup " + fmt(full / sampled, 1) + "x (>= 5x)"};
}

// ---- property suites ----

Outcome criterion7() {
  std::mt19937_64 rng(7);
  const auto g = testutil::random_graph(500, 0.03, 40, rng);
  const auto pf = ndiv::project(g, ndiv::kDefaultRank, 0);
  const ndiv::DiversityConfig diversity;
  const ndiv::CalibrationConfig calibration;
  const auto base = ndiv::score_projected(g, pf, diversity, calibration);
  std::uniform_real_distribution<double> log_scale(std::log(1e-3), std::log(1e3));
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Eigen::Index r = pf.projected.cols();
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(oracle::random_matrix(static_cast<int>(r),
                                                                         static_cast<int>(r), rng));
    const Eigen::MatrixXd q = qr.householderQ();
    const double c = std::exp(log_scale(rng));
    const auto moved = ndiv::make_projected(c * pf.projected * q, 0);
    const auto s = ndiv::score_projected(g, moved, diversity, calibration);
    for (std::size_t i = 0; i < g.num_nodes(); ++i) {
      if (!base.evaluated_mask[i]) continue;
      worst = std::max(worst, std::fabs(s.scores[i] - base.scores[i]));
    }
  }
  return {worst <= 1e-10, "max score change over 20 transforms " + fmt_sci(worst) + " (<= 1e-10)"};
}

// Raw oracle values and valid sets for each method.
std::pair<std::vector<double>, std::vector<bool>> oracle_raw(ndiv::Method method,
                                                             const oracle::Adjacency& adj,
                                                             const oracle::Dense& projected) {
  const int n = static_cast<int>(adj.size());
  const oracle::Dense xt = oracle::l1_rows(projected);
  std::vector<double> raw(n, oracle::kNaN);
  std::vector<bool> valid(n);
  for (int i = 0; i < n; ++i) {
    const int d = oracle::degree(adj, i);
    valid[i] = (method == ndiv::Method::kNrs || method == ndiv::Method::kPcd) ? d >= 1 : d >= 2;
  }
  switch (method) {
    case ndiv::Method::kNeighborDiv: raw = oracle::diversity(adj, oracle::unit_rows(xt)); break;
    case ndiv::Method::kLcc: raw = oracle::lcc(adj); break;
    case ndiv::Method::kNrs: raw = oracle::nrs(adj, xt); break;
    case ndiv::Method::kPcd: raw = oracle::pcd(adj, xt); break;
    case ndiv::Method::kAmenEgo: {
      const oracle::Dense xr = oracle::minmax_columns(xt);
      for (int i = 0; i < n; ++i) {
        if (valid[i]) raw[i] = -oracle::amen(adj, xr, i).normality;
      }
      break;
    }
  }
  return {raw, valid};
}

Outcome criterion8() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> pick_n(12, 60);
  std::uniform_int_distribution<int> pick_d(8, 20);
  std::uniform_real_distribution<double> pick_p(0.05, 0.3);
  const std::vector<ndiv::Method> methods = {ndiv::Method::kNeighborDiv, ndiv::Method::kLcc,
                                             ndiv::Method::kNrs, ndiv::Method::kPcd,
                                             ndiv::Method::kAmenEgo};
  double worst = 0.0;
  std::size_t mismatched_masks = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = testutil::random_graph(pick_n(rng), pick_p(rng), pick_d(rng), rng);
    const auto adj = testutil::dense_adjacency(g);
    const oracle::Dense projected = oracle::projection(g.features(), ndiv::kDefaultRank);
    const bool use_median = trial % 2 == 0;
    const int fallback = trial % 3;
    for (auto method : methods) {
      ndiv::ScoreConfig cfg;
      cfg.method = method;
      cfg.calibration.reference = use_median ? ndiv::Reference::kMedian : ndiv::Reference::kMean;
      cfg.calibration.fallback = fallback == 0   ? ndiv::Fallback::kZero
                                 : fallback == 1 ? ndiv::Fallback::kMedianOfValid
                                                 : ndiv::Fallback::kValidOnly;
      const auto got = ndiv::run_scorer(g, cfg);
      const auto [raw, valid] = oracle_raw(method, adj, projected);
      const auto want = oracle::calibrate(raw, valid, use_median, fallback);
      for (std::size_t i = 0; i < raw.size(); ++i) {
        if (got.scores.evaluated_mask[i] != want.evaluated[i] ||
            (*got.scores.predictions)[i] != want.flags[i]) {
          ++mismatched_masks;
        }
        if (want.evaluated[i]) worst = std::max(worst, std::fabs(got.scores.scores[i] - want.scores[i]));
      }
    }
  }
  return {worst <= 1e-10 && mismatched_masks == 0,
          "5 methods x 20 graphs: max deviation " + fmt_sci(worst) + " (<= 1e-10), mask/flag mismatches " +
              std::to_string(mismatched_masks)};
}

Outcome criterion9() {
  const int d = 500;
  std::vector<ndiv::Edge> edges;
  for (int j = 1; j <= d; ++j) edges.emplace_back(0, static_cast<ndiv::NodeId>(j));
  std::mt19937_64 rng(9);
  const auto g = ndiv::build_graph(edges, oracle::random_matrix(d + 1, 50, rng));
  const auto pf = ndiv::project(g, ndiv::kDefaultRank, 0);
  ndiv::DiversityConfig cfg;
  const double full = *ndiv::neighbor_diversity(g, pf, 0, cfg);
  std::vector<double> err;
  for (std::uint64_t k : {25, 100, 400}) {
    double total = 0.0;
    for (std::uint64_t r = 0; r < 200; ++r) {
      cfg.sampling_budget = k;
      cfg.master_seed = r;
      total += std::fabs(*ndiv::neighbor_diversity(g, pf, 0, cfg) - full);
    }
    err.push_back(total / 200.0);
  }
  const bool ok = err[0] > err[1] && err[1] > err[2] && err[2] <= 0.6 * err[1];
  return {ok, "mean |error| k=25 " + fmt_sci(err[0]) + ", k=100 " + fmt_sci(err[1]) + ", k=400 " +
                  fmt_sci(err[2]) + "; ratio 400/100 " + fmt(err[2] / err[1], 3) + " (<= 0.6)"};
}

Outcome criterion10() {
  const auto& s = sweep();
  bool ok = s.worst_mean <= 1e-9 && s.worst_std <= 1e-9 && s.normalization_checks > 0;
  std::string detail = std::to_string(s.normalization_checks) + " generated-graph runs: max |mean| " +
                       fmt_sci(s.worst_mean) + ", max |std-1| " + fmt_sci(s.worst_std);

  // Fallback semantics on random raw vectors with invalid entries.
  std::mt19937_64 rng(10);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::bernoulli_distribution invalid(0.25);
  std::size_t fallback_failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 5 + trial % 40;
    std::vector<double> raw(n);
    std::vector<bool> valid(n);
    for (std::size_t i = 0; i < n; ++i) {
      raw[i] = trial % 10 == 0 ? 3.0 : gauss(rng);
      valid[i] = i < 2 || !invalid(rng);
    }
    std::vector<std::vector<double>> valid_scores;
    for (int policy = 0; policy < 3; ++policy) {
      ndiv::CalibrationConfig cfg;
      cfg.reference = trial % 2 ? ndiv::Reference::kMean : ndiv::Reference::kMedian;
      cfg.fallback = policy == 0   ? ndiv::Fallback::kZero
                     : policy == 1 ? ndiv::Fallback::kMedianOfValid
                                   : ndiv::Fallback::kValidOnly;
      const auto got = ndiv::calibrate(raw, valid, cfg);
      const auto want = oracle::calibrate(raw, valid, trial % 2 == 0, policy);
      std::vector<double> vs;
      for (std::size_t i = 0; i < n; ++i) {
        if (got.evaluated_mask[i] != want.evaluated[i]) ++fallback_failures;
        if (valid[i]) {
          vs.push_back(got.scores[i]);
          continue;
        }
        // zero fills exactly 0, median_of_valid the median of valid scores,
        // valid_only leaves NaN and drops the node from evaluation.
        if (policy == 2 ? !std::isnan(got.scores[i]) || got.evaluated_mask[i]
                        : got.scores[i] != want.scores[i] || !got.evaluated_mask[i]) {
          ++fallback_failures;
        }
      }
      valid_scores.push_back(vs);
      if (trial % 10 == 0) {
        for (double v : vs) fallback_failures += v == 0.0 ? 0 : 1;
      }
    }
    if (valid_scores[0] != valid_scores[1] || valid_scores[0] != valid_scores[2]) ++fallback_failures;
  }
  ok = ok && fallback_failures == 0;
  detail += "; fallback semantics failures " + std::to_string(fallback_failures) + " over 200x3 cases";
  return {ok, detail};
}

Outcome criterion11() {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick_n(2, 40);
  std::size_t failures = 0;
  std::size_t tied = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = pick_n(rng);
    std::vector<std::uint8_t> y(n);
    std::bernoulli_distribution coin(0.3);
    for (int i = 0; i < n; ++i) y[i] = coin(rng) ? 1 : 0;
    y[0] = 1;
    y[1] = 0;
    std::shuffle(y.begin(), y.end(), rng);
    std::vector<double> s(n);
    const int levels = trial % 4 == 0 ? 3 : 1000;
    std::uniform_int_distribution<int> pick_level(0, levels - 1);
    for (int i = 0; i < n; ++i) s[i] = trial % 10 == 0 ? 0.25 : pick_level(rng) / 7.0;
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);

    const double a = ndiv::auc(s, y);
    if (a != oracle::auc(s, y)) ++failures;
    if (ndiv::average_precision(s, y) != oracle::average_precision(s, y)) ++failures;
    if (ndiv::precision_at_k(s, y, k) != oracle::precision_at(s, y, k)) ++failures;
    if (ndiv::ks_statistic(s, y) != oracle::ks(s, y)) ++failures;
    if (trial % 10 == 0) {
      ++tied;
      if (a != 0.5) ++failures;
    }
  }
  return {failures == 0, "1000 instances (" + std::to_string(tied) +
                             " all-tied): mismatches " + std::to_string(failures)};
}

// ---- determinism through the command-line tool ----

std::string slurp(const fs::path& p) { return testutil::read_file(p); }

int run_cli(const std::string& args, const std::string& threads) {
  const std::string cmd =
      "NDIV_THREADS=" + threads + " \"" NDIV_CLI_PATH "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// bench.csv without its wall-clock column.
std::string strip_seconds(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string c;
    while (std::getline(ls, c, ',')) cells.push_back(c);
    if (cells.size() > 2) cells.erase(cells.begin() + 2);
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
    out += '\n';
  }
  return out;
}

Outcome criterion12() {
  testutil::TempDir dir;
  const std::string small = " --n 400 --avg-degree 10 --anomalies-per-type 10";
  const fs::path graph = dir / "graph";
  const std::string inputs = " --edges " + (graph / "edges.txt").string() + " --features " +
                             (graph / "features.csv").string() + " --labels " +
                             (graph / "labels.txt").string();
  // name, arguments (without --out-dir), files to compare
  std::vector<std::tuple<std::string, std::string, std::vector<std::string>>> commands = {
      {"generate", "generate" + small + " --homophily 0.3 --seed 5",
       {"edges.txt", "features.csv", "labels.txt", "communities.txt", "meta.json"}},
      {"sweep", "sweep" + small + " --homophily 0.2,0.8 --seeds 2 --seed 3",
       {"sweep_long.csv", "sweep_pivot.csv"}},
  };
  for (const char* method : {"neighbordiv", "lcc", "nrs", "pcd", "amen"}) {
    commands.emplace_back(std::string("score-") + method,
                          std::string("score") + inputs + " --method " + method + " --pairs 20 --seed 4",
                          std::vector<std::string>{"scores.csv", "report.json"});
  }
  commands.emplace_back("evaluate", "evaluate" + inputs + " --pairs 15 --seed 9 --statistic entropy",
                        std::vector<std::string>{"scores.csv", "report.json", "pr.csv"});
  commands.emplace_back("bench", "bench" + inputs + " --budgets 5,30 --repeat 2",
                        std::vector<std::string>{"bench.csv"});

  if (run_cli("generate" + small + " --homophily 0.4 --seed 1 --out-dir " + graph.string(), "1") != 0) {
    return {false, "could not generate the input graph"};
  }
  std::vector<std::string> differing;
  for (const auto& [name, args, files] : commands) {
    const fs::path a = dir / (name + "-t1");
    const fs::path b = dir / (name + "-t8");
    if (run_cli(args + " --out-dir " + a.string(), "1") != 0 ||
        run_cli(args + " --out-dir " + b.string(), "8") != 0) {
      differing.push_back(name + "(exit)");
      continue;
    }
    for (const auto& f : files) {
      std::string x = slurp(a / f);
      std::string y = slurp(b / f);
      if (f == "bench.csv") {
        x = strip_seconds(x);
        y = strip_seconds(y);
      }
      if (x.empty() || x != y) differing.push_back(name + "/" + f);
    }
  }
  std::string detail = std::to_string(commands.size()) + " seeded commands, NDIV_THREADS 1 vs 8";
  if (!differing.empty()) {
    detail += "; differing:";
    for (const auto& d : differing) detail += " " + d;
  } else {
    detail += "; all outputs byte-identical (bench seconds column excluded)";
  }
  return {differing.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NeighborDiv acceptance suite"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-12)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"type-H homophily sweep", criterion1},
      {"type-D homophily sweep", criterion2},
      {"mixed homophily sweep", criterion3},
      {"baseline ordering on mixed sweep", criterion4},
      {"sampling fidelity", criterion5},
      {"sampling speedup", criterion6},
      {"conformal invariance", criterion7},
      {"oracle equivalence", criterion8},
      {"Monte Carlo convergence", criterion9},
      {"calibration normalization", criterion10},
      {"metric oracles", criterion11},
      {"determinism", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    std::printf("%s %02zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
