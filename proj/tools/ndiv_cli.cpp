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


// ndiv: command-line front end over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "ndiv/ndiv.h"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

// Thrown for anything the user can fix by changing arguments or files.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RuntimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_input_status(ndiv_status s) {
  return s == NDIV_ERR_IO || s == NDIV_ERR_PARSE || s == NDIV_ERR_INVALID_ARGUMENT ||
         s == NDIV_ERR_SPEC;
}

void check(ndiv_status s, const std::string& context) {
  if (s == NDIV_OK) return;
  std::string msg = context + ": " + ndiv_status_name(s) + ": " + ndiv_last_error();
  if (is_input_status(s)) throw UsageError(msg);
  throw RuntimeError(msg);
}

template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T* get() const { return p; }
  T** out() { return &p; }
};

using GraphHandle = Handle<ndiv_graph, ndiv_graph_free>;
using ResultHandle = Handle<ndiv_result, ndiv_result_free>;
using EvalHandle = Handle<ndiv_eval, ndiv_eval_free>;
using SynthHandle = Handle<ndiv_synthetic, ndiv_synth_free>;

std::string take_string(char* s) {
  std::string out(s);
  ndiv_string_free(s);
  return out;
}

// Files are written under temporary names and renamed into place only when
// the whole command succeeded.
class StagedOutputs {
 public:
  explicit StagedOutputs(fs::path dir) : dir_(std::move(dir)) {}
  StagedOutputs(const StagedOutputs&) = delete;
  StagedOutputs& operator=(const StagedOutputs&) = delete;

  ~StagedOutputs() {
    if (committed_) return;
    std::error_code ec;
    for (const auto& [tmp, final_path] : files_) fs::remove_all(tmp, ec);
    if (created_dir_) fs::remove(dir_, ec);  // only succeeds when empty
  }

  fs::path stage(const std::string& name) {
    ensure_dir();
    fs::path final_path = dir_ / name;
    fs::path tmp = dir_ / (".tmp-" + name);
    files_.emplace_back(tmp, final_path);
    return tmp;
  }

  void write_text(const std::string& name, const std::string& text) {
    const fs::path p = stage(name);
    std::ofstream out(p, std::ios::binary);
    out << text;
    if (!out) throw UsageError("cannot write '" + p.string() + "'");
  }

  void commit() {
    for (const auto& [tmp, final_path] : files_) {
      std::error_code ec;
      fs::remove_all(final_path, ec);
      fs::rename(tmp, final_path, ec);
      if (ec) throw UsageError("cannot move output into '" + final_path.string() + "'");
    }
    committed_ = true;
  }

 private:
  void ensure_dir() {
    if (fs::exists(dir_)) return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw UsageError("cannot create output directory '" + dir_.string() + "'");
    created_dir_ = true;
  }

  fs::path dir_;
  std::vector<std::pair<fs::path, fs::path>> files_;
  bool created_dir_ = false;
  bool committed_ = false;
};

// Values given on the command line; unset options fall back to the JSON
// config file and then to built-in defaults.
struct ScoreFlags {
  std::optional<std::string> edges, features, labels, method, statistic, reference, fallback, pairs;
  std::optional<int> rank, entropy_bins;
  std::optional<double> lambda;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir, config;
  bool no_threshold = false;
  std::optional<std::string> dump_projection, dump_raw;
};

struct SpecFlags {
  std::optional<std::size_t> n, communities, feature_dim, anomalies_per_type;
  std::optional<double> homophily, avg_degree, center_variance, noise_variance;
  std::optional<std::string> anomaly_type;
};

json load_config(const std::optional<std::string>& path) {
  if (!path) return json::object();
  std::ifstream in(*path);
  if (!in) throw UsageError("cannot open config file '" + *path + "'");
  try {
    json j = json::parse(in);
    if (!j.is_object()) throw UsageError("config file must hold a JSON object");
    return j;
  } catch (const json::exception& e) {
    throw UsageError("config file '" + *path + "': " + e.what());
  }
}

template <typename T>
std::optional<T> from_config(const json& cfg, const char* key) {
  auto it = cfg.find(key);
  if (it == cfg.end() || it->is_null()) return std::nullopt;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw UsageError(std::string("config key '") + key + "' has the wrong type");
  }
}

template <typename T>
std::optional<T> pick(const std::optional<T>& flag, const json& cfg, const char* key) {
  return flag ? flag : from_config<T>(cfg, key);
}

void reject_unknown_keys(const json& cfg, const std::vector<std::string>& allowed) {
  for (const auto& [key, value] : cfg.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
}

const std::vector<std::string> kScoreKeys = {
    "edges",  "features", "labels", "method", "rank",         "statistic",   "reference",
    "fallback", "pairs",  "lambda", "seed",   "entropy_bins", "threshold",   "pcd_weights",
    "out_dir"};

const std::vector<std::string> kSpecKeys = {
    "n",          "communities", "homophily",       "avg_degree",     "feature_dim",
    "center_variance", "noise_variance", "anomaly_type", "anomalies_per_type"};

std::uint64_t parse_pairs(const std::string& text) {
  if (text == "full") return 0;
  std::size_t used = 0;
  unsigned long long k = 0;
  try {
    k = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || k == 0 || text.front() == '-') {
    throw UsageError("--pairs expects 'full' or a positive integer, got '" + text + "'");
  }
  return k;
}

std::string pairs_from_config(const json& cfg) {
  auto it = cfg.find("pairs");
  if (it == cfg.end() || it->is_null()) return "full";
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_unsigned()) return std::to_string(it->get<std::uint64_t>());
  throw UsageError("config key 'pairs' must be \"full\" or a positive integer");
}

ndiv_score_config resolve_score_config(const ScoreFlags& f, const json& cfg) {
  ndiv_score_config c;
  ndiv_score_config_init(&c);
  if (auto v = pick(f.method, cfg, "method")) check(ndiv_parse_method(v->c_str(), &c.method), "--method");
  if (auto v = pick(f.statistic, cfg, "statistic")) {
    check(ndiv_parse_statistic(v->c_str(), &c.statistic), "--statistic");
  }
  if (auto v = pick(f.reference, cfg, "reference")) {
    check(ndiv_parse_reference(v->c_str(), &c.reference), "--reference");
  }
  if (auto v = pick(f.fallback, cfg, "fallback")) {
    check(ndiv_parse_fallback(v->c_str(), &c.fallback), "--fallback");
  }
  c.pair_budget = parse_pairs(f.pairs ? *f.pairs : pairs_from_config(cfg));
  if (auto v = pick(f.rank, cfg, "rank")) c.rank = *v;
  if (auto v = pick(f.entropy_bins, cfg, "entropy_bins")) c.entropy_bins = *v;
  if (auto v = pick(f.lambda, cfg, "lambda")) c.lambda = *v;
  if (auto v = pick(f.seed, cfg, "seed")) c.seed = *v;
  if (auto v = from_config<bool>(cfg, "threshold")) c.emit_predictions = *v ? 1 : 0;
  if (f.no_threshold) c.emit_predictions = 0;
  if (auto v = from_config<std::vector<double>>(cfg, "pcd_weights")) {
    if (v->size() != 3) throw UsageError("pcd_weights must hold exactly 3 numbers");
    for (int i = 0; i < 3; ++i) c.pcd_weights[i] = (*v)[i];
  }
  if (c.rank < 1) throw UsageError("--rank must be at least 1");
  if (c.entropy_bins < 1) throw UsageError("entropy_bins must be at least 1");
  if (!std::isfinite(c.lambda)) throw UsageError("--lambda must be finite");
  return c;
}

ndiv_synth_spec resolve_spec(const SpecFlags& f, const json& cfg, std::uint64_t seed) {
  ndiv_synth_spec s;
  ndiv_synth_spec_init(&s);
  if (auto v = pick(f.n, cfg, "n")) s.n = *v;
  if (auto v = pick(f.communities, cfg, "communities")) s.communities = *v;
  if (auto v = pick(f.homophily, cfg, "homophily")) s.target_homophily = *v;
  if (auto v = pick(f.avg_degree, cfg, "avg_degree")) s.avg_degree = *v;
  if (auto v = pick(f.feature_dim, cfg, "feature_dim")) s.feature_dim = *v;
  if (auto v = pick(f.center_variance, cfg, "center_variance")) s.center_variance = *v;
  if (auto v = pick(f.noise_variance, cfg, "noise_variance")) s.noise_variance = *v;
  if (auto v = pick(f.anomaly_type, cfg, "anomaly_type")) {
    check(ndiv_parse_anomaly_type(v->c_str(), &s.anomaly_type), "--anomaly-type");
  }
  if (auto v = pick(f.anomalies_per_type, cfg, "anomalies_per_type")) s.anomalies_per_type = *v;
  s.seed = seed;
  return s;
}

void add_score_flags(CLI::App* cmd, ScoreFlags& f, bool with_inputs) {
  if (with_inputs) {
    cmd->add_option("--edges", f.edges, "edge list file (one 'u v' pair per line)");
    cmd->add_option("--features", f.features, "feature matrix (comma or tab separated)");
    cmd->add_option("--labels", f.labels, "labels file (one 0/1 per line)");
  }
  cmd->add_option("--method", f.method, "neighbordiv|lcc|nrs|pcd|amen");
  cmd->add_option("--rank", f.rank, "SVD rank r (default 8)");
  cmd->add_option("--statistic", f.statistic, "variance|std|mean|entropy");
  cmd->add_option("--reference", f.reference, "median|mean");
  cmd->add_option("--fallback", f.fallback, "zero|median|valid_only");
  cmd->add_option("--pairs", f.pairs, "full or a per-node pair budget k");
  cmd->add_option("--lambda", f.lambda, "threshold multiplier (default 1.0)");
  cmd->add_option("--seed", f.seed, "master seed (default 0)");
  cmd->add_option("--entropy-bins", f.entropy_bins, "bins for the entropy statistic");
  cmd->add_flag("--no-threshold", f.no_threshold, "omit binary predictions");
  cmd->add_option("--out-dir", f.out_dir, "output directory (default .)");
  cmd->add_option("--config", f.config, "JSON config file; flags take precedence");
}

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
  cmd->add_option("--n", f.n, "node count (default 2000)");
  cmd->add_option("--communities", f.communities, "community count (default 5)");
  cmd->add_option("--avg-degree", f.avg_degree, "expected average degree (default 15)");
  cmd->add_option("--feature-dim", f.feature_dim, "feature dimension (default 50)");
  cmd->add_option("--center-variance", f.center_variance, "community center variance (default 9)");
  cmd->add_option("--noise-variance", f.noise_variance, "per-node noise variance (default 1)");
  cmd->add_option("--anomalies-per-type", f.anomalies_per_type, "anomalies per type (default 50)");
}

struct Inputs {
  std::string edges, features;
  std::optional<std::string> labels;
};

Inputs resolve_inputs(const ScoreFlags& f, const json& cfg, bool need_labels) {
  Inputs in;
  auto edges = pick(f.edges, cfg, "edges");
  auto features = pick(f.features, cfg, "features");
  if (!edges) throw UsageError("--edges is required");
  if (!features) throw UsageError("--features is required");
  in.edges = *edges;
  in.features = *features;
  in.labels = pick(f.labels, cfg, "labels");
  if (need_labels && !in.labels) throw UsageError("--labels is required");
  return in;
}

void load(GraphHandle& g, const Inputs& in) {
  const ndiv_status s = ndiv_graph_load(in.edges.c_str(), in.features.c_str(),
                                        in.labels ? in.labels->c_str() : nullptr, g.out());
  if (s != NDIV_OK) throw UsageError(std::string("loading graph: ") + ndiv_last_error());
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

int cmd_score(const ScoreFlags& f, bool evaluate) {
  const json cfg = load_config(f.config);
  reject_unknown_keys(cfg, kScoreKeys);
  const ndiv_score_config config = resolve_score_config(f, cfg);
  const Inputs in = resolve_inputs(f, cfg, evaluate);
  const fs::path out_dir = pick(f.out_dir, cfg, "out_dir").value_or(".");

  GraphHandle graph;
  load(graph, in);
  ResultHandle result;
  check(ndiv_score(graph.get(), &config, result.out()), "scoring");

  EvalHandle eval;
  if (evaluate) {
    const std::uint8_t* labels = ndiv_graph_labels(graph.get());
    check(ndiv_evaluate(result.get(), labels, nullptr, 0, eval.out()), "evaluating");
  }

  char* report = nullptr;
  check(ndiv_report_json(graph.get(), result.get(), &config, eval.get(), &report), "report");
  const std::string report_text = take_string(report) + "\n";

  StagedOutputs out(out_dir);
  check(ndiv_result_write_csv(result.get(), graph.get(), out.stage("scores.csv").c_str()),
        "writing scores");
  out.write_text("report.json", report_text);
  if (evaluate) {
    check(ndiv_eval_write_pr_csv(eval.get(), out.stage("pr.csv").c_str()), "writing pr curve");
  }
  if (f.dump_projection) {
    check(ndiv_graph_write_projection(graph.get(), config.rank, config.seed,
                                      out.stage(*f.dump_projection).c_str()),
          "writing projection");
  }
  if (f.dump_raw) {
    check(ndiv_result_write_raw_csv(result.get(), graph.get(), out.stage(*f.dump_raw).c_str()),
          "writing raw scores");
  }
  out.commit();

  ndiv_calibration cal;
  ndiv_result_calibration(result.get(), &cal);
  std::cout << "nodes " << ndiv_graph_num_nodes(graph.get()) << ", edges "
            << ndiv_graph_num_edges(graph.get()) << ", valid " << cal.num_valid;
  if (config.emit_predictions) std::cout << ", flagged " << cal.num_flagged;
  std::cout << "\n";
  if (evaluate) {
    std::cout << "auc " << fmt(ndiv_eval_auc(eval.get())) << ", ap " << fmt(ndiv_eval_ap(eval.get()))
              << ", ks " << fmt(ndiv_eval_ks(eval.get())) << "\n";
  }
  return kExitOk;
}

int cmd_generate(const SpecFlags& sf, std::optional<double> homophily,
                 std::optional<std::uint64_t> seed, std::optional<std::string> out_dir_flag,
                 const std::optional<std::string>& config_path) {
  json cfg = load_config(config_path);
  std::vector<std::string> allowed = kSpecKeys;
  allowed.push_back("seed");
  allowed.push_back("out_dir");
  reject_unknown_keys(cfg, allowed);
  SpecFlags f = sf;
  f.homophily = homophily;
  const std::uint64_t s = pick(seed, cfg, "seed").value_or(0);
  const ndiv_synth_spec spec = resolve_spec(f, cfg, s);
  const auto out_dir = pick(out_dir_flag, cfg, "out_dir");
  if (!out_dir) throw UsageError("--out-dir is required");

  double p_in = 0, p_out = 0;
  check(ndiv_synth_probabilities(&spec, &p_in, &p_out), "generate");
  SynthHandle synth;
  check(ndiv_synth_generate(&spec, synth.out()), "generate");
  // write_synthetic creates several files; stage into a sibling directory.
  const fs::path final_dir(*out_dir);
  const fs::path tmp_dir = final_dir.string() + ".tmp";
  std::error_code ec;
  fs::remove_all(tmp_dir, ec);
  const ndiv_status st = ndiv_synth_write(synth.get(), tmp_dir.string().c_str());
  if (st != NDIV_OK) {
    fs::remove_all(tmp_dir, ec);
    check(st, "writing synthetic graph");
  }
  fs::create_directories(final_dir, ec);
  for (const auto& entry : fs::directory_iterator(tmp_dir)) {
    fs::rename(entry.path(), final_dir / entry.path().filename(), ec);
    if (ec) throw UsageError("cannot write into '" + final_dir.string() + "'");
  }
  fs::remove_all(tmp_dir, ec);

  const ndiv_graph* g = ndiv_synth_graph(synth.get());
  std::cout << "nodes " << ndiv_graph_num_nodes(g) << ", edges " << ndiv_graph_num_edges(g)
            << ", p_in " << fmt(p_in) << ", p_out " << fmt(p_out) << ", homophily "
            << fmt(ndiv_synth_measured_homophily(synth.get())) << "\n";
  return kExitOk;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& text, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) throw UsageError(std::string("bad value for ") + what + ": '" + text + "'");
  return v;
}

struct SweepFlags {
  std::string methods = "neighbordiv,lcc,nrs,pcd,amen";
  std::string homophily = "0.1,0.3,0.5,0.7,0.9";
  std::string types = "type_h,type_d,mixed";
  int seeds = 3;
};

int cmd_sweep(const SweepFlags& sw, const ScoreFlags& f, const SpecFlags& sf) {
  const json cfg = load_config(f.config);
  std::vector<std::string> allowed = kScoreKeys;
  allowed.insert(allowed.end(), kSpecKeys.begin(), kSpecKeys.end());
  reject_unknown_keys(cfg, allowed);
  if (sw.seeds < 1) throw UsageError("--seeds must be at least 1");
  const ndiv_score_config base = resolve_score_config(f, cfg);
  const std::uint64_t base_seed = base.seed;
  const fs::path out_dir = pick(f.out_dir, cfg, "out_dir").value_or(".");

  std::vector<ndiv_method> methods;
  for (const auto& m : split_list(sw.methods)) {
    ndiv_method v;
    check(ndiv_parse_method(m.c_str(), &v), "--methods");
    methods.push_back(v);
  }
  std::vector<ndiv_anomaly_type> types;
  for (const auto& t : split_list(sw.types)) {
    ndiv_anomaly_type v;
    check(ndiv_parse_anomaly_type(t.c_str(), &v), "--types");
    types.push_back(v);
  }
  std::vector<double> hs;
  for (const auto& h : split_list(sw.homophily)) hs.push_back(parse_double(h, "--homophily"));
  if (methods.empty() || types.empty() || hs.empty()) {
    throw UsageError("sweep needs at least one method, anomaly type and homophily value");
  }

  std::ostringstream rows;
  rows << "anomaly_type,homophily,seed,method,status,auc,ap,measured_homophily,message\n";
  struct Cell {
    double auc_sum = 0, ap_sum = 0;
    int ok = 0, failed = 0;
  };
  std::map<std::tuple<int, int, int>, Cell> cells;
  int failures = 0;

  for (std::size_t ti = 0; ti < types.size(); ++ti) {
    for (std::size_t hi = 0; hi < hs.size(); ++hi) {
      for (int s = 0; s < sw.seeds; ++s) {
        SpecFlags spec_flags = sf;
        spec_flags.homophily = hs[hi];
        ndiv_synth_spec spec = resolve_spec(spec_flags, cfg, base_seed + static_cast<std::uint64_t>(s));
        spec.anomaly_type = types[ti];
        SynthHandle synth;
        const ndiv_status gen = ndiv_synth_generate(&spec, synth.out());
        const std::string gen_error = gen == NDIV_OK ? "" : ndiv_last_error();
        for (std::size_t mi = 0; mi < methods.size(); ++mi) {
          Cell& cell = cells[{static_cast<int>(ti), static_cast<int>(hi), static_cast<int>(mi)}];
          rows << ndiv_anomaly_type_name(types[ti]) << ',' << fmt(hs[hi]) << ',' << spec.seed << ','
               << ndiv_method_name(methods[mi]) << ',';
          std::string error = gen_error;
          double auc = NAN, ap = NAN;
          if (error.empty()) {
            ndiv_score_config c = base;
            c.method = methods[mi];
            c.seed = spec.seed;
            const ndiv_graph* g = ndiv_synth_graph(synth.get());
            ResultHandle result;
            EvalHandle eval;
            if (ndiv_score(g, &c, result.out()) != NDIV_OK ||
                ndiv_evaluate(result.get(), ndiv_graph_labels(g), nullptr, 0, eval.out()) != NDIV_OK) {
              error = ndiv_last_error();
            } else {
              auc = ndiv_eval_auc(eval.get());
              ap = ndiv_eval_ap(eval.get());
            }
          }
          if (error.empty()) {
            rows << "ok," << fmt(auc) << ',' << fmt(ap) << ','
                 << fmt(ndiv_synth_measured_homophily(synth.get())) << ",\n";
            cell.auc_sum += auc;
            cell.ap_sum += ap;
            ++cell.ok;
          } else {
            for (char& ch : error) {
              if (ch == ',' || ch == '\n') ch = ' ';
            }
            rows << "error,,,," << error << '\n';
            ++cell.failed;
            ++failures;
          }
        }
      }
    }
  }

  std::ostringstream pivot;
  pivot << "anomaly_type,homophily,method,mean_auc,mean_ap,runs,failed\n";
  for (const auto& [key, cell] : cells) {
    const auto [ti, hi, mi] = key;
    pivot << ndiv_anomaly_type_name(types[ti]) << ',' << fmt(hs[hi]) << ','
          << ndiv_method_name(methods[mi]) << ',';
    if (cell.ok > 0) {
      pivot << fmt(cell.auc_sum / cell.ok) << ',' << fmt(cell.ap_sum / cell.ok);
    } else {
      pivot << ',';
    }
    pivot << ',' << cell.ok << ',' << cell.failed << '\n';
  }

  StagedOutputs out(out_dir);
  out.write_text("sweep_long.csv", rows.str());
  out.write_text("sweep_pivot.csv", pivot.str());
  out.commit();
  std::cout << pivot.str();
  if (failures > 0) std::cerr << failures << " sweep runs failed; see sweep_long.csv\n";
  return kExitOk;
}

int cmd_bench(const std::string& budgets_text, int repeats, const ScoreFlags& f) {
  const json cfg = load_config(f.config);
  reject_unknown_keys(cfg, kScoreKeys);
  if (repeats < 1) throw UsageError("--repeat must be at least 1");
  const ndiv_score_config base = resolve_score_config(f, cfg);
  const Inputs in = resolve_inputs(f, cfg, false);
  const fs::path out_dir = pick(f.out_dir, cfg, "out_dir").value_or(".");

  std::vector<std::uint64_t> budgets = {0};
  for (const auto& b : split_list(budgets_text)) budgets.push_back(parse_pairs(b));

  GraphHandle graph;
  load(graph, in);
  const std::uint8_t* labels = ndiv_graph_labels(graph.get());

  std::ostringstream csv;
  csv << "pairs,repeat,seconds,auc,ap\n";
  for (std::uint64_t k : budgets) {
    for (int r = 0; r < repeats; ++r) {
      ndiv_score_config c = base;
      c.pair_budget = k;
      ResultHandle result;
      const auto t0 = std::chrono::steady_clock::now();
      check(ndiv_score(graph.get(), &c, result.out()), "scoring");
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      csv << (k == 0 ? std::string("full") : std::to_string(k)) << ',' << r << ',' << fmt(seconds)
          << ',';
      if (labels != nullptr) {
        EvalHandle eval;
        check(ndiv_evaluate(result.get(), labels, nullptr, 0, eval.out()), "evaluating");
        csv << fmt(ndiv_eval_auc(eval.get())) << ',' << fmt(ndiv_eval_ap(eval.get()));
      } else {
        csv << ',';
      }
      csv << '\n';
    }
  }
  StagedOutputs out(out_dir);
  out.write_text("bench.csv", csv.str());
  out.commit();
  std::cout << csv.str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Training-free graph anomaly detection by neighbor diversity", "ndiv"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ndiv_version());

  ScoreFlags score_flags;
  auto* score = app.add_subcommand("score", "score every node of a graph");
  add_score_flags(score, score_flags, true);
  score->add_option("--dump-projection", score_flags.dump_projection,
                    "also write projected features to this file name in --out-dir");
  score->add_option("--dump-raw", score_flags.dump_raw,
                    "also write the uncalibrated per-node statistic to this file name");

  ScoreFlags eval_flags;
  auto* evaluate = app.add_subcommand("evaluate", "score a labeled graph and report metrics");
  add_score_flags(evaluate, eval_flags, true);

  SpecFlags gen_spec;
  std::optional<double> gen_h;
  std::optional<std::uint64_t> gen_seed;
  std::optional<std::string> gen_out, gen_config;
  auto* generate = app.add_subcommand("generate", "write a synthetic SBM benchmark graph");
  add_spec_flags(generate, gen_spec);
  generate->add_option("--homophily", gen_h, "target edge homophily in (0,1) (default 0.5)");
  generate->add_option("--anomaly-type", gen_spec.anomaly_type, "type_h|type_d|mixed");
  generate->add_option("--seed", gen_seed, "generator seed (default 0)");
  generate->add_option("--out-dir", gen_out, "directory for the graph files");
  generate->add_option("--config", gen_config, "JSON config file; flags take precedence");

  SweepFlags sweep_flags;
  ScoreFlags sweep_score;
  SpecFlags sweep_spec;
  auto* sweep = app.add_subcommand("sweep", "AUC across homophily levels, seeds and methods");
  add_score_flags(sweep, sweep_score, false);
  add_spec_flags(sweep, sweep_spec);
  sweep->add_option("--methods", sweep_flags.methods, "comma-separated methods")->capture_default_str();
  sweep->add_option("--homophily", sweep_flags.homophily, "comma-separated h values")
      ->capture_default_str();
  sweep->add_option("--types", sweep_flags.types, "comma-separated anomaly types")
      ->capture_default_str();
  sweep->add_option("--seeds", sweep_flags.seeds, "seeds per cell, counted up from --seed")
      ->capture_default_str();

  ScoreFlags bench_flags;
  std::string budgets = "100";
  int repeats = 1;
  auto* bench = app.add_subcommand("bench", "time full against sampled pair enumeration");
  add_score_flags(bench, bench_flags, true);
  bench->add_option("--budgets", budgets, "comma-separated pair budgets")->capture_default_str();
  bench->add_option("--repeat", repeats, "timed runs per configuration")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*score) return cmd_score(score_flags, false);
    if (*evaluate) return cmd_score(eval_flags, true);
    if (*generate) return cmd_generate(gen_spec, gen_h, gen_seed, gen_out, gen_config);
    if (*sweep) return cmd_sweep(sweep_flags, sweep_score, sweep_spec);
    if (*bench) return cmd_bench(budgets, repeats, bench_flags);
  } catch (const UsageError& e) {
    std::cerr << "ndiv: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RuntimeError& e) {
    std::cerr << "ndiv: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "ndiv: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
