// Copyright 2026 The Graphon Lab Authors.
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

#include "graphon/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "graphon/error.hpp"
#include "graphon/matrix_io.hpp"
#include "graphon/packing.hpp"
#include "graphon/rates.hpp"

namespace graphon {

std::string risk_csv_header() {
  return std::string(kRiskCsvVersionLine) +
         "\nestimator,n,k_true,k_fit,rho,trials,mean_lower_proxy,se_lower,mean_upper_proxy,"
         "se_upper,lower_rate_value,upper_rate_value,seed\n";
}

std::string risk_csv_row(const RiskRecord& r) {
  std::string out = r.estimator;
  auto add = [&out](const std::string& field) {
    out += ',';
    out += field;
  };
  add(std::to_string(r.n));
  add(std::to_string(r.k_true));
  add(std::to_string(r.k_fit));
  add(format_double(r.rho));
  add(std::to_string(r.trials));
  add(format_double(r.mean_lower_proxy));
  add(format_double(r.se_lower));
  add(format_double(r.mean_upper_proxy));
  add(format_double(r.se_upper));
  add(format_double(r.lower_rate_value));
  add(format_double(r.upper_rate_value));
  add(std::to_string(r.seed));
  out += '\n';
  return out;
}

RiskRecord make_risk_record(const EstimatorSpec& spec, int n, const BlockMatrix& truth, double rho,
                            int trials, const RiskResult& result, uint64_t seed) {
  RiskRecord r;
  r.estimator = std::string(estimator_name(spec.kind));
  r.n = n;
  r.k_true = truth.k();
  switch (spec.kind) {
    case EstimatorKind::kBlockLeastSquares: r.k_fit = spec.k_fit; break;
    case EstimatorKind::kOracle: r.k_fit = truth.k(); break;
    default: r.k_fit = 1; break;
  }
  r.rho = rho;
  r.trials = trials;
  r.mean_lower_proxy = result.mean_lower;
  r.se_lower = result.se_lower;
  r.mean_upper_proxy = result.mean_upper;
  r.se_upper = result.se_upper;
  const RateQuery q{n, truth.k(), rho};
  if (q.k >= 2 && q.k <= q.n && rho > 0.0 && rho <= 1.0) {
    r.lower_rate_value = lower_rate(q).total;
    r.upper_rate_value = upper_rate(q);
  } else {
    r.lower_rate_value = r.upper_rate_value = std::numeric_limits<double>::quiet_NaN();
  }
  r.seed = seed;
  return r;
}

namespace {

[[noreturn]] void config_error(const std::string& what) {
  throw Error(ErrorCode::kConfigInvalid, what);
}

template <typename T>
std::vector<T> read_list(const nlohmann::json& grid, const char* key) {
  if (!grid.contains(key)) return {};
  const auto& v = grid.at(key);
  if (!v.is_array()) config_error(std::string("grid.") + key + " must be an array");
  return v.get<std::vector<T>>();
}

EstimatorSpec read_estimator(const nlohmann::json& e) {
  EstimatorSpec spec;
  spec.k_fit = 0;
  if (e.is_string()) {
    spec.kind = parse_estimator(e.get<std::string>());
    return spec;
  }
  if (!e.is_object() || !e.contains("name")) config_error("estimator entries need a name");
  spec.kind = parse_estimator(e.at("name").get<std::string>());
  spec.k_fit = e.value("k_fit", 0);
  spec.restarts = e.value("restarts", spec.restarts);
  if (spec.k_fit < 0 || spec.restarts < 1) config_error("invalid k_fit/restarts");
  return spec;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j,
                                             const std::filesystem::path& base_dir) {
  ExperimentConfig c;
  try {
    if (!j.is_object()) config_error("config must be a JSON object");
    c.raw = j;
    if (!j.contains("seed")) config_error("missing seed");
    c.seed = j.at("seed").get<uint64_t>();
    c.trials = j.value("trials", 1);
    c.blowup_m = j.value("blowup_m", 1);
    c.metric_restarts = j.value("metric_restarts", 10);
    c.threads = j.value("threads", 1);
    if (c.trials < 1 || c.blowup_m < 1 || c.metric_restarts < 1 || c.threads < 1)
      config_error("trials, blowup_m, metric_restarts and threads must be >= 1");

    const auto& truth = j.value("truth", nlohmann::json::object());
    const std::string type = truth.value("type", "qb");
    if (type == "qb") {
      c.truth.kind = TruthSpec::Kind::kHardInstance;
      c.truth.c = truth.value("c", 0.25);
      c.truth.target = truth.value("target", -1);
      c.truth.member = truth.value("member", 0);
      if (!(c.truth.c >= 0.0) || c.truth.member < 0) config_error("invalid qb truth parameters");
    } else if (type == "planted") {
      c.truth.kind = TruthSpec::Kind::kPlantedPartition;
      c.truth.q_ratio = truth.value("q_ratio", 0.5);
      if (!(c.truth.q_ratio >= 0.0 && c.truth.q_ratio <= 1.0)) config_error("q_ratio must lie in [0, 1]");
    } else if (type == "matrix") {
      c.truth.kind = TruthSpec::Kind::kMatrix;
      if (!truth.contains("path")) config_error("matrix truth needs a path");
      std::filesystem::path p = truth.at("path").get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      c.truth.matrix = load_block_matrix(p);
    } else {
      config_error("unknown truth type '" + type + "'");
    }

    if (!j.contains("estimators") || !j.at("estimators").is_array() || j.at("estimators").empty())
      config_error("estimators must be a nonempty array");
    for (const auto& e : j.at("estimators")) c.estimators.push_back(read_estimator(e));

    if (!j.contains("grid")) config_error("missing grid");
    const auto& grid = j.at("grid");
    c.n_grid = read_list<int>(grid, "n");
    c.k_grid = read_list<int>(grid, "k");
    c.rho_grid = read_list<double>(grid, "rho");
    c.rho_k2_over_n2 = read_list<double>(grid, "rho_k2_over_n2");
    if (c.n_grid.empty()) config_error("grid.n must be nonempty");
    if (c.truth.kind != TruthSpec::Kind::kMatrix) {
      if (c.k_grid.empty()) config_error("grid.k must be nonempty");
      if (c.rho_grid.empty() && c.rho_k2_over_n2.empty())
        config_error("grid needs rho or rho_k2_over_n2 values");
    }
  } catch (const nlohmann::json::exception& e) {
    config_error(e.what());
  }
  for (const GridPoint& p : expand_grid(c)) {
    if (p.n < 1 || p.k < 1 || p.k > p.n)
      config_error("grid point needs 1 <= k <= n (n=" + std::to_string(p.n) + ", k=" +
                   std::to_string(p.k) + ")");
    if (!(p.rho > 0.0 && p.rho <= 1.0)) config_error("grid rho outside (0, 1]: " + format_double(p.rho));
    for (const auto& e : c.estimators)
      if (e.kind == EstimatorKind::kBlockLeastSquares && e.k_fit > p.n)
        config_error("k_fit exceeds n");
  }
  return c;
}

std::vector<GridPoint> expand_grid(const ExperimentConfig& config) {
  std::vector<GridPoint> points;
  for (int n : config.n_grid) {
    if (config.truth.kind == TruthSpec::Kind::kMatrix) {
      points.push_back({n, config.truth.matrix->k(), config.truth.matrix->rho()});
      continue;
    }
    for (int k : config.k_grid) {
      for (double rho : config.rho_grid) points.push_back({n, k, rho});
      const double base = static_cast<double>(k) * k / (static_cast<double>(n) * n);
      for (double mult : config.rho_k2_over_n2) points.push_back({n, k, mult * base});
    }
  }
  return points;
}

BlockMatrix build_truth(const ExperimentConfig& config, const GridPoint& point) {
  switch (config.truth.kind) {
    case TruthSpec::Kind::kMatrix:
      return *config.truth.matrix;
    case TruthSpec::Kind::kPlantedPartition:
      return planted_partition(point.k, point.rho, config.truth.q_ratio * point.rho);
    case TruthSpec::Kind::kHardInstance: {
      const int target = config.truth.target >= 0 ? config.truth.target : default_packing_target(point.k);
      const RngSeed rng = RngSeed{config.seed, 1}.child(static_cast<uint64_t>(point.k));
      const PackingSet s =
          sample_packing_set(point.k, config.truth.member + 2, target, 10'000, rng);
      const auto params = HardInstanceParams::derive(point.n, point.k, point.rho, config.truth.c);
      return q_matrix(s.members[config.truth.member], params);
    }
  }
  throw Error(ErrorCode::kConfigInvalid, "unknown truth kind");
}

std::string config_hash(const nlohmann::json& raw) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : raw.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ExperimentSummary run_experiment(const ExperimentConfig& config, const std::filesystem::path& out_dir,
                                 const std::function<bool()>& stop) {
  const auto start = std::chrono::steady_clock::now();
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + out_dir.string());

  ExperimentSummary summary;
  summary.config_hash = config_hash(config.raw);
  summary.csv_path = out_dir / "risk.csv";
  summary.manifest_path = out_dir / "manifest.json";

  std::ofstream csv(summary.csv_path, std::ios::binary | std::ios::trunc);
  if (!csv) throw Error(ErrorCode::kIoError, "cannot write " + summary.csv_path.string());
  csv << risk_csv_header() << std::flush;

  RiskOptions options;
  options.blowup_m = config.blowup_m;
  options.metric_restarts = config.metric_restarts;
  options.threads = config.threads;

  const auto points = expand_grid(config);
  size_t done = 0;
  for (size_t pi = 0; pi < points.size(); ++pi) {
    if (stop && stop()) break;
    const GridPoint& p = points[pi];
    const BlockMatrix truth = build_truth(config, p);
    std::string rows;
    for (size_t ei = 0; ei < config.estimators.size(); ++ei) {
      EstimatorSpec spec = config.estimators[ei];
      if (spec.k_fit == 0) spec.k_fit = p.k;
      const RngSeed rng = RngSeed{config.seed, 0}.child(pi).child(ei);
      const RiskResult result = empirical_risk(spec, truth, p.n, config.trials, rng, options);
      rows += risk_csv_row(make_risk_record(spec, p.n, truth, p.rho, config.trials, result, config.seed));
      ++summary.rows;
    }
    csv << rows << std::flush;
    ++done;
  }
  summary.complete = done == points.size();
  summary.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const nlohmann::json manifest = {
      {"config_hash", summary.config_hash},
      {"code_version", kCodeVersion},
      {"runtime_seconds", summary.runtime_seconds},
      {"complete", summary.complete},
      {"grid_points", points.size()},
      {"grid_points_done", done},
      {"rows", summary.rows},
      {"csv", summary.csv_path.filename().string()},
  };
  write_file(summary.manifest_path, manifest.dump(2) + "\n");
  return summary;
}

}  // namespace graphon
