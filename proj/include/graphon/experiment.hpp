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

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphon/matrix.hpp"
#include "graphon/risk.hpp"
#include "json.hpp"

namespace graphon {

inline constexpr std::string_view kCodeVersion = "0.1.0";
inline constexpr std::string_view kRiskCsvVersionLine =
    "# graphon-lab risk-csv v1 (unit-constant rate curves)";

// One row of the risk CSV. Columns appear in declaration order.
struct RiskRecord {
  std::string estimator;
  int n = 0;
  int k_true = 0;
  int k_fit = 0;
  double rho = 0.0;
  int trials = 0;
  double mean_lower_proxy = 0.0;
  double se_lower = 0.0;
  double mean_upper_proxy = 0.0;
  double se_upper = 0.0;
  double lower_rate_value = 0.0;  // NaN when (n, k, rho) is not a valid rate query
  double upper_rate_value = 0.0;
  uint64_t seed = 0;
};

// Version comment line plus the column-name line, each newline-terminated.
std::string risk_csv_header();
std::string risk_csv_row(const RiskRecord& r);

RiskRecord make_risk_record(const EstimatorSpec& spec, int n, const BlockMatrix& truth, double rho,
                            int trials, const RiskResult& result, uint64_t seed);

struct TruthSpec {
  enum class Kind { kHardInstance, kPlantedPartition, kMatrix };
  Kind kind = Kind::kHardInstance;
  double c = 0.25;           // hard-instance amplitude
  int target = -1;           // packing target; -1 selects floor(k^2/8)
  int member = 0;            // which packing member to use
  double q_ratio = 0.5;      // planted partition: p = rho, q = q_ratio * rho
  std::optional<BlockMatrix> matrix;  // fixed truth, loaded from "path"
};

struct GridPoint {
  int n = 0;
  int k = 0;
  double rho = 0.0;
};

struct ExperimentConfig {
  TruthSpec truth;
  std::vector<EstimatorSpec> estimators;  // k_fit == 0 means "use the grid k"
  std::vector<int> n_grid;
  std::vector<int> k_grid;
  std::vector<double> rho_grid;
  std::vector<double> rho_k2_over_n2;  // rho = multiplier * k^2 / n^2
  int trials = 1;
  uint64_t seed = 0;
  int blowup_m = 1;
  int metric_restarts = 10;
  int threads = 1;
  nlohmann::json raw;

  // Relative "truth.path" entries resolve against `base_dir`. Throws
  // kConfigInvalid on any missing or inconsistent field.
  static ExperimentConfig from_json(const nlohmann::json& j,
                                    const std::filesystem::path& base_dir = {});
};

// n outermost, then k, then the explicit rho list followed by the k^2/n^2
// multipliers.
std::vector<GridPoint> expand_grid(const ExperimentConfig& config);

// Hard instances use a packing member drawn once per k from the config seed,
// so every (n, rho) with the same k shares the same binary pattern.
BlockMatrix build_truth(const ExperimentConfig& config, const GridPoint& point);

struct ExperimentSummary {
  size_t rows = 0;
  bool complete = false;
  double runtime_seconds = 0.0;
  std::string config_hash;
  std::filesystem::path csv_path;
  std::filesystem::path manifest_path;
};

// FNV-1a 64-bit of the compact config dump, as 16 hex digits.
std::string config_hash(const nlohmann::json& raw);

// Writes <out_dir>/risk.csv, flushed after every grid point, and
// <out_dir>/manifest.json. When `stop` returns true between grid points the
// run ends early and the manifest is marked incomplete.
ExperimentSummary run_experiment(const ExperimentConfig& config, const std::filesystem::path& out_dir,
                                 const std::function<bool()>& stop = {});

}  // namespace graphon
