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

#include <string>
#include <string_view>
#include <vector>

#include "graphon/align.hpp"
#include "graphon/estimators.hpp"
#include "graphon/matrix.hpp"
#include "graphon/rng.hpp"

namespace graphon {

enum class EstimatorKind { kTrivial, kDensity, kBlockLeastSquares, kOracle };

std::string_view estimator_name(EstimatorKind kind);
// Accepts "trivial", "density", "blocklsq", "oracle"; throws kConfigInvalid.
EstimatorKind parse_estimator(std::string_view name);

struct EstimatorSpec {
  EstimatorKind kind = EstimatorKind::kTrivial;
  int k_fit = 1;     // block count for blocklsq
  int restarts = 5;  // random initializations for blocklsq
};

Estimate run_estimator(const EstimatorSpec& spec, const SampledGraph& g, const BlockMatrix& truth,
                       RngSeed rng);

struct RiskOptions {
  int blowup_m = 1;          // refinement used by the upper proxy
  int metric_restarts = 10;  // heuristic restarts inside the proxies
  int threads = 1;           // concurrent trials
  ExactOptions exact;
};

// Bracket for delta_2 between an estimate and the truth, after refining both
// to L = lcm(k_hat, k) blocks.
//   lower: hathat2 (exhaustive when L is within the exact cap; otherwise the
//          alignment heuristic, clamped to the upper value)
//   upper: delta2_upper_via_blowup with factor blowup_m
struct ProxyPair {
  double lower = 0.0;
  double upper = 0.0;
  bool lower_exact = true;
};

ProxyPair risk_proxies(const BlockMatrix& estimate, const BlockMatrix& truth,
                       const RiskOptions& options, RngSeed rng);

struct RiskResult {
  std::vector<double> lower;  // per trial, in trial order
  std::vector<double> upper;
  double mean_lower = 0.0;
  double se_lower = 0.0;
  double mean_upper = 0.0;
  double se_upper = 0.0;
  bool lower_exact = true;  // every lower value came from the exhaustive search
};

// Trial t samples G ~ G_n(truth) with stream rng.child(t), fits the estimator
// and evaluates both proxies. Trials may run concurrently; results are
// aggregated in trial order.
RiskResult empirical_risk(const EstimatorSpec& spec, const BlockMatrix& truth, int n, int trials,
                          RngSeed rng, const RiskOptions& options = {});

// Sample mean and standard error (sd with n - 1, over sqrt(n); 0 for n = 1).
std::pair<double, double> mean_and_se(const std::vector<double>& xs);

}  // namespace graphon
