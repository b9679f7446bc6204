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

#include "graphon/risk.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <string>

#include "graphon/error.hpp"
#include "graphon/sampler.hpp"

namespace graphon {

std::string_view estimator_name(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::kTrivial: return "trivial";
    case EstimatorKind::kDensity: return "density";
    case EstimatorKind::kBlockLeastSquares: return "blocklsq";
    case EstimatorKind::kOracle: return "oracle";
  }
  return "unknown";
}

EstimatorKind parse_estimator(std::string_view name) {
  for (EstimatorKind kind : {EstimatorKind::kTrivial, EstimatorKind::kDensity,
                             EstimatorKind::kBlockLeastSquares, EstimatorKind::kOracle}) {
    if (estimator_name(kind) == name) return kind;
  }
  throw Error(ErrorCode::kConfigInvalid, "unknown estimator '" + std::string(name) + "'");
}

Estimate run_estimator(const EstimatorSpec& spec, const SampledGraph& g, const BlockMatrix& truth,
                       RngSeed rng) {
  switch (spec.kind) {
    case EstimatorKind::kTrivial: return trivial_estimator(g);
    case EstimatorKind::kDensity: return density_estimator(g);
    case EstimatorKind::kBlockLeastSquares:
      return block_least_squares(g, spec.k_fit, spec.restarts, rng);
    case EstimatorKind::kOracle: return oracle_estimator(truth);
  }
  throw Error(ErrorCode::kConfigInvalid, "unknown estimator");
}

ProxyPair risk_proxies(const BlockMatrix& estimate, const BlockMatrix& truth,
                       const RiskOptions& options, RngSeed rng) {
  const int l = std::lcm(estimate.k(), truth.k());
  const Matrix est = blow_up(estimate.entries(), l / estimate.k());
  const Matrix tru = blow_up(truth.entries(), l / truth.k());

  ProxyPair out;
  out.upper = delta2_upper_via_blowup(est, tru, options.blowup_m, options.metric_restarts,
                                      rng.child(0), options.exact)
                  .distance;
  const int cap = options.exact.exact_cap > 0 ? options.exact.exact_cap : kDefaultSeparateExactCap;
  if (l <= cap) {
    // Both sides are exact minima over nested sets; min() only absorbs summation-order rounding.
    out.lower = std::min(delta_hathat2_exact(est, tru, options.exact).distance, out.upper);
    out.lower_exact = true;
  } else {
    // The heuristic only bounds hathat2 from above; delta_2 itself caps it.
    out.lower = std::min(
        delta_hathat2_heuristic(est, tru, options.metric_restarts, rng.child(1)).distance, out.upper);
    out.lower_exact = false;
  }
  return out;
}

std::pair<double, double> mean_and_se(const std::vector<double>& xs) {
  if (xs.empty()) return {0.0, 0.0};
  const double n = static_cast<double>(xs.size());
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0)) / std::sqrt(n)};
}

RiskResult empirical_risk(const EstimatorSpec& spec, const BlockMatrix& truth, int n, int trials,
                          RngSeed rng, const RiskOptions& options) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  std::vector<ProxyPair> per_trial(trials);
  auto run = [&](int t) {
    const RngSeed trial = rng.child(static_cast<uint64_t>(t));
    const SampledGraph g = sample_graph(truth, n, trial.child(0), false);
    const Estimate est = run_estimator(spec, g, truth, trial.child(1));
    per_trial[t] = risk_proxies(est.matrix, truth, options, trial.child(2));
  };
  const int workers = std::clamp(options.threads, 1, trials);
  if (workers == 1) {
    for (int t = 0; t < trials; ++t) run(t);
  } else {
    std::vector<std::future<void>> jobs;
    for (int w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (int t = w; t < trials; t += workers) run(t);
      }));
    for (auto& j : jobs) j.get();
  }

  RiskResult r;
  for (const ProxyPair& p : per_trial) {
    r.lower.push_back(p.lower);
    r.upper.push_back(p.upper);
    r.lower_exact = r.lower_exact && p.lower_exact;
  }
  std::tie(r.mean_lower, r.se_lower) = mean_and_se(r.lower);
  std::tie(r.mean_upper, r.se_upper) = mean_and_se(r.upper);
  return r;
}

}  // namespace graphon
