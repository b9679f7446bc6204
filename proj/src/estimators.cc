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

#include "graphon/estimators.hpp"

#include <limits>
#include <string>

#include "graphon/error.hpp"

namespace graphon {

namespace {

constexpr int kMaxIterations = 100;
constexpr double kMoveTolerance = 1e-12;

inline double sq(double x) { return x * x; }

}  // namespace

Estimate trivial_estimator(const SampledGraph&) {
  return {make_block_matrix(Matrix(1, 0.0), 1.0), 1, {}};
}

Estimate density_estimator(const SampledGraph& g) {
  return {make_block_matrix(Matrix(1, empirical_edge_density(g)), 1.0), 1, {}};
}

Estimate oracle_estimator(const BlockMatrix& truth) { return {truth, truth.k(), {}}; }

BlockFit fit_block_values(const SampledGraph& g, const std::vector<int>& groups, int k) {
  if (static_cast<int>(groups.size()) != g.n())
    throw Error(ErrorCode::kDimensionMismatch, "one group per node required");
  std::vector<double> count(k, 0.0);
  for (int h : groups) {
    if (h < 0 || h >= k) throw Error(ErrorCode::kOutOfRange, "group index out of range");
    count[h] += 1.0;
  }
  Matrix edges(k);
  for (const Edge& e : g.edges()) {
    const int a = groups[e.u];
    const int b = groups[e.v];
    edges(a, b) += 1.0;
    if (a != b) edges(b, a) += 1.0;
  }
  BlockFit fit{groups, Matrix(k), 0.0};
  for (int a = 0; a < k; ++a) {
    for (int b = a; b < k; ++b) {
      const double pairs = a == b ? 0.5 * count[a] * (count[a] - 1.0) : count[a] * count[b];
      const double theta = pairs > 0.0 ? edges(a, b) / pairs : 0.0;
      fit.theta(a, b) = fit.theta(b, a) = theta;
      fit.objective += edges(a, b) * sq(1.0 - theta) + (pairs - edges(a, b)) * sq(theta);
    }
  }
  return fit;
}

namespace {

// One greedy pass with fixed block values. Returns the number of moves.
int reassign_pass(const std::vector<std::vector<int>>& adj, const Matrix& theta,
                  std::vector<int>& groups) {
  const int n = static_cast<int>(groups.size());
  const int k = theta.k();
  std::vector<double> count(k, 0.0);
  for (int h : groups) count[h] += 1.0;
  std::vector<double> nb(k);
  int moves = 0;
  for (int i = 0; i < n; ++i) {
    std::fill(nb.begin(), nb.end(), 0.0);
    for (int j : adj[i]) nb[groups[j]] += 1.0;
    const int current = groups[i];
    count[current] -= 1.0;
    auto cost = [&](int g) {
      double c = 0.0;
      for (int h = 0; h < k; ++h) {
        const double t = theta(g, h);
        c += nb[h] * sq(1.0 - t) + (count[h] - nb[h]) * sq(t);
      }
      return c;
    };
    int best = current;
    double best_cost = cost(current);
    for (int g = 0; g < k; ++g) {
      if (g == current) continue;
      const double c = cost(g);
      if (c < best_cost - kMoveTolerance) {
        best = g;
        best_cost = c;
      }
    }
    count[best] += 1.0;
    if (best != current) {
      groups[i] = best;
      ++moves;
    }
  }
  return moves;
}

}  // namespace

Estimate block_least_squares(const SampledGraph& g, int k, int restarts, RngSeed rng) {
  if (k < 1 || k > g.n())
    throw Error(ErrorCode::kInvalidArgument, "need 1 <= k <= n, got k=" + std::to_string(k));
  if (restarts < 1) throw Error(ErrorCode::kInvalidArgument, "restarts must be >= 1");
  const auto adj = g.adjacency_lists();

  BlockFit best;
  best.objective = std::numeric_limits<double>::infinity();
  EstimateMeta best_meta;
  for (int r = 0; r < restarts; ++r) {
    std::vector<int> groups = sample_labels(g.n(), k, rng.child(static_cast<uint64_t>(r)));
    BlockFit fit = fit_block_values(g, groups, k);
    EstimateMeta meta;
    meta.objective_trace.push_back(fit.objective);
    for (int it = 0; it < kMaxIterations; ++it) {
      const int moves = reassign_pass(adj, fit.theta, groups);
      meta.iterations = it + 1;
      if (moves == 0) break;
      BlockFit next = fit_block_values(g, groups, k);
      if (next.objective > fit.objective + 1e-9 * (1.0 + fit.objective)) {
        throw Error(ErrorCode::kNumericalBreakdown,
                    "block least-squares objective increased at iteration " + std::to_string(it));
      }
      fit = std::move(next);
      meta.objective_trace.push_back(fit.objective);
    }
    if (fit.objective < best.objective) {
      best = std::move(fit);
      best_meta = std::move(meta);
    }
  }
  best_meta.objective = best.objective;
  best_meta.restarts_used = restarts;
  best_meta.groups = best.groups;
  return {make_block_matrix(best.theta, 1.0), k, std::move(best_meta)};
}

}  // namespace graphon
