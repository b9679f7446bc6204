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

#include <vector>

#include "graphon/matrix.hpp"
#include "graphon/rng.hpp"
#include "graphon/sampler.hpp"

namespace graphon {

struct EstimateMeta {
  double objective = 0.0;
  int iterations = 0;
  int restarts_used = 0;
  // Objective after each iteration of the winning restart.
  std::vector<double> objective_trace;
  std::vector<int> groups;  // fitted group of each node (blocklsq only)
};

// A k_hat-block estimate of the generating graphon; entries lie in [0, 1].
struct Estimate {
  BlockMatrix matrix;
  int k_hat = 1;
  EstimateMeta meta;
};

// The constant zero graphon.
Estimate trivial_estimator(const SampledGraph& g);

// The constant graphon at the empirical edge density. Throws kTooFewNodes
// for n < 2.
Estimate density_estimator(const SampledGraph& g);

// Returns the truth itself; only useful for testing the harness.
Estimate oracle_estimator(const BlockMatrix& truth);

// Sum over node pairs i < j of (A_ij - theta[g_i][g_j])^2 where theta holds
// the within/between group edge means for the grouping.
struct BlockFit {
  std::vector<int> groups;
  Matrix theta;
  double objective = 0.0;
};

BlockFit fit_block_values(const SampledGraph& g, const std::vector<int>& groups, int k);

// Least-squares block model fit by alternating minimization. Each iteration
// makes one greedy pass moving every node to its best group under the current
// block values (ties stay put, then go to the lowest index), then refits the
// values. Stops when no node moves or after 100 iterations. The best of
// `restarts` random initializations is returned. Throws kNumericalBreakdown if
// the objective ever increases.
Estimate block_least_squares(const SampledGraph& g, int k, int restarts, RngSeed rng);

}  // namespace graphon
