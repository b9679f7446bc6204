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

#include <optional>
#include <vector>

#include "graphon/align.hpp"
#include "graphon/matrix.hpp"
#include "graphon/rng.hpp"
#include "json.hpp"

namespace graphon {

// Families of symmetric binary matrices that stay far apart in Hamming
// distance under independent row and column permutations.
//
// Distance convention: permuted_hamming_min counts all k^2 positions, so an
// off-diagonal disagreement is counted twice. chernoff_collision_bound instead
// works with the C(k,2) strict upper-triangle trials of the union-bound
// argument.

struct PackingSet {
  int k = 0;
  int target = 0;
  std::vector<BinarySymMatrix> members;
  // Smallest exhaustive pairwise distance, or nullopt when k is beyond the
  // exact cap and acceptance relied on the alignment heuristic.
  std::optional<int> certified_min_distance;
  int attempts = 0;
};

inline int default_packing_target(int k) { return k * k / 8; }

// Uniform symmetric binary matrix, diagonal included.
BinarySymMatrix random_binary_sym(int k, Rng& gen);

// Rejection sampling: draw uniform matrices, keep each one whose permuted
// Hamming distance to every kept member is >= target. Acceptance is decided
// in draw order. Throws ExhaustedAttemptsError (with the achieved size) if
// `count` members are not found within `max_attempts` draws.
PackingSet sample_packing_set(int k, int count, int target, int max_attempts, RngSeed rng,
                              const ExactOptions& options = {});

// q_matrix applied to every member.
std::vector<BlockMatrix> packing_to_graphons(const PackingSet& s, const HardInstanceParams& params);

// Guaranteed pairwise hathat2 between images of members at permuted Hamming
// distance >= target: 2 rho c eta sqrt(target) / k.
double packing_separation_bound(const HardInstanceParams& params, int target);

// exp(-2 (threshold - C(k,2)/2)^2 / C(k,2)) * (k!)^2. Values above 1 are
// vacuous; may overflow to +infinity for large k.
double chernoff_collision_bound(int k, int threshold);

nlohmann::json packing_to_json(const PackingSet& s);

}  // namespace graphon
