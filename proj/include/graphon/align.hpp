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

#include "graphon/matrix.hpp"
#include "graphon/permutation.hpp"
#include "graphon/rng.hpp"

namespace graphon {

// Permutation-alignment distances between k x k matrices.
//
//   hat2(A, B)     = min_sigma       || A_{sigma,sigma} - B ||_2
//   hathat2(A, B)  = min_{sigma,tau} || A_{sigma,tau}   - B ||_2
//
// with the normalized norm of matrix.hpp. For equal-block step graphons
// hathat2(A, B) <= delta_2(W[A], W[B]) <= hat2(A, B).

struct AlignResult {
  double distance = 0.0;
  Permutation row_perm;
  Permutation col_perm;  // equals row_perm for joint alignments
  bool exact = false;
};

inline constexpr int kDefaultJointExactCap = 9;
inline constexpr int kDefaultSeparateExactCap = 9;

struct ExactOptions {
  int exact_cap = 0;  // 0 selects the metric's default cap
  // Worker threads for the exhaustive search. Work is split into fixed chunks
  // by the image of row 0 and reduced in chunk order, so the answer does not
  // depend on this value.
  int threads = 1;
  // Branch-and-bound pruning. Disabling it yields the plain exhaustive loop.
  bool prune = true;
};

// || A_{sigma,tau} - B ||_2.
double alignment_objective(const Matrix& a, const Matrix& b, const Permutation& sigma,
                           const Permutation& tau);

// Exhaustive over S_k; ties go to the lexicographically smallest sigma.
AlignResult delta_hat2_exact(const Matrix& a, const Matrix& b, const ExactOptions& options = {});

// Exhaustive over S_k x S_k. For each row permutation the best column
// permutation is a linear assignment problem; row permutations whose
// assignment optimum cannot beat the incumbent are skipped, and subtrees are
// cut with per-row sorted-matching bounds. Ties go to the lexicographically
// smallest (sigma, tau).
AlignResult delta_hathat2_exact(const Matrix& a, const Matrix& b, const ExactOptions& options = {});

// Alternating optimization: with tau fixed the best sigma is an assignment
// problem, and vice versa. Restart 0 starts at the identity, restart 1 at the
// pairing of rows/columns sorted by their sums, the rest at random. Stops when
// a sweep improves by less than 1e-12 or after 200 sweeps.
AlignResult delta_hathat2_heuristic(const Matrix& a, const Matrix& b, int restarts, RngSeed rng);

// Pairwise-swap local search over joint permutations, same restart schedule.
// An upper bound on hat2.
AlignResult delta_hat2_heuristic(const Matrix& a, const Matrix& b, int restarts, RngSeed rng);

// Minimum over (sigma, tau) of the number of differing entries among all k^2
// positions.
int permuted_hamming_min(const BinarySymMatrix& b1, const BinarySymMatrix& b2,
                         const ExactOptions& options = {});

// Certified upper bound on delta_2(W[A], W[B]): a joint permutation of the
// m-fold refinements of A and B. The search starts from the lifted optimal
// (or, beyond the exact cap, heuristic) hat2 alignment of A and B, so the
// result never exceeds hat2(A, B). The returned permutations act on k*m blocks.
AlignResult delta2_upper_via_blowup(const Matrix& a, const Matrix& b, int m, int restarts,
                                    RngSeed rng, const ExactOptions& options = {});

inline AlignResult delta_hat2_exact(const BlockMatrix& a, const BlockMatrix& b,
                                    const ExactOptions& options = {}) {
  return delta_hat2_exact(a.entries(), b.entries(), options);
}
inline AlignResult delta_hathat2_exact(const BlockMatrix& a, const BlockMatrix& b,
                                       const ExactOptions& options = {}) {
  return delta_hathat2_exact(a.entries(), b.entries(), options);
}
inline AlignResult delta_hathat2_heuristic(const BlockMatrix& a, const BlockMatrix& b, int restarts,
                                           RngSeed rng) {
  return delta_hathat2_heuristic(a.entries(), b.entries(), restarts, rng);
}
inline AlignResult delta2_upper_via_blowup(const BlockMatrix& a, const BlockMatrix& b, int m,
                                           int restarts, RngSeed rng,
                                           const ExactOptions& options = {}) {
  return delta2_upper_via_blowup(a.entries(), b.entries(), m, restarts, rng, options);
}

}  // namespace graphon
