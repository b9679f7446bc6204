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
#include "graphon/permutation.hpp"
#include "json.hpp"

namespace graphon {

inline constexpr double kStochasticTolerance = 1e-9;
inline constexpr double kPeelZero = 1e-12;

// Nonnegative k x k matrix with unit row and column sums (to 1e-9). Entries
// in [-1e-12, 0) are clamped to zero on construction.
class DoublyStochastic {
 public:
  static DoublyStochastic make(const Matrix& p);

  int k() const { return p_.k(); }
  const Matrix& matrix() const { return p_; }
  double operator()(int i, int j) const { return p_(i, j); }

 private:
  explicit DoublyStochastic(Matrix p) : p_(std::move(p)) {}
  Matrix p_;
};

struct BirkhoffTerm {
  double weight = 0.0;
  Permutation perm;
};

struct BirkhoffDecomposition {
  std::vector<BirkhoffTerm> terms;

  // sum of weight * permutation_matrix(perm).
  Matrix reconstruct(int k) const;
  double total_weight() const;
};

// sum_t weight_t * permutation_matrix(perm_t), validated as doubly stochastic.
DoublyStochastic convex_combination(const std::vector<BirkhoffTerm>& terms);

// Greedy peeling: repeatedly take the first perfect matching (augmenting
// paths, ascending indices) on the entries above 1e-12 and subtract its
// minimum entry. At most (k-1)^2 + 1 terms. Residual mass below k * 1e-10 is
// added to the last weight; a larger residual with no matching left throws
// kNumericalBreakdown.
BirkhoffDecomposition birkhoff_decompose(const DoublyStochastic& p);

// With p = P / k:
//   sum_{i,i',j,j'} p_{ii'} p_{jj'} (A_{i'j'} - B_{ij})^2,
// which is E ||A_{sigma,tau} - B||_2^2 for sigma, tau drawn independently
// from any Birkhoff decomposition of P. Equals ||A_{sigma,sigma} - B||_2^2
// when P is the permutation matrix of sigma.
double coupling_distance_sq(const Matrix& a, const Matrix& b, const DoublyStochastic& p);

// min over pairs of decomposition terms (sigma, tau) of ||A_{sigma,tau} - B||_2.
double coupling_min_lower(const Matrix& a, const Matrix& b, const DoublyStochastic& p);

// [{"weight": w, "perm": [1-based images]}, ...]
nlohmann::json decomposition_to_json(const BirkhoffDecomposition& d);

}  // namespace graphon
