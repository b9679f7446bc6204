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

#include <compare>
#include <vector>

#include "graphon/matrix.hpp"

namespace graphon {

// Bijection on {0..k-1}; map()[i] is the image of i. External formats
// (CLI JSON, files) use 1-based images via one_based().
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int k);
  // Throws kInvalidArgument unless `map` is a bijection on {0..size-1}.
  static Permutation from_map(std::vector<int> map);
  static Permutation from_one_based(const std::vector<int>& map);

  int k() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[i]; }
  const std::vector<int>& map() const { return map_; }
  std::vector<int> one_based() const;

  Permutation inverse() const;
  // (this o other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  // Block i of size m goes to block sigma(i), keeping its internal order.
  Permutation lift(int m) const;

  // Lexicographic on the image sequence.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> map) : map_(std::move(map)) {}
  std::vector<int> map_;
};

// (A_{sigma,tau})_{ij} = A_{sigma(i), tau(j)}.
Matrix apply_perms(const Matrix& a, const Permutation& sigma, const Permutation& tau);
Matrix apply_perms(const BlockMatrix& a, const Permutation& sigma, const Permutation& tau);

// P with P[i][sigma(i)] = 1.
Matrix permutation_matrix(const Permutation& sigma);

// All k! permutations in lexicographic order. Test and oracle helper.
std::vector<Permutation> all_permutations(int k);

}  // namespace graphon
