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

#include "graphon/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "graphon/error.hpp"

namespace graphon {

Permutation Permutation::identity(int k) {
  std::vector<int> map(k);
  std::iota(map.begin(), map.end(), 0);
  return Permutation(std::move(map));
}

Permutation Permutation::from_map(std::vector<int> map) {
  std::vector<char> seen(map.size(), 0);
  for (int v : map) {
    if (v < 0 || v >= static_cast<int>(map.size()) || seen[v])
      throw Error(ErrorCode::kInvalidArgument, "not a permutation");
    seen[v] = 1;
  }
  return Permutation(std::move(map));
}

Permutation Permutation::from_one_based(const std::vector<int>& map) {
  std::vector<int> zero(map);
  for (int& v : zero) --v;
  return from_map(std::move(zero));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(map_);
  for (int& v : out) ++v;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (int i = 0; i < k(); ++i) inv[map_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.k() != k()) throw Error(ErrorCode::kDimensionMismatch, "permutation sizes differ");
  std::vector<int> out(map_.size());
  for (int i = 0; i < k(); ++i) out[i] = map_[other.map_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::lift(int m) const {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "lift factor must be >= 1");
  std::vector<int> out(static_cast<size_t>(k()) * m);
  for (int i = 0; i < k(); ++i)
    for (int r = 0; r < m; ++r) out[static_cast<size_t>(i) * m + r] = map_[i] * m + r;
  return Permutation(std::move(out));
}

Matrix apply_perms(const Matrix& a, const Permutation& sigma, const Permutation& tau) {
  if (sigma.k() != a.k() || tau.k() != a.k())
    throw Error(ErrorCode::kDimensionMismatch, "permutation size != matrix size");
  Matrix out(a.k());
  for (int i = 0; i < a.k(); ++i)
    for (int j = 0; j < a.k(); ++j) out(i, j) = a(sigma(i), tau(j));
  return out;
}

Matrix apply_perms(const BlockMatrix& a, const Permutation& sigma, const Permutation& tau) {
  return apply_perms(a.entries(), sigma, tau);
}

Matrix permutation_matrix(const Permutation& sigma) {
  Matrix p(sigma.k());
  for (int i = 0; i < sigma.k(); ++i) p(i, sigma(i)) = 1.0;
  return p;
}

std::vector<Permutation> all_permutations(int k) {
  std::vector<Permutation> out;
  std::vector<int> map(k);
  std::iota(map.begin(), map.end(), 0);
  do {
    out.push_back(Permutation::from_map(map));
  } while (std::next_permutation(map.begin(), map.end()));
  return out;
}

}  // namespace graphon
