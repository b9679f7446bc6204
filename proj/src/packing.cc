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

#include "graphon/packing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphon/error.hpp"

namespace graphon {

BinarySymMatrix random_binary_sym(int k, Rng& gen) {
  std::vector<std::vector<int>> rows(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) rows[i][j] = rows[j][i] = static_cast<int>(gen.next() >> 63);
  return BinarySymMatrix::from_rows(rows);
}

namespace {

int heuristic_hamming(const BinarySymMatrix& x, const BinarySymMatrix& y, RngSeed rng) {
  const AlignResult r = delta_hathat2_heuristic(x.to_matrix(), y.to_matrix(), 8, rng);
  const double k = x.k();
  return static_cast<int>(std::lround(r.distance * r.distance * k * k));
}

}  // namespace

PackingSet sample_packing_set(int k, int count, int target, int max_attempts, RngSeed rng,
                              const ExactOptions& options) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  if (count < 2) throw Error(ErrorCode::kInvalidArgument, "count must be >= 2");
  if (target < 0 || target > k * k) throw Error(ErrorCode::kInvalidArgument, "target must lie in [0, k^2]");
  const int cap = options.exact_cap > 0 ? options.exact_cap : kDefaultSeparateExactCap;
  const bool exact = k <= cap;

  PackingSet out;
  out.k = k;
  out.target = target;
  Rng gen(rng.child(0));
  int min_distance = k * k;
  while (static_cast<int>(out.members.size()) < count) {
    if (out.attempts >= max_attempts) {
      throw ExhaustedAttemptsError("reached " + std::to_string(out.members.size()) + " of " +
                                       std::to_string(count) + " members after " +
                                       std::to_string(out.attempts) + " attempts",
                                   static_cast<int>(out.members.size()));
    }
    const BinarySymMatrix candidate = random_binary_sym(k, gen);
    const int draw = out.attempts++;
    int closest = k * k;
    bool ok = true;
    for (size_t m = 0; m < out.members.size() && ok; ++m) {
      const int d = exact ? permuted_hamming_min(candidate, out.members[m], options)
                          : heuristic_hamming(candidate, out.members[m],
                                              rng.child(1).child(static_cast<uint64_t>(draw)).child(m));
      closest = std::min(closest, d);
      ok = d >= target;
    }
    if (!ok) continue;
    out.members.push_back(candidate);
    if (out.members.size() > 1) min_distance = std::min(min_distance, closest);
  }
  if (exact) out.certified_min_distance = min_distance;
  return out;
}

std::vector<BlockMatrix> packing_to_graphons(const PackingSet& s, const HardInstanceParams& params) {
  if (params.k != s.k) throw Error(ErrorCode::kDimensionMismatch, "params.k != packing k");
  std::vector<BlockMatrix> out;
  out.reserve(s.members.size());
  for (const auto& b : s.members) out.push_back(q_matrix(b, params));
  return out;
}

double packing_separation_bound(const HardInstanceParams& params, int target) {
  return 2.0 * params.rho * params.c * params.eta * std::sqrt(static_cast<double>(target)) /
         static_cast<double>(params.k);
}

double chernoff_collision_bound(int k, int threshold) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "k must be >= 2");
  const double trials = 0.5 * k * (k - 1);
  if (threshold > trials) throw Error(ErrorCode::kInvalidArgument, "threshold exceeds C(k,2)");
  const double gap = threshold - 0.5 * trials;
  const double log_perms = 2.0 * std::lgamma(static_cast<double>(k) + 1.0);
  return std::exp(-2.0 * gap * gap / trials + log_perms);
}

nlohmann::json packing_to_json(const PackingSet& s) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& b : s.members) members.push_back(b.to_bitstring());
  nlohmann::json j = {{"k", s.k}, {"target", s.target}, {"count", s.members.size()},
                      {"attempts", s.attempts}, {"members", members}};
  if (s.certified_min_distance) {
    j["certified"] = true;
    j["certified_min_distance"] = *s.certified_min_distance;
  } else {
    j["certified"] = false;
    j["certified_min_distance"] = "uncertified";
  }
  return j;
}

}  // namespace graphon
