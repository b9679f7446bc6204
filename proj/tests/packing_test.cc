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


#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "graphon/align.hpp"
#include "graphon/error.hpp"
#include "graphon/packing.hpp"
#include "test_support.hpp"

namespace graphon {
namespace {

using testing::brute_hamming;

void expect_recertifies(const PackingSet& s) {
  ASSERT_TRUE(s.certified_min_distance.has_value());
  EXPECT_GE(*s.certified_min_distance, s.target);
  int observed = s.k * s.k;
  for (size_t i = 0; i < s.members.size(); ++i)
    for (size_t j = i + 1; j < s.members.size(); ++j) {
      const int d = brute_hamming(s.members[i], s.members[j]);
      EXPECT_GE(d, s.target);
      observed = std::min(observed, d);
    }
  EXPECT_EQ(*s.certified_min_distance, observed);
}

TEST(Packing, TargetZeroAcceptsAnyDraws) {
  const auto s = sample_packing_set(5, 2, 0, 2, {1, 0});
  EXPECT_EQ(s.members.size(), 2u);
  EXPECT_EQ(s.attempts, 2);
}

TEST(Packing, SmallCertifiedSet) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const auto s = sample_packing_set(4, 4, 2, 1000, {seed, 0});
    EXPECT_EQ(s.members.size(), 4u);
    expect_recertifies(s);
  }
}

// Largest family of symmetric 2x2 binary matrices with pairwise permuted distance >= 3,
// found by enumerating all subsets of the eight matrices.
int max_family_k2(int target) {
  std::vector<BinarySymMatrix> all;
  for (int m = 0; m < 8; ++m)
    all.push_back(BinarySymMatrix::from_rows({{m & 1, (m >> 1) & 1}, {(m >> 1) & 1, (m >> 2) & 1}}));
  int best = 0;
  for (int subset = 1; subset < 256; ++subset) {
    bool ok = true;
    for (int i = 0; i < 8 && ok; ++i)
      for (int j = i + 1; j < 8 && ok; ++j)
        if ((subset >> i & 1) && (subset >> j & 1)) ok = brute_hamming(all[i], all[j]) >= target;
    if (ok) best = std::max(best, __builtin_popcount(subset));
  }
  return best;
}

TEST(Packing, ExhaustsAtK2) {
  const int ceiling = max_family_k2(3);
  EXPECT_LT(ceiling, 20);
  try {
    sample_packing_set(2, 20, 3, 500, {3, 0});
    ADD_FAILURE();
  } catch (const ExhaustedAttemptsError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kExhaustedAttempts);
    EXPECT_GE(e.achieved(), 1);
    EXPECT_LE(e.achieved(), ceiling);
  }
}

TEST(Packing, Deterministic) {
  const auto a = sample_packing_set(5, 4, 3, 500, {11, 2});
  const auto b = sample_packing_set(5, 4, 3, 500, {11, 2});
  EXPECT_EQ(packing_to_json(a).dump(), packing_to_json(b).dump());
}

TEST(Packing, UncertifiedAboveCap) {
  ExactOptions opts;
  opts.exact_cap = 3;
  const auto s = sample_packing_set(5, 3, 2, 500, {4, 0}, opts);
  EXPECT_FALSE(s.certified_min_distance.has_value());
  EXPECT_EQ(packing_to_json(s)["certified_min_distance"], "uncertified");
}

TEST(Packing, InvalidArguments) {
  EXPECT_THROW(sample_packing_set(3, 1, 0, 10, {}), Error);
  EXPECT_THROW(sample_packing_set(3, 2, 10, 10, {}), Error);
}

TEST(Packing, GraphonsSeparatedAndInRange) {
  const auto s = sample_packing_set(4, 4, 2, 1000, {7, 0});
  const HardInstanceParams params{16, 4, 1.0, 0.25, 1.0};
  const auto ws = packing_to_graphons(s, params);
  const double bound = packing_separation_bound(params, 2);
  EXPECT_NEAR(bound, 2 * 0.25 * std::sqrt(2.0) / 4, 1e-15);
  for (size_t i = 0; i < ws.size(); ++i) {
    EXPECT_GE(ws[i].entries().min_entry(), 0.0);
    EXPECT_LE(ws[i].entries().max_entry(), params.rho);
    for (size_t j = i + 1; j < ws.size(); ++j)
      EXPECT_GE(testing::brute_hathat2(ws[i].entries(), ws[j].entries()), bound - 1e-9);
  }
  EXPECT_THROW(packing_to_graphons(s, HardInstanceParams{16, 5, 1.0, 0.25, 1.0}), Error);
}

TEST(Packing, IdenticalMembersAndScaling) {
  PackingSet s;
  s.k = 3;
  const auto b = BinarySymMatrix::from_rows({{1, 0, 1}, {0, 1, 1}, {1, 1, 0}});
  const auto b2 = BinarySymMatrix::from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  s.members = {b, b};
  const auto same = packing_to_graphons(s, HardInstanceParams{9, 3, 0.8, 0.25, 1.0});
  EXPECT_EQ(delta_hathat2_exact(same[0], same[1]).distance, 0.0);

  s.members = {b, b2};
  const auto full = packing_to_graphons(s, HardInstanceParams{9, 3, 0.8, 0.25, 1.0});
  const auto half = packing_to_graphons(s, HardInstanceParams{9, 3, 0.4, 0.25, 1.0});
  EXPECT_NEAR(delta_hathat2_exact(half[0], half[1]).distance, 0.5 * delta_hathat2_exact(full[0], full[1]).distance,
              1e-15);
}

TEST(Chernoff, Substitution) {
  EXPECT_NEAR(chernoff_collision_bound(4, 3), 576.0, 1e-9);
  double prev = chernoff_collision_bound(8, 14);
  for (int t = 13; t >= 0; --t) {
    const double v = chernoff_collision_bound(8, t);
    EXPECT_LT(v, prev);
    prev = v;
  }
  EXPECT_THROW(chernoff_collision_bound(4, 7), Error);
  EXPECT_THROW(chernoff_collision_bound(1, 0), Error);
}

// At k <= 8 the union over (k!)^2 alignments swamps the exponential factor.
TEST(Chernoff, VacuousAtSmallK) {
  for (int k = 2; k <= 8; ++k)
    for (int t = 0; 2 * t <= k * (k - 1) / 2; ++t) EXPECT_GE(chernoff_collision_bound(k, t), 1.0);
}

}  // namespace
}  // namespace graphon
