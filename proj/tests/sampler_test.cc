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

#include "graphon/error.hpp"
#include "graphon/sampler.hpp"
#include "test_support.hpp"

namespace graphon {
namespace {

using testing::within_sigma;

TEST(SampleLabels, SingleBlockAndDeterminism) {
  for (int l : sample_labels(50, 1, {1, 2})) EXPECT_EQ(l, 0);
  EXPECT_EQ(sample_labels(1000, 7, {9, 4}), sample_labels(1000, 7, {9, 4}));
  EXPECT_NE(sample_labels(1000, 7, {9, 4}), sample_labels(1000, 7, {9, 5}));
}

TEST(SampleLabels, FrequenciesWithinBinomialBand) {
  const int n = 100000;
  const auto labels = sample_labels(n, 4, {2026, 0});
  std::vector<int> counts(4);
  for (int l : labels) {
    ASSERT_GE(l, 0);
    ASSERT_LT(l, 4);
    ++counts[l];
  }
  for (int c : counts) EXPECT_TRUE(within_sigma(c, n, 0.25, 3.0)) << c;
}

TEST(SampleGraph, ConstantGraphons) {
  const auto zero = make_block_matrix({{0.0, 0.0}, {0.0, 0.0}}, 1.0);
  EXPECT_EQ(sample_graph(zero, 40, {1, 0}, false).edge_count(), 0u);
  const auto one = make_block_matrix({{1.0}}, 1.0);
  for (auto path : {SamplingPath::kDense, SamplingPath::kSparse}) {
    const auto g = sample_graph(one, 30, {1, 0}, false, path);
    EXPECT_EQ(g.edge_count(), 30u * 29u / 2u);
    EXPECT_EQ(empirical_edge_density(g), 1.0);
  }
}

TEST(SampleGraph, EdgeCountBinomial) {
  const auto w = make_block_matrix({{0.3}}, 1.0);
  const int n = 2000;
  const double pairs = n * (n - 1) / 2.0;
  const auto g = sample_graph(w, n, {77, 0}, false);
  EXPECT_TRUE(within_sigma(static_cast<double>(g.edge_count()), pairs, 0.3, 4.0)) << g.edge_count();
}

TEST(SampleGraph, LatentsMatchGraphon) {
  std::mt19937_64 gen(1);
  const auto w = testing::random_block(3, gen);
  const auto g = sample_graph(w, 25, {5, 5}, true);
  ASSERT_TRUE(g.latents().has_value());
  const auto& lat = *g.latents();
  for (int i = 0; i < 25; ++i)
    for (int j = 0; j < 25; ++j) {
      if (i == j) continue;
      EXPECT_EQ(g.probability(i, j), w(lat.labels[i], lat.labels[j]));
    }
  EXPECT_EQ(lat.labels, sample_labels(25, 3, RngSeed{5, 5}.child(0)));
  EXPECT_FALSE(sample_graph(w, 25, {5, 5}, false).latents().has_value());
}

TEST(SampleGraph, EdgesSortedNoLoopsNoDuplicates) {
  const auto w = make_block_matrix({{0.5, 0.01}, {0.01, 0.02}}, 1.0);
  for (auto path : {SamplingPath::kDense, SamplingPath::kSparse}) {
    const auto g = sample_graph(w, 300, {3, 1}, false, path);
    for (size_t e = 0; e < g.edge_count(); ++e) {
      EXPECT_LT(g.edges()[e].u, g.edges()[e].v);
      if (e > 0) EXPECT_LT(g.edges()[e - 1], g.edges()[e]);
    }
  }
  EXPECT_THROW(SampledGraph(3, {{1, 1}}), Error);
  EXPECT_THROW(SampledGraph(3, {{0, 1}, {1, 0}}), Error);
}

// Given labels, the indicators of edges {0,1} and {0,2} are independent.
TEST(SampleGraph, ConditionalIndependenceChiSquare) {
  const auto w = make_block_matrix({{0.4}}, 1.0);
  int passes = 0;
  for (int run = 0; run < 10; ++run) {
    double table[2][2] = {{0, 0}, {0, 0}};
    const int reps = 4000;
    for (int r = 0; r < reps; ++r) {
      const auto g = sample_graph(w, 3, RngSeed{static_cast<uint64_t>(run), static_cast<uint64_t>(r)}, false);
      const auto look = g.lookup();
      table[look.contains(0, 1)][look.contains(0, 2)] += 1;
    }
    double chi = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const double row = table[a][0] + table[a][1];
        const double col = table[0][b] + table[1][b];
        const double expected = row * col / reps;
        chi += (table[a][b] - expected) * (table[a][b] - expected) / expected;
      }
    const double p_value = std::erfc(std::sqrt(chi / 2.0));
    passes += p_value > 1e-4;
  }
  EXPECT_GE(passes, 6);
}

TEST(SampleGraph, SparseRegimeDensity) {
  const int n = 64, k = 4;
  const double rho = static_cast<double>(k * k) / (n * n);
  std::mt19937_64 gen(8);
  const auto w = make_block_matrix(testing::random_sym_rows(k, gen, 0.0, rho), rho);
  double total = 0.0;
  for (int t = 0; t < 100; ++t) total += empirical_edge_density(sample_graph(w, n, {12, static_cast<uint64_t>(t)}, false));
  const double ratio = total / 100 / w.entries().mean_entry();
  EXPECT_GT(ratio, 0.5);
  EXPECT_LT(ratio, 1.5);
}

TEST(SampleGraph, DenseAndSparsePathsAgreeInMoments) {
  const auto w = make_block_matrix({{0.02, 0.01}, {0.01, 0.03}}, 0.03);
  const int n = 400, trials = 200;
  auto moments = [&](SamplingPath path) {
    double s = 0, s2 = 0;
    for (int t = 0; t < trials; ++t) {
      const double m = static_cast<double>(sample_graph(w, n, {99, static_cast<uint64_t>(t)}, false, path).edge_count());
      s += m;
      s2 += m * m;
    }
    const double mean = s / trials;
    return std::pair{mean, s2 / trials - mean * mean};
  };
  const auto [md, vd] = moments(SamplingPath::kDense);
  const auto [ms, vs] = moments(SamplingPath::kSparse);
  const double se = std::sqrt((vd + vs) / trials);
  EXPECT_LT(std::abs(md - ms), 3.0 * se);
  EXPECT_LT(std::abs(vd / vs - 1.0), 0.5);
}

TEST(EdgeDensity, Examples) {
  EXPECT_EQ(empirical_edge_density(SampledGraph(5, {})), 0.0);
  EXPECT_EQ(empirical_edge_density(SampledGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})), 1.0);
  EXPECT_DOUBLE_EQ(empirical_edge_density(SampledGraph(3, {{0, 2}})), 1.0 / 3.0);
  try {
    empirical_edge_density(SampledGraph(1, {}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooFewNodes);
  }
}

TEST(GraphText, RoundTripOneBased) {
  const SampledGraph g(4, {{2, 3}, {0, 1}});
  const auto text = graph_to_text(g);
  EXPECT_EQ(text, "4 2\n1 2\n3 4\n");
  const auto back = graph_from_text(text);
  EXPECT_EQ(back.n(), 4);
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_THROW(graph_from_text("3 1\n1 1\n"), Error);
  EXPECT_THROW(graph_from_text("3 2\n1 2\n"), Error);
}

TEST(GraphText, SidecarCarriesLabelsAndSeed) {
  const auto w = make_block_matrix({{0.5, 0.1}, {0.1, 0.5}}, 1.0);
  const RngSeed seed{42, 3};
  const auto g = sample_graph(w, 10, seed, true);
  const auto j = graph_sidecar(g, seed);
  EXPECT_EQ(j["seed"], 42u);
  EXPECT_EQ(j["stream"], 3u);
  ASSERT_EQ(j["labels"].size(), 10u);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(j["labels"][i].get<int>(), g.latents()->labels[i] + 1);
}

}  // namespace
}  // namespace graphon
