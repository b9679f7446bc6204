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
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "graphon/error.hpp"
#include "graphon/info.hpp"
#include "graphon/sampler.hpp"
#include "test_support.hpp"

namespace graphon {
namespace {

using testing::bernoulli_kl;

BlockMatrix constant(double v) { return make_block_matrix({{v}}, 1.0); }

BlockMatrix random_in_band(int k, std::mt19937_64& gen) {
  return make_block_matrix(testing::random_sym_rows(k, gen, 0.5, 0.75), 1.0);
}

template <typename F>
void expect_code(ErrorCode code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << ErrorCodeName(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(GraphDistribution, SmallCases) {
  const auto one = exact_graph_distribution(constant(0.4), 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_DOUBLE_EQ(one.probability(0), 1.0);

  const auto two = exact_graph_distribution(constant(0.3), 2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_DOUBLE_EQ(two.probability(0), 0.7);
  EXPECT_DOUBLE_EQ(two.probability(1), 0.3);
}

TEST(GraphDistribution, SumsToOne) {
  std::mt19937_64 gen(31);
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= 3; ++k) {
      const auto d = exact_graph_distribution(testing::random_block(k, gen), n);
      const auto probs = d.probabilities();
      EXPECT_NEAR(std::accumulate(probs.begin(), probs.end(), 0.0), 1.0, 1e-9);
    }
}

TEST(GraphDistribution, MatchesMonteCarlo) {
  std::mt19937_64 gen(32);
  const auto w = testing::random_block(2, gen);
  const int n = 3;
  const auto d = exact_graph_distribution(w, n);
  std::vector<double> counts(d.size());
  const int reps = 20000;
  for (int r = 0; r < reps; ++r) {
    const auto g = sample_graph(w, n, {5, static_cast<uint64_t>(r)}, false);
    const auto look = g.lookup();
    uint32_t mask = 0;
    for (int s = 0; s < d.pair_count(); ++s) {
      const auto [i, j] = GraphDistribution::pair_of_slot(n, s);
      if (look.contains(i, j)) mask |= 1u << s;
    }
    counts[mask] += 1;
  }
  for (uint32_t m = 0; m < d.size(); ++m)
    EXPECT_TRUE(testing::within_sigma(counts[m], reps, d.probability(m), 4.0)) << m;
}

TEST(GraphDistribution, MixtureCollapses) {
  for (int k = 2; k <= 4; ++k) {
    const auto a = exact_graph_distribution(planted_partition(k, 0.35, 0.35), 4);
    const auto b = exact_graph_distribution(constant(0.35), 4);
    for (uint32_t m = 0; m < a.size(); ++m) EXPECT_NEAR(a.probability(m), b.probability(m), 1e-10);
  }
}

TEST(GraphDistribution, EnumerationGuard) {
  expect_code(ErrorCode::kTooLargeToEnumerate, [] { exact_graph_distribution(constant(0.5), 6); });
  const auto big = make_block_matrix(std::vector<std::vector<double>>(20, std::vector<double>(20, 0.1)), 1.0);
  expect_code(ErrorCode::kTooLargeToEnumerate, [&] { exact_graph_distribution(big, 5); });
}

TEST(GraphDistribution, ThreadedTableIsBitIdentical) {
  std::mt19937_64 gen(33);
  const auto w = testing::random_block(3, gen);
  const auto a = exact_graph_distribution(w, 5, 1);
  const auto b = exact_graph_distribution(w, 5, 3);
  for (uint32_t m = 0; m < a.size(); ++m) ASSERT_EQ(a.probability(m), b.probability(m));
}

TEST(ExactKl, ClosedFormBernoulli) {
  EXPECT_NEAR(exact_kl(constant(0.5), constant(0.75), 2), bernoulli_kl(0.5, 0.75), 1e-12);
  EXPECT_NEAR(exact_kl(constant(0.5), constant(0.75), 2), 0.143841036225890, 1e-9);
  // With one block the edges are independent, so KL adds over pairs.
  EXPECT_NEAR(exact_kl(constant(0.5), constant(0.75), 4), 6 * bernoulli_kl(0.5, 0.75), 1e-10);
}

TEST(ExactKl, IdentityAndNonnegativity) {
  std::mt19937_64 gen(34);
  for (int t = 0; t < 30; ++t) {
    const auto w = testing::random_block(1 + t % 3, gen, 0.05, 0.95);
    const auto wp = testing::random_block(1 + t % 3, gen, 0.05, 0.95);
    EXPECT_NEAR(exact_kl(w, w, 3), 0.0, 1e-10);
    EXPECT_GE(exact_kl(w, wp, 3), 0.0);
  }
}

TEST(ExactKl, InfiniteDivergenceModes) {
  expect_code(ErrorCode::kInfiniteDivergence, [] { exact_kl(constant(0.5), constant(0.0), 2); });
  EXPECT_TRUE(std::isinf(exact_kl(constant(0.5), constant(0.0), 2, DivergenceMode::kLenient)));
  EXPECT_TRUE(std::isfinite(exact_kl(constant(0.0), constant(0.5), 2)));
}

TEST(KlBound, Examples) {
  std::mt19937_64 gen(35);
  const auto w = random_in_band(3, gen);
  EXPECT_EQ(kl_upper_bound(w, w, 4), 0.0);
  EXPECT_DOUBLE_EQ(kl_upper_bound(constant(0.5), constant(0.6), 2), 0.32);
  EXPECT_DOUBLE_EQ(kl_upper_bound(constant(0.5), constant(0.75), 2), 2.0);
  EXPECT_LE(exact_kl(constant(0.5), constant(0.75), 2), 2.0);
  expect_code(ErrorCode::kHypothesisViolated, [] { kl_upper_bound(constant(0.4), constant(0.6), 2); });
}

TEST(KlBound, DominatesExactKl) {
  std::mt19937_64 gen(36);
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + t % 3;
    const int k = 1 + (t / 3) % 3;
    const auto w = random_in_band(k, gen);
    const auto wp = random_in_band(k, gen);
    EXPECT_LE(exact_kl(w, wp, n), kl_upper_bound(w, wp, n));
  }
}

TEST(KlBound, DifferentBlockCountsUseCommonRefinement) {
  const auto w = make_block_matrix({{0.5, 0.7}, {0.7, 0.5}}, 1.0);
  const auto wp = constant(0.6);
  EXPECT_NEAR(kl_upper_bound(w, wp, 3), 8 * 9 * 0.01, 1e-12);
}

TEST(KlDiameter, Examples) {
  EXPECT_EQ(kl_diameter_qfamily(HardInstanceParams{100, 10, 0.04, 0.0, 0.5}).raw, 0.0);
  const auto p = HardInstanceParams::derive(100, 10, 0.04, 0.1);
  EXPECT_NEAR(kl_diameter_qfamily(p).raw, 1.28, 1e-12);
  EXPECT_NEAR(kl_diameter_qfamily(p).simplified, 32 * 0.01 * 100 * 0.04, 1e-12);
  std::mt19937_64 gen(37);
  for (int t = 0; t < 200; ++t) {
    const int n = 4 + static_cast<int>(gen() % 500);
    const int k = 2 + static_cast<int>(gen() % n);
    const double rho = std::uniform_real_distribution<double>(1e-4, 1.0)(gen);
    const auto q = HardInstanceParams::derive(n, k, rho, 0.25);
    const auto d = kl_diameter_qfamily(q);
    EXPECT_LE(d.raw, d.simplified * (1 + 1e-12));
    if (q.eta == 1.0) EXPECT_NEAR(d.raw, 32 * 0.0625 * rho * rho * n * n, 1e-9 * d.raw);
  }
}

TEST(Fano, Examples) {
  EXPECT_NEAR(fano_bound({0.0, std::exp(1.0), 1.0}), 0.0, 1e-15);
  EXPECT_NEAR(fano_bound({0.0, 2.0, 1.0}), 1.0 - 1.0 / std::log(2.0), 1e-15);
  EXPECT_NEAR(fano_bound({3.0, std::exp(8.0), 1.0}), 0.5, 1e-15);
  expect_code(ErrorCode::kPackingTooSmall, [] { fano_bound({0.0, 1.5, 1.0}); });
}

TEST(Fano, Monotonicity) {
  for (double kl = 0.0; kl < 5.0; kl += 0.5) {
    EXPECT_GT(fano_bound({kl, 100.0, 1.0}), fano_bound({kl + 0.5, 100.0, 1.0}));
    EXPECT_LT(fano_bound({kl, 100.0, 1.0}), fano_bound({kl, 200.0, 1.0}));
  }
}

// Independent transcription of the five contiguity formulas.
struct Reference {
  double eps, q, p, d, lambda;
  bool holds;
};
Reference reference_contiguity(double n, double k, double rho) {
  Reference r{};
  r.eps = std::min(std::sqrt(rho * k * std::log(k) / n), rho);
  r.q = (k - 1) / (2 * k * k) * n * r.eps * r.eps / std::log(k - 1);
  r.p = r.q + r.eps;
  r.d = n / k * r.p + n * (k - 1) / k * r.q;
  r.lambda = n * (r.p - r.q) / (r.d * k);
  r.holds = r.d * r.lambda * r.lambda * (k - 1) / 2 <= std::log(k - 1);
  return r;
}

TEST(Contiguity, MatchesReference) {
  for (auto [n, k, rho] : {std::tuple{10000, 4, 0.01}, {1000, 3, 0.5}, {500, 8, 0.02}, {64, 5, 1.0}}) {
    const auto r = contiguity_report(n, k, rho);
    const auto ref = reference_contiguity(n, k, rho);
    EXPECT_NEAR(r.epsilon, ref.eps, 1e-15);
    EXPECT_NEAR(r.q, ref.q, 1e-14);
    EXPECT_NEAR(r.p, ref.p, 1e-14);
    EXPECT_NEAR(r.d, ref.d, 1e-10 * ref.d);
    EXPECT_NEAR(r.lambda, ref.lambda, 1e-12);
    EXPECT_EQ(r.condition_holds, ref.holds);
    EXPECT_NEAR(r.p - r.q, r.epsilon, 1e-15);
    EXPECT_NEAR(r.separation, r.epsilon / std::sqrt(static_cast<double>(k)), 1e-15);
  }
}

TEST(Contiguity, Guards) {
  expect_code(ErrorCode::kDegenerateParameters, [] { contiguity_report(100, 2, 0.5); });
  // With n close to k ln k the gap epsilon nears 1 and p exceeds 1.
  expect_code(ErrorCode::kDegenerateParameters, [] { contiguity_report(4, 3, 1.0); });
}

}  // namespace
}  // namespace graphon
