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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "graphon/matrix.hpp"

namespace graphon {

// Exact law of G_n(W) for tiny n, all KL values in nats.

inline constexpr int kMaxEnumerationNodes = 5;
inline constexpr uint64_t kMaxLabelAssignments = 1'000'000;

// Probability of every labeled graph on n nodes. Bit e of a graph mask is the
// e-th node pair in the order (0,1), (0,2), ..., (0,n-1), (1,2), ...
class GraphDistribution {
 public:
  GraphDistribution(int n, std::vector<double> probabilities);

  int n() const { return n_; }
  int pair_count() const { return n_ * (n_ - 1) / 2; }
  size_t size() const { return probs_.size(); }
  double probability(uint32_t mask) const { return probs_[mask]; }
  // -inf for graphs of probability zero.
  double log_prob(uint32_t mask) const;
  std::span<const double> probabilities() const { return probs_; }

  static std::pair<int, int> pair_of_slot(int n, int slot);

 private:
  int n_;
  std::vector<double> probs_;
};

// Mixture over all k^n label assignments of products of Bernoulli(H_ij).
// Assignments are processed in fixed chunks whose partial tables are summed
// in chunk order, so the result is bit-identical for any `threads`.
// Throws kTooLargeToEnumerate if n > 5 or k^n > 10^6.
GraphDistribution exact_graph_distribution(const BlockMatrix& w, int n, int threads = 1);

enum class DivergenceMode {
  kStrict,   // infinite divergence throws kInfiniteDivergence
  kLenient,  // infinite divergence returns +infinity
};

double kl_divergence(const GraphDistribution& p, const GraphDistribution& q,
                     DivergenceMode mode = DivergenceMode::kStrict);
double exact_kl(const BlockMatrix& w, const BlockMatrix& wp, int n,
                DivergenceMode mode = DivergenceMode::kStrict, int threads = 1);

// 8 n^2 ||W - W'||_2^2. Both matrices must take values in [1/2, 3/4]
// (kHypothesisViolated otherwise). Block counts may differ; both are refined
// to their least common multiple.
double kl_upper_bound(const BlockMatrix& w, const BlockMatrix& wp, int n);

struct KlDiameter {
  double raw = 0.0;         // 8 n^2 (2 c rho eta)^2
  double simplified = 0.0;  // 32 c^2 k^2 rho
};

// KL diameter bound for the hard-instance family. raw <= simplified always,
// with equality when eta < 1.
KlDiameter kl_diameter_qfamily(const HardInstanceParams& params);

struct FanoInput {
  double kl_diameter = 0.0;    // nats
  double packing_count = 2.0;  // may be non-integer (e.g. e^8)
  double epsilon = 1.0;
};

// 1 - (kl_diameter + 1) / ln(packing_count). May be negative.
double fano_bound(const FanoInput& input);

struct ContiguityReport {
  int n = 0;
  int k = 0;
  double rho = 0.0;
  double epsilon = 0.0;
  double q = 0.0;
  double p = 0.0;
  double d = 0.0;  // expected degree of the planted partition
  double lambda = 0.0;
  double lhs = 0.0;  // d lambda^2 (k-1) / 2
  double rhs = 0.0;  // ln(k-1)
  bool condition_holds = false;
  double separation = 0.0;  // epsilon / sqrt(k)
};

// Planted partition vs Erdos-Renyi parameters at which the two models are
// mutually contiguous:
//   eps = min(sqrt(rho k ln k / n), rho)
//   q   = (k-1)/(2 k^2) * n eps^2 / ln(k-1),  p = eps + q
//   d   = n (p + (k-1) q) / k,                lambda = n (p - q) / (d k)
//   condition: d lambda^2 (k-1) / 2 <= ln(k-1)
// Throws kDegenerateParameters for k < 3, p > 1 or d = 0.
ContiguityReport contiguity_report(int n, int k, double rho);

}  // namespace graphon
