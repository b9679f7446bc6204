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

#include "graphon/info.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>
#include <string>

#include "graphon/error.hpp"

namespace graphon {

GraphDistribution::GraphDistribution(int n, std::vector<double> probabilities)
    : n_(n), probs_(std::move(probabilities)) {
  if (probs_.size() != (size_t{1} << pair_count()))
    throw Error(ErrorCode::kDimensionMismatch, "table size is not 2^C(n,2)");
}

double GraphDistribution::log_prob(uint32_t mask) const {
  const double p = probs_[mask];
  return p > 0.0 ? std::log(p) : -std::numeric_limits<double>::infinity();
}

std::pair<int, int> GraphDistribution::pair_of_slot(int n, int slot) {
  for (int i = 0; i < n; ++i) {
    const int row = n - 1 - i;
    if (slot < row) return {i, i + 1 + slot};
    slot -= row;
  }
  throw Error(ErrorCode::kOutOfRange, "slot beyond C(n,2)");
}

namespace {

constexpr uint64_t kChunkAssignments = 4096;

// Adds the product-Bernoulli table of every assignment in [begin, end) to acc.
void accumulate_assignments(const BlockMatrix& w, int n, uint64_t begin, uint64_t end,
                            std::vector<double>& acc) {
  const int k = w.k();
  const int pairs = n * (n - 1) / 2;
  std::vector<int> labels(n);
  std::vector<double> h(pairs);
  std::vector<double> table(acc.size());
  for (uint64_t code = begin; code < end; ++code) {
    uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      labels[i] = static_cast<int>(c % static_cast<uint64_t>(k));
      c /= static_cast<uint64_t>(k);
    }
    int slot = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) h[slot++] = w(labels[i], labels[j]);
    table[0] = 1.0;
    for (int e = 0; e < pairs; ++e) {
      const size_t half = size_t{1} << e;
      for (size_t mask = 0; mask < half; ++mask) {
        table[mask | half] = table[mask] * h[e];
        table[mask] *= 1.0 - h[e];
      }
    }
    for (size_t mask = 0; mask < acc.size(); ++mask) acc[mask] += table[mask];
  }
}

}  // namespace

GraphDistribution exact_graph_distribution(const BlockMatrix& w, int n, int threads) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  if (n > kMaxEnumerationNodes)
    throw Error(ErrorCode::kTooLargeToEnumerate, "n = " + std::to_string(n) + " > 5");
  uint64_t assignments = 1;
  for (int i = 0; i < n; ++i) {
    assignments *= static_cast<uint64_t>(w.k());
    if (assignments > kMaxLabelAssignments)
      throw Error(ErrorCode::kTooLargeToEnumerate, "k^n exceeds 10^6");
  }
  const size_t graphs = size_t{1} << (n * (n - 1) / 2);
  const uint64_t chunks = (assignments + kChunkAssignments - 1) / kChunkAssignments;

  std::vector<std::vector<double>> partial(chunks, std::vector<double>(graphs, 0.0));
  auto run = [&](uint64_t c) {
    const uint64_t begin = c * kChunkAssignments;
    const uint64_t end = std::min(assignments, begin + kChunkAssignments);
    accumulate_assignments(w, n, begin, end, partial[c]);
  };
  const uint64_t workers = std::clamp<uint64_t>(static_cast<uint64_t>(std::max(threads, 1)), 1, chunks);
  if (workers == 1) {
    for (uint64_t c = 0; c < chunks; ++c) run(c);
  } else {
    std::vector<std::future<void>> jobs;
    for (uint64_t t = 0; t < workers; ++t)
      jobs.push_back(std::async(std::launch::async, [&, t] {
        for (uint64_t c = t; c < chunks; c += workers) run(c);
      }));
    for (auto& j : jobs) j.get();
  }

  // Pairwise tree reduction in fixed chunk order.
  for (uint64_t stride = 1; stride < chunks; stride *= 2)
    for (uint64_t c = 0; c + stride < chunks; c += 2 * stride)
      for (size_t m = 0; m < graphs; ++m) partial[c][m] += partial[c + stride][m];

  std::vector<double> probs = std::move(partial[0]);
  const double scale = 1.0 / static_cast<double>(assignments);
  for (double& p : probs) p *= scale;
  return GraphDistribution(n, std::move(probs));
}

double kl_divergence(const GraphDistribution& p, const GraphDistribution& q, DivergenceMode mode) {
  if (p.n() != q.n()) throw Error(ErrorCode::kDimensionMismatch, "distributions over different n");
  double total = 0.0;
  for (uint32_t m = 0; m < p.size(); ++m) {
    const double pm = p.probability(m);
    if (pm <= 0.0) continue;
    const double qm = q.probability(m);
    if (qm <= 0.0) {
      if (mode == DivergenceMode::kLenient) return std::numeric_limits<double>::infinity();
      throw Error(ErrorCode::kInfiniteDivergence,
                  "graph mask " + std::to_string(m) + " has positive mass only under the first law");
    }
    total += pm * (std::log(pm) - std::log(qm));
  }
  return std::max(0.0, total);
}

double exact_kl(const BlockMatrix& w, const BlockMatrix& wp, int n, DivergenceMode mode, int threads) {
  return kl_divergence(exact_graph_distribution(w, n, threads),
                       exact_graph_distribution(wp, n, threads), mode);
}

double kl_upper_bound(const BlockMatrix& w, const BlockMatrix& wp, int n) {
  for (const BlockMatrix* m : {&w, &wp}) {
    if (m->entries().min_entry() < 0.5 || m->entries().max_entry() > 0.75)
      throw Error(ErrorCode::kHypothesisViolated, "entries must lie in [1/2, 3/4]");
  }
  const int l = std::lcm(w.k(), wp.k());
  const double dist = normalized_l2_distance(blow_up(w.entries(), l / w.k()),
                                             blow_up(wp.entries(), l / wp.k()));
  const double nn = static_cast<double>(n);
  return 8.0 * nn * nn * dist * dist;
}

KlDiameter kl_diameter_qfamily(const HardInstanceParams& params) {
  const double n = params.n;
  const double k = params.k;
  const double gap = 2.0 * params.c * params.rho * params.eta;
  return {8.0 * n * n * gap * gap, 32.0 * params.c * params.c * k * k * params.rho};
}

double fano_bound(const FanoInput& input) {
  if (!(input.packing_count >= 2.0))
    throw Error(ErrorCode::kPackingTooSmall, "packing count must be >= 2");
  return 1.0 - (input.kl_diameter + 1.0) / std::log(input.packing_count);
}

ContiguityReport contiguity_report(int n, int k, double rho) {
  if (k < 3) throw Error(ErrorCode::kDegenerateParameters, "need k >= 3 so that ln(k-1) > 0");
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  if (!(rho > 0.0 && rho <= 1.0)) throw Error(ErrorCode::kOutOfRange, "rho must lie in (0, 1]");
  ContiguityReport r;
  r.n = n;
  r.k = k;
  r.rho = rho;
  const double nn = n;
  const double kk = k;
  const double log_km1 = std::log(kk - 1.0);
  r.epsilon = std::min(std::sqrt(rho * kk * std::log(kk) / nn), rho);
  r.q = 0.5 * (kk - 1.0) / (kk * kk) * nn * r.epsilon * r.epsilon / log_km1;
  r.p = r.epsilon + r.q;
  if (r.p > 1.0) throw Error(ErrorCode::kDegenerateParameters, "p = " + std::to_string(r.p) + " > 1");
  r.d = nn * (r.p + (kk - 1.0) * r.q) / kk;
  if (r.d == 0.0) throw Error(ErrorCode::kDegenerateParameters, "expected degree is zero");
  r.lambda = nn * (r.p - r.q) / (r.d * kk);
  r.lhs = r.d * r.lambda * r.lambda * (kk - 1.0) / 2.0;
  r.rhs = log_km1;
  r.condition_holds = r.lhs <= r.rhs;
  r.separation = r.epsilon / std::sqrt(kk);
  return r;
}

}  // namespace graphon
