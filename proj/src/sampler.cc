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

#include "graphon/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "graphon/error.hpp"

namespace graphon {

EdgeLookup::EdgeLookup(const std::vector<Edge>& edges) {
  keys_.reserve(edges.size() * 2);
  for (const Edge& e : edges) keys_.insert(key(e.u, e.v));
}

uint64_t EdgeLookup::key(int i, int j) {
  if (i > j) std::swap(i, j);
  return (static_cast<uint64_t>(static_cast<uint32_t>(i)) << 32) | static_cast<uint32_t>(j);
}

bool EdgeLookup::contains(int i, int j) const { return keys_.count(key(i, j)) != 0; }

SampledGraph::SampledGraph(int n, std::vector<Edge> edges, std::optional<Latents> latents)
    : n_(n), edges_(std::move(edges)), latents_(std::move(latents)) {
  if (n_ < 1) throw Error(ErrorCode::kInvalidArgument, "graph needs at least one node");
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw Error(ErrorCode::kInvalidArgument, "self-loop at node " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n_) throw Error(ErrorCode::kOutOfRange, "edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw Error(ErrorCode::kInvalidArgument, "duplicate edge");
  if (latents_) {
    if (static_cast<int>(latents_->labels.size()) != n_)
      throw Error(ErrorCode::kDimensionMismatch, "label vector length != n");
    for (int l : latents_->labels)
      if (l < 0 || l >= latents_->graphon.k())
        throw Error(ErrorCode::kOutOfRange, "label outside block range");
  }
}

double SampledGraph::probability(int i, int j) const {
  if (!latents_) throw Error(ErrorCode::kInvalidArgument, "graph was sampled without latents");
  if (i == j) return 0.0;
  return latents_->graphon(latents_->labels[i], latents_->labels[j]);
}

std::vector<std::vector<int>> SampledGraph::adjacency_lists() const {
  std::vector<std::vector<int>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

std::vector<int> sample_labels(int n, int k, RngSeed rng) {
  if (n < 1 || k < 1) throw Error(ErrorCode::kInvalidArgument, "n and k must be positive");
  Rng gen(rng);
  std::vector<int> labels(n);
  for (int& l : labels) l = static_cast<int>(gen.below(static_cast<uint64_t>(k)));
  return labels;
}

namespace {

void sample_dense(const BlockMatrix& w, const std::vector<int>& labels, Rng& gen,
                  std::vector<Edge>& edges) {
  const int n = static_cast<int>(labels.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (gen.bernoulli(w(labels[i], labels[j]))) edges.push_back({i, j});
    }
  }
}

// Number of failures before the next success of a Bernoulli(p) sequence.
uint64_t geometric_skip(double p, Rng& gen) {
  const double s = std::floor(std::log(gen.uniform_pos()) / std::log1p(-p));
  return s >= 1.8e19 ? UINT64_MAX : static_cast<uint64_t>(s);
}

// Visits the successes among `total` Bernoulli(p) trials in increasing index.
template <typename Visit>
void for_each_success(uint64_t total, double p, Rng& gen, Visit visit) {
  if (total == 0 || p <= 0.0) return;
  if (p >= 1.0) {
    for (uint64_t t = 0; t < total; ++t) visit(t);
    return;
  }
  uint64_t pos = 0;
  while (true) {
    const uint64_t skip = geometric_skip(p, gen);
    if (skip >= total - pos) return;
    pos += skip;
    visit(pos);
    if (++pos >= total) return;
  }
}

void sample_sparse(const BlockMatrix& w, const std::vector<int>& labels, Rng& gen,
                   std::vector<Edge>& edges) {
  const int k = w.k();
  std::vector<std::vector<int>> members(k);
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) members[labels[i]].push_back(i);

  for (int a = 0; a < k; ++a) {
    const auto& ga = members[a];
    const uint64_t sa = ga.size();
    // Within-class pairs, enumerated row by row over the strict upper triangle.
    {
      const uint64_t total = sa < 2 ? 0 : sa * (sa - 1) / 2;
      uint64_t row = 0;
      uint64_t row_start = 0;  // linear index of (row, row + 1)
      for_each_success(total, w(a, a), gen, [&](uint64_t t) {
        while (t >= row_start + (sa - 1 - row)) {
          row_start += sa - 1 - row;
          ++row;
        }
        const uint64_t col = row + 1 + (t - row_start);
        edges.push_back({ga[row], ga[col]});
      });
    }
    for (int b = a + 1; b < k; ++b) {
      const auto& gb = members[b];
      const uint64_t sb = gb.size();
      for_each_success(sa * sb, w(a, b), gen, [&](uint64_t t) {
        int u = ga[t / sb];
        int v = gb[t % sb];
        if (u > v) std::swap(u, v);
        edges.push_back({u, v});
      });
    }
  }
}

}  // namespace

SampledGraph sample_graph(const BlockMatrix& w, int n, RngSeed rng, bool keep_latents,
                          SamplingPath path) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  std::vector<int> labels = sample_labels(n, w.k(), rng.child(0));
  Rng gen(rng.child(1));
  if (path == SamplingPath::kAuto) {
    path = w.entries().mean_entry() < kSparseThreshold ? SamplingPath::kSparse : SamplingPath::kDense;
  }
  std::vector<Edge> edges;
  if (path == SamplingPath::kSparse) {
    sample_sparse(w, labels, gen, edges);
  } else {
    sample_dense(w, labels, gen, edges);
  }
  std::optional<Latents> latents;
  if (keep_latents) latents = Latents{std::move(labels), w};
  return SampledGraph(n, std::move(edges), std::move(latents));
}

double empirical_edge_density(const SampledGraph& g) {
  if (g.n() < 2) throw Error(ErrorCode::kTooFewNodes, "edge density needs n >= 2");
  const double pairs = 0.5 * static_cast<double>(g.n()) * static_cast<double>(g.n() - 1);
  return static_cast<double>(g.edge_count()) / pairs;
}

std::string graph_to_text(const SampledGraph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u + 1);
    out += ' ';
    out += std::to_string(e.v + 1);
    out += '\n';
  }
  return out;
}

SampledGraph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 1 || m < 0)
    throw Error(ErrorCode::kParseError, "graph header must be 'n m'");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long t = 0; t < m; ++t) {
    long long i = 0;
    long long j = 0;
    if (!(in >> i >> j)) throw Error(ErrorCode::kParseError, "truncated edge list");
    if (i < 1 || j < 1 || i > n || j > n)
      throw Error(ErrorCode::kParseError, "edge endpoint outside 1..n");
    edges.push_back({static_cast<int>(i - 1), static_cast<int>(j - 1)});
  }
  return SampledGraph(static_cast<int>(n), std::move(edges));
}

nlohmann::json graph_sidecar(const SampledGraph& g, RngSeed rng) {
  nlohmann::json j = {{"n", g.n()}, {"m", g.edge_count()},
                      {"seed", rng.seed}, {"stream", rng.stream}};
  if (g.latents()) {
    std::vector<int> one_based = g.latents()->labels;
    for (int& l : one_based) ++l;
    j["labels"] = one_based;
    j["k"] = g.latents()->graphon.k();
  }
  return j;
}

}  // namespace graphon
