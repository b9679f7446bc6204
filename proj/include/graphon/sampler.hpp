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
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "graphon/matrix.hpp"
#include "graphon/rng.hpp"
#include "json.hpp"

namespace graphon {

// Undirected edge with 0-based endpoints, u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Hashed adjacency lookup, built on demand from a graph's edge list.
class EdgeLookup {
 public:
  explicit EdgeLookup(const std::vector<Edge>& edges);
  bool contains(int i, int j) const;

 private:
  static uint64_t key(int i, int j);
  std::unordered_set<uint64_t> keys_;
};

// The latent side of a W-random graph: block labels (0-based) and the block
// matrix they index. H[i][j] is W(labels[i], labels[j]) and is not stored.
struct Latents {
  std::vector<int> labels;
  BlockMatrix graphon;
};

class SampledGraph {
 public:
  // Validates endpoints, strips nothing: throws on self-loops or duplicates.
  SampledGraph(int n, std::vector<Edge> edges, std::optional<Latents> latents = std::nullopt);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  size_t edge_count() const { return edges_.size(); }
  const std::optional<Latents>& latents() const { return latents_; }

  // H[i][j]; requires latents. Zero on the diagonal.
  double probability(int i, int j) const;

  EdgeLookup lookup() const { return EdgeLookup(edges_); }
  std::vector<std::vector<int>> adjacency_lists() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::optional<Latents> latents_;
};

enum class SamplingPath {
  kAuto,    // sparse when the mean entry of W is below kSparseThreshold
  kDense,   // one Bernoulli draw per node pair
  kSparse,  // geometric skipping within each label-pair class
};

inline constexpr double kSparseThreshold = 0.05;

// n i.i.d. uniform labels in {0..k-1}.
std::vector<int> sample_labels(int n, int k, RngSeed rng);

SampledGraph sample_graph(const BlockMatrix& w, int n, RngSeed rng, bool keep_latents,
                          SamplingPath path = SamplingPath::kAuto);

// |E| / C(n, 2). Throws kTooFewNodes for n < 2.
double empirical_edge_density(const SampledGraph& g);

// "n m" header, then m lines "i j" (1-based, i < j, lexicographic).
std::string graph_to_text(const SampledGraph& g);
SampledGraph graph_from_text(const std::string& text);

// Provenance sidecar: labels (1-based) and the seed that produced the graph.
nlohmann::json graph_sidecar(const SampledGraph& g, RngSeed rng);

}  // namespace graphon
