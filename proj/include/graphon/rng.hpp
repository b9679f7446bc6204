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
#include <random>
#include <vector>

namespace graphon {

// Every random draw in the library is a function of (seed, stream).
// Concurrent consumers must use distinct streams; `child` derives them.
struct RngSeed {
  uint64_t seed = 0;
  uint64_t stream = 0;

  // Deterministic, well-mixed sub-stream for the index-th sub-task.
  RngSeed child(uint64_t index) const;

  friend bool operator==(const RngSeed&, const RngSeed&) = default;
};

uint64_t splitmix64(uint64_t x);

// std::mt19937_64 keyed by std::seed_seq over the four 32-bit halves of
// (seed, stream). Both are fully specified by the standard, so sequences are
// identical across platforms. Distributions are implemented here rather than
// through <random> distributions, whose algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(RngSeed seed);

  uint64_t next() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform on (0, 1].
  double uniform_pos() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }
  // Uniform integer in [0, bound), unbiased.
  uint64_t below(uint64_t bound);
  // Uniformly random permutation of {0..k-1}.
  std::vector<int> permutation(int k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace graphon
