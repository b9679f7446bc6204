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

#include "graphon/rng.hpp"

#include <numeric>
#include <utility>

namespace graphon {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngSeed RngSeed::child(uint64_t index) const {
  return RngSeed{seed, splitmix64(stream ^ splitmix64(index + 0x632be59bd9b4e019ULL))};
}

namespace {

std::mt19937_64 make_engine(RngSeed s) {
  std::seed_seq seq{static_cast<uint32_t>(s.seed), static_cast<uint32_t>(s.seed >> 32),
                    static_cast<uint32_t>(s.stream), static_cast<uint32_t>(s.stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(RngSeed seed) : engine_(make_engine(seed)) {}

uint64_t Rng::below(uint64_t bound) {
  // Lemire's multiply-shift with rejection.
  unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
  uint64_t low = static_cast<uint64_t>(m);
  if (low < bound) {
    const uint64_t threshold = -bound % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next()) * bound;
      low = static_cast<uint64_t>(m);
    }
  }
  return static_cast<uint64_t>(m >> 64);
}

std::vector<int> Rng::permutation(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  for (int i = k - 1; i > 0; --i) {
    const int j = static_cast<int>(below(static_cast<uint64_t>(i) + 1));
    std::swap(p[i], p[j]);
  }
  return p;
}

}  // namespace graphon
