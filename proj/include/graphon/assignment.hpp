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

#include <vector>

#include "graphon/matrix.hpp"

namespace graphon {

struct Assignment {
  double cost = 0.0;
  // Row i is assigned to column col_of_row[i].
  std::vector<int> col_of_row;
};

// Minimum-cost perfect matching of a square cost matrix. Shortest augmenting
// paths with potentials (Hungarian method), O(k^3).
Assignment solve_assignment(const Matrix& cost);

}  // namespace graphon
