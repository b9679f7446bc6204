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

namespace graphon {

// Unit-constant rate curves: every hidden Omega/O constant is set to 1.
// They are meant for comparing shapes and orderings, not absolute values.

struct RateQuery {
  int n = 0;
  int k = 0;
  double rho = 0.0;

  // Throws kInvalidArgument unless 2 <= k <= n and 0 < rho <= 1.
  void validate() const;
};

struct LowerRate {
  double total = 0.0;          // min(sparse_floor, klopp + hard_instance + neeman)
  double sparse_floor = 0.0;   // rho
  double klopp = 0.0;          // rho (k/n)^(1/4)
  double hard_instance = 0.0;  // sqrt(rho k^2 / n^2)
  double neeman = 0.0;         // sqrt(rho ln(min(k, rho n + 2)) / n)
};

LowerRate lower_rate(const RateQuery& q);

// min(rho, rho (k/n)^(1/4) + sqrt(rho k^2/n^2) + sqrt(rho ln k / n)).
double upper_rate(const RateQuery& q);

// max(ln k / ln(rho n + 2), 1): the largest possible upper/lower ratio.
double rate_gap_factor(const RateQuery& q);

}  // namespace graphon
