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

#include "graphon/rates.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphon/error.hpp"

namespace graphon {

void RateQuery::validate() const {
  if (k < 2 || k > n) throw Error(ErrorCode::kInvalidArgument, "need 2 <= k <= n");
  if (!(rho > 0.0 && rho <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "need 0 < rho <= 1");
}

LowerRate lower_rate(const RateQuery& q) {
  q.validate();
  const double n = q.n;
  const double k = q.k;
  LowerRate r;
  r.sparse_floor = q.rho;
  r.klopp = q.rho * std::pow(k / n, 0.25);
  r.hard_instance = std::sqrt(q.rho * k * k / (n * n));
  r.neeman = std::sqrt(q.rho * std::log(std::min(k, q.rho * n + 2.0)) / n);
  r.total = std::min(r.sparse_floor, r.klopp + r.hard_instance + r.neeman);
  return r;
}

double upper_rate(const RateQuery& q) {
  q.validate();
  const double n = q.n;
  const double k = q.k;
  const double sum = q.rho * std::pow(k / n, 0.25) + std::sqrt(q.rho * k * k / (n * n)) +
                     std::sqrt(q.rho * std::log(k) / n);
  return std::min(q.rho, sum);
}

double rate_gap_factor(const RateQuery& q) {
  q.validate();
  return std::max(std::log(static_cast<double>(q.k)) / std::log(q.rho * q.n + 2.0), 1.0);
}

}  // namespace graphon
