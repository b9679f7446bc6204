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

#include "graphon/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "graphon/align.hpp"
#include "graphon/error.hpp"

namespace graphon {

DoublyStochastic DoublyStochastic::make(const Matrix& p) {
  const int k = p.k();
  if (k == 0) throw Error(ErrorCode::kDimensionMismatch, "empty matrix");
  Matrix q = p;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!(q(i, j) >= -kPeelZero))
        throw Error(ErrorCode::kNotDoublyStochastic, "negative entry");
      if (q(i, j) < 0.0) q(i, j) = 0.0;
    }
  for (int i = 0; i < k; ++i) {
    double row = 0.0;
    double col = 0.0;
    for (int j = 0; j < k; ++j) {
      row += q(i, j);
      col += q(j, i);
    }
    if (std::abs(row - 1.0) > kStochasticTolerance || std::abs(col - 1.0) > kStochasticTolerance) {
      throw Error(ErrorCode::kNotDoublyStochastic,
                  "row/column " + std::to_string(i) + " sums to " + std::to_string(row) + "/" +
                      std::to_string(col));
    }
  }
  return DoublyStochastic(std::move(q));
}

Matrix BirkhoffDecomposition::reconstruct(int k) const {
  Matrix m(k);
  for (const auto& t : terms)
    for (int i = 0; i < k; ++i) m(i, t.perm(i)) += t.weight;
  return m;
}

double BirkhoffDecomposition::total_weight() const {
  double s = 0.0;
  for (const auto& t : terms) s += t.weight;
  return s;
}

DoublyStochastic convex_combination(const std::vector<BirkhoffTerm>& terms) {
  if (terms.empty()) throw Error(ErrorCode::kInvalidArgument, "no terms");
  BirkhoffDecomposition d{terms};
  return DoublyStochastic::make(d.reconstruct(terms.front().perm.k()));
}

namespace {

// Kuhn's augmenting paths on the bipartite graph {(i, j) : support(i, j)}.
class SupportMatcher {
 public:
  explicit SupportMatcher(const Matrix& r) : r_(r), k_(r.k()) {}

  std::optional<std::vector<int>> perfect_matching() {
    row_of_col_.assign(k_, -1);
    for (int i = 0; i < k_; ++i) {
      visited_.assign(k_, 0);
      if (!augment(i)) return std::nullopt;
    }
    std::vector<int> col_of_row(k_);
    for (int j = 0; j < k_; ++j) col_of_row[row_of_col_[j]] = j;
    return col_of_row;
  }

 private:
  bool augment(int i) {
    for (int j = 0; j < k_; ++j) {
      if (r_(i, j) <= kPeelZero || visited_[j]) continue;
      visited_[j] = 1;
      if (row_of_col_[j] < 0 || augment(row_of_col_[j])) {
        row_of_col_[j] = i;
        return true;
      }
    }
    return false;
  }

  const Matrix& r_;
  int k_;
  std::vector<int> row_of_col_;
  std::vector<char> visited_;
};

}  // namespace

BirkhoffDecomposition birkhoff_decompose(const DoublyStochastic& p) {
  const int k = p.k();
  Matrix residual = p.matrix();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (residual(i, j) <= kPeelZero) residual(i, j) = 0.0;

  BirkhoffDecomposition out;
  const int max_terms = k * k;
  while (true) {
    double mass = 0.0;
    for (double v : residual.data()) mass += v;
    mass /= k;
    if (residual.max_entry() <= kPeelZero) break;

    auto matching = SupportMatcher(residual).perfect_matching();
    if (!matching) {
      if (mass < k * 1e-10) break;
      throw Error(ErrorCode::kNumericalBreakdown,
                  "no perfect matching on the positive support with residual mass " +
                      std::to_string(mass));
    }
    double w = std::numeric_limits<double>::infinity();
    for (int i = 0; i < k; ++i) w = std::min(w, residual(i, (*matching)[i]));
    for (int i = 0; i < k; ++i) {
      double& e = residual(i, (*matching)[i]);
      e -= w;
      if (e <= kPeelZero) e = 0.0;
    }
    out.terms.push_back({w, Permutation::from_map(std::move(*matching))});
    if (static_cast<int>(out.terms.size()) > max_terms)
      throw Error(ErrorCode::kNumericalBreakdown, "peeling did not terminate");
  }
  if (out.terms.empty()) throw Error(ErrorCode::kNumericalBreakdown, "empty decomposition");
  const double leftover = 1.0 - out.total_weight();
  if (std::abs(leftover) >= k * 1e-10)
    throw Error(ErrorCode::kNumericalBreakdown, "weights sum to " + std::to_string(out.total_weight()));
  out.terms.back().weight += leftover;
  return out;
}

double coupling_distance_sq(const Matrix& a, const Matrix& b, const DoublyStochastic& p) {
  const int k = a.k();
  if (b.k() != k || p.k() != k) throw Error(ErrorCode::kDimensionMismatch, "sizes differ");
  const double scale = 1.0 / (static_cast<double>(k) * static_cast<double>(k));
  double total = 0.0;
  for (int i = 0; i < k; ++i)
    for (int ip = 0; ip < k; ++ip) {
      const double pi = p(i, ip);
      if (pi == 0.0) continue;
      for (int j = 0; j < k; ++j)
        for (int jp = 0; jp < k; ++jp) {
          const double pj = p(j, jp);
          if (pj == 0.0) continue;
          const double d = a(ip, jp) - b(i, j);
          total += pi * pj * d * d;
        }
    }
  return total * scale;
}

double coupling_min_lower(const Matrix& a, const Matrix& b, const DoublyStochastic& p) {
  const int k = a.k();
  if (b.k() != k || p.k() != k) throw Error(ErrorCode::kDimensionMismatch, "sizes differ");
  const BirkhoffDecomposition d = birkhoff_decompose(p);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : d.terms)
    for (const auto& t : d.terms) best = std::min(best, alignment_objective(a, b, s.perm, t.perm));
  return best;
}

nlohmann::json decomposition_to_json(const BirkhoffDecomposition& d) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : d.terms) out.push_back({{"weight", t.weight}, {"perm", t.perm.one_based()}});
  return out;
}

}  // namespace graphon
