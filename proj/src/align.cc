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

#include "graphon/align.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>
#include <string>

#include "graphon/assignment.hpp"
#include "graphon/error.hpp"

namespace graphon {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Subtrees whose lower bound is within this relative margin of the incumbent
// are cut; an improvement smaller than this is not worth a tie-break.
constexpr double kPruneSlack = 1e-12;
constexpr int kMaxSweeps = 200;
constexpr double kSweepTolerance = 1e-12;

inline double sq(double x) { return x * x; }

void check_same_size(const Matrix& a, const Matrix& b) {
  if (a.k() != b.k() || a.k() == 0)
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix sizes differ: " + std::to_string(a.k()) + " vs " + std::to_string(b.k()));
}

void check_cap(int k, const ExactOptions& options, int default_cap) {
  const int cap = options.exact_cap > 0 ? options.exact_cap : default_cap;
  if (k > cap)
    throw Error(ErrorCode::kTooLargeForExact,
                "k = " + std::to_string(k) + " exceeds exact cap " + std::to_string(cap));
}

// Sum of squares of A_{sigma,tau} - B, accumulated column by column. Every
// separate-alignment routine computes totals in this order so that their
// values compare exactly.
double separate_total(const Matrix& a, const Matrix& b, const std::vector<int>& sigma,
                      const std::vector<int>& tau) {
  const int k = a.k();
  double total = 0.0;
  for (int j = 0; j < k; ++j) {
    double col = 0.0;
    for (int i = 0; i < k; ++i) col += sq(a(sigma[i], tau[j]) - b(i, j));
    total += col;
  }
  return total;
}

double joint_total(const Matrix& a, const Matrix& b, const std::vector<int>& sigma) {
  const int k = a.k();
  double total = 0.0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) total += sq(a(sigma[i], sigma[j]) - b(i, j));
  return total;
}

double to_distance(double total, int k) {
  return std::sqrt(std::max(0.0, total)) / static_cast<double>(k);
}

// Runs f(chunk) for chunk in [0, count) on up to `threads` workers and
// returns the results indexed by chunk.
template <typename F>
auto run_chunks(int count, int threads, F f) -> std::vector<decltype(f(0))> {
  using R = decltype(f(0));
  std::vector<R> results(count);
  const int workers = std::clamp(threads, 1, std::max(1, count));
  if (workers == 1) {
    for (int c = 0; c < count; ++c) results[c] = f(c);
    return results;
  }
  std::vector<std::future<void>> jobs;
  for (int w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (int c = w; c < count; c += workers) results[c] = f(c);
    }));
  }
  for (auto& j : jobs) j.get();
  return results;
}

// Column-assignment costs for a fixed row permutation:
// cost(j, j') = sum_i (A[sigma(i)][j'] - B[i][j])^2.
Matrix column_costs(const Matrix& a, const Matrix& b, const std::vector<int>& sigma) {
  const int k = a.k();
  Matrix c(k);
  for (int j = 0; j < k; ++j)
    for (int jp = 0; jp < k; ++jp) {
      double s = 0.0;
      for (int i = 0; i < k; ++i) s += sq(a(sigma[i], jp) - b(i, j));
      c(j, jp) = s;
    }
  return c;
}

// Row-assignment costs for a fixed column permutation:
// cost(i, i') = sum_j (A[i'][tau(j)] - B[i][j])^2.
Matrix row_costs(const Matrix& a, const Matrix& b, const std::vector<int>& tau) {
  const int k = a.k();
  Matrix c(k);
  for (int i = 0; i < k; ++i)
    for (int ip = 0; ip < k; ++ip) {
      double s = 0.0;
      for (int j = 0; j < k; ++j) s += sq(a(ip, tau[j]) - b(i, j));
      c(i, ip) = s;
    }
  return c;
}

// ---------------------------------------------------------------------------
// Exhaustive joint alignment.

struct JointBest {
  double total = kInf;
  std::vector<int> perm;
};

class JointSearch {
 public:
  JointSearch(const Matrix& a, const Matrix& b, bool prune)
      : a_(a), b_(b), k_(a.k()), prune_(prune), perm_(k_), used_(k_, 0) {}

  JointBest run_from(int first) {
    perm_[0] = first;
    used_[first] = 1;
    dfs(1, sq(a_(first, first) - b_(0, 0)));
    used_[first] = 0;
    return best_;
  }

 private:
  void dfs(int d, double partial) {
    if (d == k_) {
      if (partial < best_.total) {
        best_.total = partial;
        best_.perm = perm_;
      }
      return;
    }
    for (int v = 0; v < k_; ++v) {
      if (used_[v]) continue;
      double add = sq(a_(v, v) - b_(d, d));
      for (int i = 0; i < d; ++i) add += sq(a_(perm_[i], v) - b_(i, d)) + sq(a_(v, perm_[i]) - b_(d, i));
      const double next = partial + add;
      // Adding nonnegative terms never decreases a float sum, so partial
      // totals bound every completion exactly.
      if (prune_ && next >= best_.total) continue;
      perm_[d] = v;
      used_[v] = 1;
      dfs(d + 1, next);
      used_[v] = 0;
    }
  }

  const Matrix& a_;
  const Matrix& b_;
  int k_;
  bool prune_;
  std::vector<int> perm_;
  std::vector<char> used_;
  JointBest best_;
};

// ---------------------------------------------------------------------------
// Exhaustive separate alignment.

struct SeparateBest {
  double total = kInf;
  std::vector<int> sigma;
  std::vector<int> tau;
};

class SeparateSearch {
 public:
  SeparateSearch(const Matrix& a, const Matrix& b, bool prune)
      : a_(a), b_(b), k_(a.k()), prune_(prune), sigma_(k_), tau_(k_), used_rows_(k_, 0),
        used_cols_(k_, 0), row_bound_(k_), col_suffix_(k_ + 1, 0.0) {
    // Sorted matching minimizes the squared difference between two multisets,
    // so row i of B against row v of A costs at least this much.
    std::vector<std::vector<double>> sa(k_), sb(k_);
    for (int i = 0; i < k_; ++i) {
      sa[i].assign(a.row(i).begin(), a.row(i).end());
      sb[i].assign(b.row(i).begin(), b.row(i).end());
      std::sort(sa[i].begin(), sa[i].end());
      std::sort(sb[i].begin(), sb[i].end());
    }
    for (int i = 0; i < k_; ++i)
      for (int v = 0; v < k_; ++v) {
        double s = 0.0;
        for (int j = 0; j < k_; ++j) s += sq(sa[v][j] - sb[i][j]);
        row_bound_(i, v) = s;
      }
  }

  SeparateBest run_from(int first) {
    sigma_[0] = first;
    used_rows_[first] = 1;
    rows_dfs(1, row_bound_(0, first));
    used_rows_[first] = 0;
    return best_;
  }

 private:
  bool cut(double bound) const { return prune_ && bound >= best_.total * (1.0 - kPruneSlack); }

  void rows_dfs(int d, double bound) {
    if (d == k_) {
      leaf();
      return;
    }
    for (int v = 0; v < k_; ++v) {
      if (used_rows_[v]) continue;
      const double next = bound + row_bound_(d, v);
      if (cut(next)) continue;
      sigma_[d] = v;
      used_rows_[v] = 1;
      rows_dfs(d + 1, next);
      used_rows_[v] = 0;
    }
  }

  void leaf() {
    costs_ = column_costs(a_, b_, sigma_);
    if (prune_) {
      if (cut(solve_assignment(costs_).cost)) return;
      std::vector<double> col_min(k_);
      for (int j = 0; j < k_; ++j) {
        auto r = costs_.row(j);
        col_min[j] = *std::min_element(r.begin(), r.end());
      }
      for (int j = k_ - 1; j >= 0; --j) col_suffix_[j] = col_suffix_[j + 1] + col_min[j];
    }
    cols_dfs(0, 0.0);
  }

  void cols_dfs(int d, double partial) {
    if (d == k_) {
      if (partial < best_.total) {
        best_.total = partial;
        best_.sigma = sigma_;
        best_.tau = tau_;
      }
      return;
    }
    for (int v = 0; v < k_; ++v) {
      if (used_cols_[v]) continue;
      const double next = partial + costs_(d, v);
      if (cut(next + col_suffix_[d + 1])) continue;
      tau_[d] = v;
      used_cols_[v] = 1;
      cols_dfs(d + 1, next);
      used_cols_[v] = 0;
    }
  }

  const Matrix& a_;
  const Matrix& b_;
  int k_;
  bool prune_;
  std::vector<int> sigma_, tau_;
  std::vector<char> used_rows_, used_cols_;
  Matrix row_bound_;
  Matrix costs_;
  std::vector<double> col_suffix_;
  SeparateBest best_;
};

SeparateBest separate_exact_total(const Matrix& a, const Matrix& b, const ExactOptions& options) {
  const int k = a.k();
  auto chunks = run_chunks(k, options.threads, [&](int first) {
    SeparateSearch search(a, b, options.prune);
    return search.run_from(first);
  });
  SeparateBest best;
  for (auto& c : chunks)
    if (c.total < best.total) best = std::move(c);
  return best;
}

// ---------------------------------------------------------------------------
// Heuristics.

std::vector<int> sorted_pairing(const std::vector<double>& a_keys, const std::vector<double>& b_keys) {
  const int k = static_cast<int>(a_keys.size());
  std::vector<int> oa(k), ob(k);
  std::iota(oa.begin(), oa.end(), 0);
  std::iota(ob.begin(), ob.end(), 0);
  std::stable_sort(oa.begin(), oa.end(), [&](int x, int y) { return a_keys[x] < a_keys[y]; });
  std::stable_sort(ob.begin(), ob.end(), [&](int x, int y) { return b_keys[x] < b_keys[y]; });
  std::vector<int> perm(k);
  for (int r = 0; r < k; ++r) perm[ob[r]] = oa[r];
  return perm;
}

std::vector<double> row_sums(const Matrix& m) {
  std::vector<double> s(m.k(), 0.0);
  for (int i = 0; i < m.k(); ++i)
    for (int j = 0; j < m.k(); ++j) s[i] += m(i, j);
  return s;
}

std::vector<double> col_sums(const Matrix& m) {
  std::vector<double> s(m.k(), 0.0);
  for (int i = 0; i < m.k(); ++i)
    for (int j = 0; j < m.k(); ++j) s[j] += m(i, j);
  return s;
}

SeparateBest alternate(const Matrix& a, const Matrix& b, std::vector<int> sigma, std::vector<int> tau) {
  double current = separate_total(a, b, sigma, tau);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    std::vector<int> next_sigma = solve_assignment(row_costs(a, b, tau)).col_of_row;
    std::vector<int> next_tau = solve_assignment(column_costs(a, b, next_sigma)).col_of_row;
    const double next = separate_total(a, b, next_sigma, next_tau);
    if (!(next < current)) break;
    const double gain = current - next;
    sigma = std::move(next_sigma);
    tau = std::move(next_tau);
    current = next;
    if (gain < kSweepTolerance) break;
  }
  return {current, std::move(sigma), std::move(tau)};
}

// Entries touched by swapping positions p and q of a joint permutation.
double swap_footprint(const Matrix& a, const Matrix& b, const std::vector<int>& s, int p, int q) {
  const int n = a.k();
  double sum = 0.0;
  for (int j = 0; j < n; ++j) sum += sq(a(s[p], s[j]) - b(p, j)) + sq(a(s[q], s[j]) - b(q, j));
  for (int i = 0; i < n; ++i) {
    if (i == p || i == q) continue;
    sum += sq(a(s[i], s[p]) - b(i, p)) + sq(a(s[i], s[q]) - b(i, q));
  }
  return sum;
}

JointBest swap_descent(const Matrix& a, const Matrix& b, std::vector<int> perm) {
  const int n = a.k();
  for (int sweep = 0; sweep < 10 * kMaxSweeps; ++sweep) {
    bool improved = false;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double before = swap_footprint(a, b, perm, p, q);
        std::swap(perm[p], perm[q]);
        const double after = swap_footprint(a, b, perm, p, q);
        if (after < before - kSweepTolerance * (1.0 + before)) {
          improved = true;
        } else {
          std::swap(perm[p], perm[q]);
        }
      }
    }
    if (!improved) break;
  }
  return {joint_total(a, b, perm), std::move(perm)};
}

bool better(const JointBest& x, const JointBest& y) {
  return x.total < y.total || (x.total == y.total && x.perm < y.perm);
}

JointBest joint_heuristic(const Matrix& a, const Matrix& b, int restarts, RngSeed rng,
                          const std::vector<std::vector<int>>& extra_starts) {
  const int k = a.k();
  Rng gen(rng);
  std::vector<std::vector<int>> starts = extra_starts;
  starts.push_back(Permutation::identity(k).map());
  {
    auto ka = row_sums(a);
    auto kb = row_sums(b);
    auto ca = col_sums(a);
    auto cb = col_sums(b);
    for (int i = 0; i < k; ++i) {
      ka[i] += ca[i];
      kb[i] += cb[i];
    }
    starts.push_back(sorted_pairing(ka, kb));
  }
  while (static_cast<int>(starts.size()) < restarts + static_cast<int>(extra_starts.size()))
    starts.push_back(gen.permutation(k));
  JointBest best;
  for (auto& s : starts) {
    JointBest r = swap_descent(a, b, std::move(s));
    if (better(r, best)) best = std::move(r);
  }
  return best;
}

}  // namespace

double alignment_objective(const Matrix& a, const Matrix& b, const Permutation& sigma,
                           const Permutation& tau) {
  check_same_size(a, b);
  if (sigma.k() != a.k() || tau.k() != a.k())
    throw Error(ErrorCode::kDimensionMismatch, "permutation size != matrix size");
  return to_distance(separate_total(a, b, sigma.map(), tau.map()), a.k());
}

AlignResult delta_hat2_exact(const Matrix& a, const Matrix& b, const ExactOptions& options) {
  check_same_size(a, b);
  check_cap(a.k(), options, kDefaultJointExactCap);
  const int k = a.k();
  auto chunks = run_chunks(k, options.threads, [&](int first) {
    JointSearch search(a, b, options.prune);
    return search.run_from(first);
  });
  JointBest best;
  for (auto& c : chunks)
    if (c.total < best.total) best = std::move(c);
  auto perm = Permutation::from_map(std::move(best.perm));
  return {to_distance(best.total, k), perm, perm, true};
}

AlignResult delta_hathat2_exact(const Matrix& a, const Matrix& b, const ExactOptions& options) {
  check_same_size(a, b);
  check_cap(a.k(), options, kDefaultSeparateExactCap);
  SeparateBest best = separate_exact_total(a, b, options);
  return {to_distance(best.total, a.k()), Permutation::from_map(std::move(best.sigma)),
          Permutation::from_map(std::move(best.tau)), true};
}

AlignResult delta_hathat2_heuristic(const Matrix& a, const Matrix& b, int restarts, RngSeed rng) {
  check_same_size(a, b);
  if (restarts < 1) throw Error(ErrorCode::kInvalidArgument, "restarts must be >= 1");
  const int k = a.k();
  Rng gen(rng);
  SeparateBest best;
  for (int r = 0; r < restarts; ++r) {
    std::vector<int> sigma, tau;
    if (r == 0) {
      sigma = tau = Permutation::identity(k).map();
    } else if (r == 1) {
      sigma = sorted_pairing(row_sums(a), row_sums(b));
      tau = sorted_pairing(col_sums(a), col_sums(b));
    } else {
      sigma = gen.permutation(k);
      tau = gen.permutation(k);
    }
    SeparateBest found = alternate(a, b, std::move(sigma), std::move(tau));
    const bool wins = found.total < best.total ||
                      (found.total == best.total &&
                       std::tie(found.sigma, found.tau) < std::tie(best.sigma, best.tau));
    if (wins) best = std::move(found);
  }
  return {to_distance(best.total, k), Permutation::from_map(std::move(best.sigma)),
          Permutation::from_map(std::move(best.tau)), false};
}

AlignResult delta_hat2_heuristic(const Matrix& a, const Matrix& b, int restarts, RngSeed rng) {
  check_same_size(a, b);
  if (restarts < 1) throw Error(ErrorCode::kInvalidArgument, "restarts must be >= 1");
  JointBest best = joint_heuristic(a, b, restarts, rng, {});
  auto perm = Permutation::from_map(std::move(best.perm));
  return {to_distance(best.total, a.k()), perm, perm, false};
}

int permuted_hamming_min(const BinarySymMatrix& b1, const BinarySymMatrix& b2,
                         const ExactOptions& options) {
  const Matrix a = b1.to_matrix();
  const Matrix b = b2.to_matrix();
  check_same_size(a, b);
  check_cap(a.k(), options, kDefaultSeparateExactCap);
  // Squared differences of 0/1 entries are 0/1, and the sums are exact.
  return static_cast<int>(std::lround(separate_exact_total(a, b, options).total));
}

AlignResult delta2_upper_via_blowup(const Matrix& a, const Matrix& b, int m, int restarts,
                                    RngSeed rng, const ExactOptions& options) {
  check_same_size(a, b);
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "blow-up factor must be >= 1");
  if (restarts < 1) throw Error(ErrorCode::kInvalidArgument, "restarts must be >= 1");
  const int cap = options.exact_cap > 0 ? options.exact_cap : kDefaultJointExactCap;
  const AlignResult base = a.k() <= cap ? delta_hat2_exact(a, b, options)
                                        : delta_hat2_heuristic(a, b, restarts, rng.child(0));
  const Matrix big_a = blow_up(a, m);
  const Matrix big_b = blow_up(b, m);
  const Permutation lifted = base.row_perm.lift(m);
  JointBest best = joint_heuristic(big_a, big_b, restarts, rng.child(1), {lifted.map()});
  const double found = to_distance(best.total, big_a.k());
  // The lifted seed attains base.distance exactly; keep that value unless the search beat it.
  if (found >= base.distance) return {base.distance, lifted, lifted, false};
  auto perm = Permutation::from_map(std::move(best.perm));
  return {found, perm, perm, false};
}

}  // namespace graphon
