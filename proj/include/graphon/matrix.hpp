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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace graphon {

// Dense square matrix of doubles, row-major. Used for raw k x k data that is
// not necessarily a valid graphon (differences, permuted copies, couplings).
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int k, double fill = 0.0);

  // Throws kDimensionMismatch unless `rows` is square and nonempty.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  int k() const { return k_; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }
  double& operator()(int i, int j) { return data_[index(i, j)]; }

  std::span<const double> data() const { return data_; }
  std::span<const double> row(int i) const {
    return std::span<const double>(data_).subspan(static_cast<size_t>(i) * k_, k_);
  }
  std::vector<std::vector<double>> to_rows() const;

  double max_asymmetry() const;
  double min_entry() const;
  double max_entry() const;
  double mean_entry() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  size_t index(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(k_) + static_cast<size_t>(j);
  }

  int k_ = 0;
  std::vector<double> data_;
};

Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

// (1/k^2 * sum_ij a_ij^2)^(1/2): the L2 norm of the step function with equal
// blocks whose values are the entries of `a`.
double normalized_l2(const Matrix& a);
double normalized_l2_distance(const Matrix& a, const Matrix& b);

// Symmetric k x k matrix of connection probabilities bounded by rho. The
// finite description of an equal-block graphon.
class BlockMatrix {
 public:
  int k() const { return entries_.k(); }
  double rho() const { return rho_; }
  const Matrix& entries() const { return entries_; }
  double operator()(int i, int j) const { return entries_(i, j); }

 private:
  friend BlockMatrix make_block_matrix(const Matrix& entries, double rho);
  BlockMatrix(Matrix entries, double rho) : entries_(std::move(entries)), rho_(rho) {}

  Matrix entries_;
  double rho_ = 1.0;
};

inline constexpr double kSymmetryTolerance = 1e-12;

// Validates symmetry (to kSymmetryTolerance) and 0 <= entry <= rho <= 1.
// Accepted entries are symmetrized by averaging; nothing is clamped.
BlockMatrix make_block_matrix(const Matrix& entries, double rho);
BlockMatrix make_block_matrix(const std::vector<std::vector<double>>& rows, double rho);
inline BlockMatrix make_block_matrix(std::initializer_list<std::vector<double>> rows, double rho) {
  return make_block_matrix(std::vector<std::vector<double>>(rows), rho);
}

double normalized_l2(const BlockMatrix& a);
double normalized_l2_distance(const BlockMatrix& a, const BlockMatrix& b);

// Symmetric k x k matrix with entries in {0, 1}.
class BinarySymMatrix {
 public:
  BinarySymMatrix() = default;
  // Throws kAsymmetricInput / kOutOfRange on invalid input.
  static BinarySymMatrix from_rows(const std::vector<std::vector<int>>& rows);
  // Row-major string of k*k characters '0'/'1'.
  static BinarySymMatrix from_bitstring(int k, const std::string& bits);

  int k() const { return k_; }
  int operator()(int i, int j) const { return bits_[static_cast<size_t>(i) * k_ + j]; }
  Matrix to_matrix() const;
  std::string to_bitstring() const;

  friend bool operator==(const BinarySymMatrix&, const BinarySymMatrix&) = default;

 private:
  BinarySymMatrix(int k, std::vector<uint8_t> bits) : k_(k), bits_(std::move(bits)) {}

  int k_ = 0;
  std::vector<uint8_t> bits_;
};

// Parameters of the hard-instance family rho * [1/2 + c*eta*(2B - 1)].
struct HardInstanceParams {
  int n = 0;
  int k = 0;
  double rho = 0.0;
  double c = 0.0;
  double eta = 0.0;

  // eta = min(1, k / (n sqrt(rho))). Throws kAmplitudeTooLarge if c*eta > 1/2.
  static HardInstanceParams derive(int n, int k, double rho, double c);
};

double hard_instance_eta(int n, int k, double rho);

BlockMatrix q_matrix(const BinarySymMatrix& b, const HardInstanceParams& params);

// Diagonal p, off-diagonal q, declared bound p. Requires 0 <= q <= p <= 1.
BlockMatrix planted_partition(int k, double p, double q);

// Each block split into m equal sub-blocks with replicated values.
BlockMatrix blow_up(const BlockMatrix& a, int m);
Matrix blow_up(const Matrix& a, int m);

}  // namespace graphon
