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

#include "graphon/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "graphon/error.hpp"

namespace graphon {

Matrix::Matrix(int k, double fill) : k_(k) {
  if (k < 0) throw Error(ErrorCode::kDimensionMismatch, "negative matrix size");
  data_.assign(static_cast<size_t>(k) * static_cast<size_t>(k), fill);
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int k = static_cast<int>(rows.size());
  if (k == 0) throw Error(ErrorCode::kDimensionMismatch, "empty matrix");
  Matrix m(k);
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(rows[i].size()) != k) {
      std::ostringstream msg;
      msg << "row " << i << " has " << rows[i].size() << " entries, expected " << k;
      throw Error(ErrorCode::kDimensionMismatch, msg.str());
    }
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<ptrdiff_t>(i) * k);
  }
  return m;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
  std::vector<std::vector<double>> rows(k_);
  for (int i = 0; i < k_; ++i) rows[i].assign(row(i).begin(), row(i).end());
  return rows;
}

double Matrix::max_asymmetry() const {
  double worst = 0.0;
  for (int i = 0; i < k_; ++i)
    for (int j = i + 1; j < k_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
  return worst;
}

double Matrix::min_entry() const { return *std::min_element(data_.begin(), data_.end()); }
double Matrix::max_entry() const { return *std::max_element(data_.begin(), data_.end()); }

double Matrix::mean_entry() const {
  return std::accumulate(data_.begin(), data_.end(), 0.0) / static_cast<double>(data_.size());
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.k() != b.k()) throw Error(ErrorCode::kDimensionMismatch, "matrix sizes differ");
  Matrix out(a.k());
  for (int i = 0; i < a.k(); ++i)
    for (int j = 0; j < a.k(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix out(a.k());
  for (int i = 0; i < a.k(); ++i)
    for (int j = 0; j < a.k(); ++j) out(i, j) = s * a(i, j);
  return out;
}

double normalized_l2(const Matrix& a) {
  double sum = 0.0;
  for (double v : a.data()) sum += v * v;
  const double k = a.k();
  return std::sqrt(sum / (k * k));
}

double normalized_l2_distance(const Matrix& a, const Matrix& b) {
  if (a.k() != b.k()) throw Error(ErrorCode::kDimensionMismatch, "matrix sizes differ");
  double sum = 0.0;
  auto da = a.data();
  auto db = b.data();
  for (size_t t = 0; t < da.size(); ++t) {
    const double d = da[t] - db[t];
    sum += d * d;
  }
  const double k = a.k();
  return std::sqrt(sum / (k * k));
}

BlockMatrix make_block_matrix(const Matrix& entries, double rho) {
  if (entries.k() == 0) throw Error(ErrorCode::kDimensionMismatch, "empty matrix");
  if (!(rho > 0.0 && rho <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "rho must lie in (0, 1], got " + std::to_string(rho));
  }
  const double asym = entries.max_asymmetry();
  if (asym > kSymmetryTolerance) {
    throw Error(ErrorCode::kAsymmetricInput,
                "max |e[i][j] - e[j][i]| = " + std::to_string(asym));
  }
  const int k = entries.k();
  Matrix sym(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const double v = entries(i, j);
      if (!(v >= 0.0 && v <= rho)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "entry (" << i << "," << j << ") = " << v << " outside [0, " << rho << "]";
        throw Error(ErrorCode::kOutOfRange, msg.str());
      }
      sym(i, j) = i == j ? v : 0.5 * (entries(i, j) + entries(j, i));
    }
  }
  return BlockMatrix(std::move(sym), rho);
}

BlockMatrix make_block_matrix(const std::vector<std::vector<double>>& rows, double rho) {
  return make_block_matrix(Matrix::from_rows(rows), rho);
}

double normalized_l2(const BlockMatrix& a) { return normalized_l2(a.entries()); }

double normalized_l2_distance(const BlockMatrix& a, const BlockMatrix& b) {
  return normalized_l2_distance(a.entries(), b.entries());
}

BinarySymMatrix BinarySymMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int k = static_cast<int>(rows.size());
  if (k == 0) throw Error(ErrorCode::kDimensionMismatch, "empty matrix");
  std::vector<uint8_t> bits(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(rows[i].size()) != k)
      throw Error(ErrorCode::kDimensionMismatch, "binary matrix is not square");
    for (int j = 0; j < k; ++j) {
      const int v = rows[i][j];
      if (v != 0 && v != 1) throw Error(ErrorCode::kOutOfRange, "binary entry not in {0,1}");
      bits[static_cast<size_t>(i) * k + j] = static_cast<uint8_t>(v);
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (rows[i][j] != rows[j][i])
        throw Error(ErrorCode::kAsymmetricInput, "binary matrix is not symmetric");
  return BinarySymMatrix(k, std::move(bits));
}

BinarySymMatrix BinarySymMatrix::from_bitstring(int k, const std::string& bits) {
  if (k <= 0 || bits.size() != static_cast<size_t>(k) * k)
    throw Error(ErrorCode::kDimensionMismatch, "bitstring length is not k*k");
  std::vector<std::vector<int>> rows(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const char c = bits[static_cast<size_t>(i) * k + j];
      if (c != '0' && c != '1') throw Error(ErrorCode::kParseError, "bitstring has non-binary character");
      rows[i][j] = c - '0';
    }
  }
  return from_rows(rows);
}

Matrix BinarySymMatrix::to_matrix() const {
  Matrix m(k_);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

std::string BinarySymMatrix::to_bitstring() const {
  std::string s(bits_.size(), '0');
  for (size_t t = 0; t < bits_.size(); ++t) s[t] = bits_[t] ? '1' : '0';
  return s;
}

double hard_instance_eta(int n, int k, double rho) {
  return std::min(1.0, static_cast<double>(k) / (static_cast<double>(n) * std::sqrt(rho)));
}

HardInstanceParams HardInstanceParams::derive(int n, int k, double rho, double c) {
  if (n < 1 || k < 1) throw Error(ErrorCode::kInvalidArgument, "n and k must be positive");
  if (!(rho > 0.0 && rho <= 1.0)) throw Error(ErrorCode::kOutOfRange, "rho must lie in (0, 1]");
  if (!(c >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "c must be nonnegative");
  HardInstanceParams p{n, k, rho, c, hard_instance_eta(n, k, rho)};
  if (p.c * p.eta > 0.5)
    throw Error(ErrorCode::kAmplitudeTooLarge, "c * eta = " + std::to_string(p.c * p.eta) + " > 1/2");
  return p;
}

BlockMatrix q_matrix(const BinarySymMatrix& b, const HardInstanceParams& params) {
  if (b.k() != params.k) throw Error(ErrorCode::kDimensionMismatch, "B.k != params.k");
  const double amp = params.c * params.eta;
  if (amp > 0.5) throw Error(ErrorCode::kAmplitudeTooLarge, "c * eta > 1/2");
  const double hi = params.rho * (0.5 + amp);
  const double lo = params.rho * (0.5 - amp);
  Matrix q(b.k());
  for (int i = 0; i < b.k(); ++i)
    for (int j = 0; j < b.k(); ++j) q(i, j) = b(i, j) ? hi : lo;
  return make_block_matrix(q, params.rho);
}

BlockMatrix planted_partition(int k, double p, double q) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  if (!(q >= 0.0 && q <= p && p <= 1.0) || p == 0.0) {
    throw Error(ErrorCode::kInvalidProbabilities,
                "need 0 <= q <= p <= 1 and p > 0, got p=" + std::to_string(p) +
                    " q=" + std::to_string(q));
  }
  Matrix m(k, q);
  for (int i = 0; i < k; ++i) m(i, i) = p;
  return make_block_matrix(m, p);
}

Matrix blow_up(const Matrix& a, int m) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "blow-up factor must be >= 1");
  const int big = a.k() * m;
  Matrix out(big);
  for (int i = 0; i < big; ++i)
    for (int j = 0; j < big; ++j) out(i, j) = a(i / m, j / m);
  return out;
}

BlockMatrix blow_up(const BlockMatrix& a, int m) {
  return make_block_matrix(blow_up(a.entries(), m), a.rho());
}

}  // namespace graphon
