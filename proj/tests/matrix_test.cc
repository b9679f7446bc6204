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


#include <cmath>
#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "graphon/error.hpp"
#include "graphon/matrix.hpp"
#include "graphon/matrix_io.hpp"
#include "graphon/permutation.hpp"
#include "test_support.hpp"

namespace graphon {
namespace {

using testing::random_block;

template <typename F>
void expect_code(ErrorCode code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << ErrorCodeName(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

const std::vector<std::vector<double>> kA = {{1, 0, 1}, {0, 1, 0}, {1, 0, 1}};
const std::vector<std::vector<double>> kB = {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}};

TEST(BlockMatrix, OneByOne) {
  const auto m = make_block_matrix({{0.5}}, 1.0);
  EXPECT_EQ(m.k(), 1);
  EXPECT_EQ(m(0, 0), 0.5);
}

TEST(BlockMatrix, ValidatesSymmetryAndRange) {
  const auto a = make_block_matrix(kA, 1.0);
  EXPECT_EQ(a.k(), 3);
  expect_code(ErrorCode::kOutOfRange, [] { make_block_matrix({{0.2, 0.6}, {0.6, 0.2}}, 0.5); });
  expect_code(ErrorCode::kOutOfRange, [] { make_block_matrix({{-0.1}}, 1.0); });
  expect_code(ErrorCode::kAsymmetricInput, [] { make_block_matrix({{0.2, 0.3}, {0.31, 0.2}}, 1.0); });
  expect_code(ErrorCode::kOutOfRange, [] { make_block_matrix({{0.1}}, 0.0); });
}

TEST(BlockMatrix, PreservesValuesAndSymmetrizesWithinTolerance) {
  const auto m = make_block_matrix({{0.25, 0.3}, {0.3 + 1e-13, 0.1}}, 1.0);
  EXPECT_EQ(m(0, 0), 0.25);
  EXPECT_EQ(m(0, 1), m(1, 0));
  EXPECT_NEAR(m(0, 1), 0.3, 1e-13);
}

TEST(NormalizedL2, Examples) {
  EXPECT_DOUBLE_EQ(normalized_l2(Matrix(3, 1.0)), 1.0);
  EXPECT_EQ(normalized_l2(Matrix(4, 0.0)), 0.0);
  const auto a = make_block_matrix(kA, 1.0);
  const auto b = make_block_matrix(kB, 1.0);
  EXPECT_NEAR(normalized_l2_distance(a, b), 2.0 / 3.0, 1e-15);
}

TEST(HardInstance, EtaFormula) {
  EXPECT_EQ(hard_instance_eta(10, 5, 0.25), 1.0);
  EXPECT_NEAR(hard_instance_eta(100, 10, 0.04), 0.5, 1e-15);
  const auto p = HardInstanceParams::derive(100, 10, 0.04, 0.1);
  EXPECT_NEAR(p.eta, 0.5, 1e-15);
  EXPECT_THROW(HardInstanceParams::derive(10, 5, 0.25, 0.6), Error);
}

TEST(QMatrix, DirectSubstitution) {
  const auto ones = BinarySymMatrix::from_rows({{1, 1}, {1, 1}});
  HardInstanceParams p{10, 2, 0.5, 0.25, 1.0};
  const auto q = q_matrix(ones, p);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) EXPECT_DOUBLE_EQ(q(i, j), 0.375);  // 0.5 * (0.5 + 0.25)
  EXPECT_EQ(q.rho(), 0.5);

  const auto eye = BinarySymMatrix::from_rows({{1, 0}, {0, 1}});
  const auto q2 = q_matrix(eye, HardInstanceParams{10, 2, 1.0, 0.25, 1.0});
  EXPECT_DOUBLE_EQ(q2(0, 0), 0.75);
  EXPECT_DOUBLE_EQ(q2(0, 1), 0.25);
  EXPECT_DOUBLE_EQ(q2(1, 1), 0.75);
}

TEST(QMatrix, Errors) {
  const auto eye = BinarySymMatrix::from_rows({{1, 0}, {0, 1}});
  expect_code(ErrorCode::kAmplitudeTooLarge, [&] { q_matrix(eye, HardInstanceParams{10, 2, 1.0, 0.6, 1.0}); });
  expect_code(ErrorCode::kDimensionMismatch, [&] { q_matrix(eye, HardInstanceParams{10, 3, 1.0, 0.25, 1.0}); });
}

TEST(QMatrix, RangeAndGapProperty) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 2 + trial % 6;
    std::vector<std::vector<int>> bits(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) bits[i][j] = bits[j][i] = static_cast<int>(gen() & 1);
    bits[0][0] = 1;
    bits[k - 1][k - 1] = 0;
    const double rho = std::uniform_real_distribution<double>(0.01, 1.0)(gen);
    const double c = std::uniform_real_distribution<double>(0.0, 0.5)(gen);
    const auto params = HardInstanceParams::derive(64, k, rho, c);
    const auto q = q_matrix(BinarySymMatrix::from_rows(bits), params);
    EXPECT_GE(q.entries().min_entry(), 0.0);
    EXPECT_LE(q.entries().max_entry(), rho);
    EXPECT_NEAR(q.entries().max_entry() - q.entries().min_entry(), 2 * rho * c * params.eta, 1e-15);
  }
}

TEST(PlantedPartition, Examples) {
  const auto er = planted_partition(2, 0.3, 0.3);
  EXPECT_EQ(normalized_l2_distance(er.entries(), Matrix(2, 0.3)), 0.0);
  const auto pp = planted_partition(3, 0.5, 0.1);
  EXPECT_EQ(pp(1, 1), 0.5);
  EXPECT_EQ(pp(0, 2), 0.1);
  EXPECT_EQ(pp.rho(), 0.5);
  expect_code(ErrorCode::kInvalidProbabilities, [] { planted_partition(2, 0.1, 0.5); });
  expect_code(ErrorCode::kInvalidProbabilities, [] { planted_partition(2, 1.2, 0.5); });
}

TEST(BlowUp, Examples) {
  std::mt19937_64 gen(3);
  const auto a = random_block(4, gen);
  EXPECT_EQ(blow_up(a, 1).entries(), a.entries());
  const auto c = blow_up(make_block_matrix({{0.3}}, 1.0), 3);
  EXPECT_EQ(c.entries(), Matrix(3, 0.3));
  for (int k = 1; k <= 5; ++k) {
    const auto r = random_block(k, gen);
    for (int m = 1; m <= 8; ++m) {
      const auto up = blow_up(r, m);
      EXPECT_EQ(up.k(), k * m);
      EXPECT_NEAR(normalized_l2(up), normalized_l2(r), 1e-12);
      for (int i = 0; i < k * m; ++i)
        for (int j = 0; j < k * m; ++j) ASSERT_EQ(up(i, j), r(i / m, j / m));
    }
  }
}

TEST(BinarySym, BitstringRoundTrip) {
  const auto b = BinarySymMatrix::from_rows({{1, 0, 1}, {0, 0, 1}, {1, 1, 0}});
  EXPECT_EQ(b.to_bitstring(), "101001110");
  EXPECT_EQ(BinarySymMatrix::from_bitstring(3, b.to_bitstring()), b);
  EXPECT_THROW(BinarySymMatrix::from_rows({{1, 0}, {1, 0}}), Error);
  EXPECT_THROW(BinarySymMatrix::from_rows({{2}}), Error);
}

TEST(Permutation, PaperRelabelingAndInverse) {
  const auto a = make_block_matrix(kA, 1.0);
  const auto s = Permutation::from_one_based({1, 3, 2});
  EXPECT_EQ(apply_perms(a, s, s), make_block_matrix(kB, 1.0).entries());
  EXPECT_EQ(apply_perms(a, Permutation::identity(3), Permutation::identity(3)), a.entries());
  std::mt19937_64 gen(11);
  for (int t = 0; t < 20; ++t) {
    const auto r = random_block(5, gen);
    const auto p = Permutation::from_map(testing::random_perm(5, gen));
    const auto q = Permutation::from_map(testing::random_perm(5, gen));
    EXPECT_EQ(apply_perms(apply_perms(r, p, q), p.inverse(), q.inverse()), r.entries());
    EXPECT_EQ(apply_perms(r, p, p).max_asymmetry(), 0.0);
  }
  EXPECT_THROW(Permutation::from_map({0, 0, 1}), Error);
  EXPECT_THROW(apply_perms(a, Permutation::identity(2), Permutation::identity(2)), Error);
}

TEST(MatrixIo, CsvAndJsonRoundTrip) {
  std::mt19937_64 gen(5);
  const auto a = make_block_matrix(testing::random_sym_rows(6, gen, 0.0, 0.3), 0.3);
  const auto csv = matrix_from_csv(matrix_to_csv(a.entries()));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) EXPECT_EQ(csv(i, j), a(i, j));
  const auto back = block_matrix_from_json(block_matrix_to_json(a));
  EXPECT_EQ(back.entries(), a.entries());
  EXPECT_EQ(back.rho(), 0.3);

  const auto dir = std::filesystem::temp_directory_path() / "graphon_matrix_io_test";
  std::filesystem::create_directories(dir);
  save_block_matrix(dir / "a.json", a);
  save_block_matrix(dir / "a.csv", a);
  EXPECT_EQ(load_block_matrix(dir / "a.json").entries(), a.entries());
  EXPECT_EQ(load_block_matrix(dir / "a.csv", 0.3).entries(), a.entries());
  std::filesystem::remove_all(dir);
}

TEST(MatrixIo, RejectsMalformedInput) {
  EXPECT_THROW(matrix_from_csv("1,2\n3\n"), Error);
  EXPECT_THROW(matrix_from_csv("1,x\n3,4\n"), Error);
  EXPECT_THROW(block_matrix_from_json(nlohmann::json{{"k", 2}, {"rho", 1}, {"entries", {{1}}}}), Error);
}

}  // namespace
}  // namespace graphon
