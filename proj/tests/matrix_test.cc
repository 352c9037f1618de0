// Copyright 2026 The agqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "agqc/matrix.h"

#include <gtest/gtest.h>

#include <random>

namespace agqc {
namespace {

Matrix random_matrix(const Field &f, std::size_t rows, std::size_t cols, std::mt19937_64 &rng) {
    std::uniform_int_distribution<Field::Raw> pick(0, f.order() - 1);
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set_raw(r, c, pick(rng));
    return m;
}

TEST(MatrixTest, RrefBasics) {
    const Field f3 = Field::make(3, 1);
    const auto id = rref(Matrix::identity(f3, 3));
    EXPECT_EQ(id.rank, 3u);
    EXPECT_EQ(id.reduced, Matrix::identity(f3, 3));
    EXPECT_EQ(rank(Matrix(f3, 2, 4)), 0u);
    const Matrix m = Matrix::from_rows(f3, {{1, 1}, {2, 2}}, 2);
    const auto r = rref(m);
    EXPECT_EQ(r.rank, 1u);
    EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});
}

TEST(MatrixTest, RrefIsIdempotent) {
    std::mt19937_64 rng(11);
    const Field f = Field::make(5, 2);
    for (int i = 0; i < 20; ++i) {
        const Matrix m = random_matrix(f, 4, 7, rng);
        const auto once = rref(m).reduced;
        EXPECT_EQ(rref(once).reduced, once);
    }
}

TEST(MatrixTest, KernelOfSingleRow) {
    const Field f3 = Field::make(3, 1);
    const Matrix k = kernel(Matrix::from_rows(f3, {{1, 1}}, 2));
    ASSERT_EQ(k.rows(), 1u);
    // proportional to (1, 2)
    EXPECT_EQ(f3.mul(k.raw(0, 0), 2), k.raw(0, 1));
    EXPECT_EQ(kernel(Matrix::identity(f3, 4)).rows(), 0u);
}

TEST(MatrixTest, RankNullityAndDoubleDual) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const Field f = i % 2 ? Field::make(3, 2) : Field::make(2, 3);
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 9;
        const Matrix m = random_matrix(f, rows, cols, rng);
        const Matrix k = kernel(m);
        EXPECT_EQ(rank(m) + k.rows(), cols);
        EXPECT_EQ(rank(k), k.rows());
        if (k.rows()) {
            EXPECT_TRUE((m * k.transpose()).is_zero());
            EXPECT_TRUE(same_rowspace(kernel(k), m));
        }
    }
}

TEST(MatrixTest, RowspaceContainmentIsAPartialOrder) {
    std::mt19937_64 rng(3);
    const Field f = Field::make(3, 2);
    const Matrix a = random_matrix(f, 2, 6, rng);
    EXPECT_TRUE(rowspace_contains(a, a));
    EXPECT_TRUE(rowspace_contains(Matrix(f, 3, 6), a));
    for (int i = 0; i < 10; ++i) {
        const Matrix c = random_matrix(f, 4, 6, rng);
        const Matrix mix = random_matrix(f, 3, 4, rng);
        const Matrix b = mix * c;  // rows of b lie in rowspace(c)
        const Matrix sub = random_matrix(f, 2, 3, rng) * b;
        EXPECT_TRUE(rowspace_contains(b, c));
        EXPECT_TRUE(rowspace_contains(sub, b));
        EXPECT_TRUE(rowspace_contains(sub, c));
    }
    EXPECT_THROW(rowspace_contains(Matrix(f, 1, 5), a), Error);
}

TEST(MatrixTest, FrobeniusFixedSubspace) {
    const Field f3 = Field::make(3, 1);
    const Field f9 = Field::make(3, 2);
    // Already defined over F_3.
    const Matrix sub = Matrix::from_rows(f9, {{1, 2, 0}, {0, 1, 1}}, 3);
    const Matrix fixed = frobenius_fixed_subspace(sub, f3);
    EXPECT_EQ(fixed.rows(), 2u);
    EXPECT_TRUE(same_rowspace(embed(fixed, f9), sub));
    // span{(w), (w^3)} is all of F_9^1.
    const Matrix line = Matrix::from_rows(f9, {{3}, {f9.frobenius(3, 1)}}, 1);
    EXPECT_EQ(frobenius_fixed_subspace(line, f3).rows(), 1u);
    // (1, w) is not Galois-stable.
    const Matrix unstable = Matrix::from_rows(f9, {{1, 3}}, 2);
    EXPECT_THROW(frobenius_fixed_subspace(unstable, f3), Error);
}

TEST(MatrixTest, CsvUsesIntegerEncodings) {
    const Field f9 = Field::make(3, 2);
    const Matrix m = Matrix::from_rows(f9, {{0, 3}, {8, 1}}, 2);
    EXPECT_EQ(m.to_csv(), "0,3\n8,1\n");
}

TEST(MatrixTest, RowSpaceMembership) {
    const Field f = Field::make(5, 1);
    const RowSpace rs(Matrix::from_rows(f, {{1, 2, 3}, {0, 1, 4}}, 3));
    EXPECT_EQ(rs.dimension(), 2u);
    const std::vector<Field::Raw> inside{1, 3, 2};  // row0 + row1
    const std::vector<Field::Raw> outside{0, 0, 1};
    EXPECT_TRUE(rs.contains(inside));
    EXPECT_FALSE(rs.contains(outside));
}

}  // namespace
}  // namespace agqc
