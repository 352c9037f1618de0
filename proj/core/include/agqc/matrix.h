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

#ifndef AGQC_MATRIX_H_
#define AGQC_MATRIX_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "agqc/gf.h"

namespace agqc {

/// Dense row-major matrix over a finite field, storing raw element values.
class Matrix {
   public:
    using Raw = Field::Raw;

    Matrix(Field field, std::size_t rows, std::size_t cols);
    static Matrix identity(const Field &field, std::size_t n);
    static Matrix from_rows(const Field &field, const std::vector<std::vector<Raw>> &rows, std::size_t cols);

    const Field &field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    Raw raw(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set_raw(std::size_t r, std::size_t c, Raw v) { data_[r * cols_ + c] = v; }
    Element at(std::size_t r, std::size_t c) const { return Element(field_, raw(r, c)); }
    void set(std::size_t r, std::size_t c, const Element &e);

    std::span<const Raw> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Raw> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Raw> values);
    Matrix select_rows(std::span<const std::size_t> indices) const;
    Matrix transpose() const;
    Matrix operator*(const Matrix &rhs) const;
    bool is_zero() const;
    bool operator==(const Matrix &o) const;

    /// One row per line, entries as integer encodings (c_0 + c_1 p + ...).
    std::string to_csv() const;

   private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Raw> data_;
};

struct RrefResult {
    Matrix reduced;  // nonzero rows first; trailing zero rows removed
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination with first-nonzero pivoting.
RrefResult rref(const Matrix &m);
std::size_t rank(const Matrix &m);

/// Basis of the right null space {v : M v^T = 0}, one vector per row.
Matrix kernel(const Matrix &m);

/// [a; b]
Matrix vstack(const Matrix &a, const Matrix &b);

/// True iff every row of a lies in the row space of b.
bool rowspace_contains(const Matrix &a, const Matrix &b);
bool same_rowspace(const Matrix &a, const Matrix &b);

/// Row space of V intersected with subfield^n, expressed over the subfield.
/// V must be stable under coordinatewise x -> x^{|subfield|}.
Matrix frobenius_fixed_subspace(const Matrix &v, const Field &subfield);

/// Matrix with every entry mapped through the canonical embedding.
Matrix embed(const Matrix &m, const Field &target);

/// dst <- dst + s * src
void add_scaled(const Field &field, std::span<Field::Raw> dst, std::span<const Field::Raw> src, Field::Raw s);

/// Membership oracle for a fixed row space.
class RowSpace {
   public:
    explicit RowSpace(const Matrix &generators);
    std::size_t dimension() const { return basis_.rank; }
    bool contains(std::span<const Field::Raw> v) const;
    /// v reduced against the echelon basis (zero iff v is in the space).
    std::vector<Field::Raw> reduce(std::span<const Field::Raw> v) const;
    const Matrix &echelon() const { return basis_.reduced; }
    const std::vector<std::size_t> &pivots() const { return basis_.pivots; }

   private:
    RrefResult basis_;
};

}  // namespace agqc

#endif  // AGQC_MATRIX_H_
