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

#include <algorithm>
#include <sstream>

namespace agqc {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(const Field &field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set_raw(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(const Field &field, const std::vector<std::vector<Raw>> &rows, std::size_t cols) {
    Matrix m(field, 0, cols);
    for (const auto &r : rows) m.append_row(r);
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Element &e) {
    require(e.field() == field_, "matrix entry from a different field");
    set_raw(r, c, e.raw());
}

void Matrix::append_row(std::span<const Raw> values) {
    require(values.size() == cols_, "row length mismatch");
    for (Raw v : values) require(v < field_.order(), "entry out of range");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
    Matrix out(field_, 0, cols_);
    for (std::size_t i : indices) out.append_row(row(i));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set_raw(c, r, raw(r, c));
    return t;
}

Matrix Matrix::operator*(const Matrix &rhs) const {
    require(field_ == rhs.field_, "matrix product over different fields");
    require(cols_ == rhs.rows_, "matrix product shape mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Raw a = raw(r, k);
            if (a) add_scaled(field_, out.row(r), rhs.row(k), a);
        }
    }
    return out;
}

bool Matrix::is_zero() const {
    for (Raw v : data_)
        if (v) return false;
    return true;
}

bool Matrix::operator==(const Matrix &o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string Matrix::to_csv() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ',';
            os << raw(r, c);
        }
        os << '\n';
    }
    return os.str();
}

void add_scaled(const Field &field, std::span<Field::Raw> dst, std::span<const Field::Raw> src, Field::Raw s) {
    if (s == 0) return;
    if (s == 1) {
        for (std::size_t i = 0; i < dst.size(); ++i)
            if (src[i]) dst[i] = field.add(dst[i], src[i]);
        return;
    }
    for (std::size_t i = 0; i < dst.size(); ++i)
        if (src[i]) dst[i] = field.add(dst[i], field.mul(s, src[i]));
}

RrefResult rref(const Matrix &m) {
    const Field &f = m.field();
    Matrix a = m;
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    std::vector<Field::Raw> tmp(m.cols());
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a.raw(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r) {
            auto x = a.row(piv);
            auto y = a.row(r);
            std::swap_ranges(x.begin(), x.end(), y.begin());
        }
        const Field::Raw inv = f.inv(a.raw(r, c));
        if (inv != 1)
            for (auto &v : a.row(r)) v = f.mul(v, inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            const Field::Raw e = a.raw(i, c);
            if (e) add_scaled(f, a.row(i), a.row(r), f.neg(e));
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(f, 0, m.cols());
    for (std::size_t i = 0; i < r; ++i) reduced.append_row(a.row(i));
    return RrefResult{std::move(reduced), r, std::move(pivots)};
}

std::size_t rank(const Matrix &m) { return rref(m).rank; }

Matrix kernel(const Matrix &m) {
    const Field &f = m.field();
    const auto red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : red.pivots) is_pivot[c] = true;
    Matrix out(f, 0, m.cols());
    std::vector<Field::Raw> v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = f.neg(red.reduced.raw(i, free));
        out.append_row(v);
    }
    return out;
}

Matrix vstack(const Matrix &a, const Matrix &b) {
    require(a.field() == b.field(), "vstack over different fields");
    require(a.cols() == b.cols(), "vstack column mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
    return out;
}

bool rowspace_contains(const Matrix &a, const Matrix &b) {
    require(a.field() == b.field(), "rowspace_contains over different fields");
    require(a.cols() == b.cols(), "rowspace_contains shape mismatch");
    return rank(vstack(b, a)) == rank(b);
}

bool same_rowspace(const Matrix &a, const Matrix &b) {
    require(a.cols() == b.cols(), "same_rowspace shape mismatch");
    const std::size_t ra = rank(a);
    return ra == rank(b) && rank(vstack(a, b)) == ra;
}

Matrix frobenius_fixed_subspace(const Matrix &v, const Field &subfield) {
    const Field &big = v.field();
    require(big.characteristic() == subfield.characteristic() && big.degree() % subfield.degree() == 0,
            subfield.name() + " is not a subfield of " + big.name());
    // A Frobenius-stable space has a Frobenius-fixed reduced echelon form.
    const auto red = rref(v);
    const auto &emb = embedding(subfield, big);
    Matrix out(subfield, red.rank, v.cols());
    for (std::size_t r = 0; r < red.rank; ++r) {
        for (std::size_t c = 0; c < v.cols(); ++c) {
            const Field::Raw e = red.reduced.raw(r, c);
            Field::Raw small = 0;
            if (big.frobenius(e, subfield.degree()) != e || !emb.preimage(e, small)) {
                throw Error("not Galois-stable");
            }
            out.set_raw(r, c, small);
        }
    }
    return out;
}

Matrix embed(const Matrix &m, const Field &target) {
    const auto &emb = embedding(m.field(), target);
    Matrix out(target, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set_raw(r, c, emb.map(m.raw(r, c)));
    return out;
}

RowSpace::RowSpace(const Matrix &generators) : basis_(rref(generators)) {}

std::vector<Field::Raw> RowSpace::reduce(std::span<const Field::Raw> v) const {
    const Field &f = basis_.reduced.field();
    std::vector<Field::Raw> w(v.begin(), v.end());
    for (std::size_t i = 0; i < basis_.rank; ++i) {
        const Field::Raw e = w[basis_.pivots[i]];
        if (e) add_scaled(f, w, basis_.reduced.row(i), f.neg(e));
    }
    return w;
}

bool RowSpace::contains(std::span<const Field::Raw> v) const {
    for (Field::Raw x : reduce(v))
        if (x) return false;
    return true;
}

}  // namespace agqc
