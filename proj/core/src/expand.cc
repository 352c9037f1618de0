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

#include "agqc/expand.h"

namespace agqc {

namespace {

void check_basis(const Field &f, std::span<const Element> basis) {
    require(basis.size() == f.degree(), "basis has " + std::to_string(basis.size()) + " elements, expected " +
                                            std::to_string(f.degree()));
    for (const auto &b : basis) require(b.field() == f, "basis element outside " + f.name());
}

}  // namespace

Matrix expand_vectors(const Matrix &m, std::span<const Element> basis) {
    const Field &f = m.field();
    check_basis(f, basis);
    const auto dual = dual_basis(basis);
    const std::size_t K = f.degree();
    const Field fp = Field::make(f.characteristic(), 1);
    Matrix out(fp, m.rows(), m.cols() * K);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Field::Raw v = m.raw(r, j);
            if (!v) continue;
            for (std::size_t l = 0; l < K; ++l) out.set_raw(r, j * K + l, f.trace(f.mul(v, dual[l].raw()), 1));
        }
    return out;
}

LinearCode expand_code(const LinearCode &c, std::span<const Element> basis) {
    const Field &f = c.field();
    check_basis(f, basis);
    Matrix scaled(f, 0, c.length());
    std::vector<Field::Raw> row(c.length());
    for (std::size_t r = 0; r < c.dimension(); ++r)
        for (const auto &b : basis) {
            for (std::size_t j = 0; j < c.length(); ++j) row[j] = f.mul(b.raw(), c.generator().raw(r, j));
            scaled.append_row(row);
        }
    LinearCode out = LinearCode::from_generator(expand_vectors(scaled, basis));
    ensure(out.dimension() == f.degree() * c.dimension(), "expanded dimension is not K k");
    // A nonzero symbol expands to a nonzero block, so weights cannot drop.
    out.designed_distance = c.designed_distance;
    out.dual_designed_distance = c.dual_designed_distance;
    return out;
}

bool expansion_duality_holds(const LinearCode &c, std::span<const Element> left, std::span<const Element> right) {
    const LinearCode lhs = dual_code(expand_code(c, left));
    const LinearCode rhs = expand_code(dual_code(c), right);
    return same_rowspace(lhs.generator(), rhs.generator());
}

bool verify_expansion_duality(const LinearCode &c, std::span<const Element> basis) {
    const auto dual = dual_basis(basis);
    return expansion_duality_holds(c, basis, dual);
}

CssCode expanded_css(const LinearCode &c1, const LinearCode &c2, std::uint32_t p) {
    const Field &f = c1.field();
    require(f.characteristic() == p, f.name() + " is not an extension of F_" + std::to_string(p));
    const auto basis = polynomial_basis(f);
    return css_assemble(expand_code(c1, basis), expand_code(c2, basis));
}

}  // namespace agqc
