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

#ifndef AGQC_RIEMANN_ROCH_H_
#define AGQC_RIEMANN_ROCH_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "agqc/curve.h"
#include "agqc/matrix.h"

namespace agqc {

/// x^i y^j with j <= q - 1.
struct Monomial {
    std::int64_t x_exp = 0;
    std::int64_t y_exp = 0;
    bool operator==(const Monomial &) const = default;
};

/// Pole order at P_inf: q i + m j.
std::int64_t pole_order(const Curve &c, const Monomial &mono);

/// Rational function g / h with g = sum c_ij x^i y^j and h a monic polynomial in x.
struct FunctionRep {
    Field field;
    std::vector<Monomial> monomials;
    std::vector<Field::Raw> numerator;    // parallel to monomials
    std::vector<Field::Raw> denominator;  // monic, lowest degree first

    std::int64_t denominator_degree() const { return static_cast<std::int64_t>(denominator.size()) - 1; }
    /// Largest pole order among monomials with a nonzero coefficient; -1 for g = 0.
    std::int64_t numerator_pole_order(const Curve &c) const;
    bool is_zero() const;
    std::string to_string() const;
};

/// Power series y(t), t = x - x0, of the branch through (x0, y0).
struct LocalExpansion {
    Field field;
    Field::Raw x0 = 0;
    Field::Raw y0 = 0;
    int precision = 0;
    std::vector<Field::Raw> y_series;
};

/// Monomials x^i y^j (j < q) of pole order at most a, ordered by pole order.
std::vector<Monomial> one_point_monomials(const Curve &c, std::int64_t a);
/// Basis of L(a P_inf).
std::vector<FunctionRep> one_point_basis(const Curve &c, std::int64_t a);

LocalExpansion local_expansion(const Curve &c, const Element &x0, const Element &y0, int precision);
LocalExpansion local_expansion(const Curve &c, const Place &place, int precision);

/// Truncated expansion around the expansion's center of sum coeffs[i] * monomials[i];
/// coefficients live in the expansion's field.
std::vector<Field::Raw> expand_numerator(const Curve &c, const LocalExpansion &e, std::span<const Monomial> monomials,
                                         std::span<const Field::Raw> coeffs);

/// Basis of the Riemann-Roch space L(G) over F_{q^2}. The support of G may
/// contain P_inf, affine rational places and at most one degree-2 place.
std::vector<FunctionRep> rr_space(const Curve &c, const Divisor &g);

/// Value of f at a rational place; throws if the place is a pole of f.
Element evaluate(const Curve &c, const FunctionRep &f, const Place &place);

/// Row i holds the values of functions[i] at the given rational places.
Matrix evaluation_matrix(const Curve &c, std::span<const FunctionRep> functions, std::span<const Place> places);

/// Product in the function field (y^q reduced to x^m - y).
FunctionRep multiply(const Curve &c, const FunctionRep &a, const FunctionRep &b);

}  // namespace agqc

#endif  // AGQC_RIEMANN_ROCH_H_
