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

#ifndef AGQC_GF_H_
#define AGQC_GF_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "agqc/error.h"

namespace agqc {

namespace detail {
struct FieldData;
}

class Element;

/// Finite field F_{p^k} in polynomial-basis representation.
///
/// Elements are encoded as integers 0 .. p^k - 1 whose base-p digits are the
/// coefficients c_0 .. c_{k-1} of the residue class c_0 + c_1 w + ... modulo
/// the defining polynomial. Two Field handles compare equal iff they have the
/// same characteristic and degree; the modulus is a deterministic function of
/// (p, k), so such handles denote the same field.
///
/// The raw-value interface below is what the linear algebra and search code
/// uses in hot loops. `Element` is the checked value type for everything else.
class Field {
   public:
    using Raw = std::uint32_t;

    /// F_{p^k} with the lexicographically first monic irreducible modulus
    /// (coefficients compared c_0 first). Fields are cached process-wide.
    static Field make(std::uint64_t p, std::uint32_t k);

    std::uint32_t characteristic() const;
    std::uint32_t degree() const;
    std::uint32_t order() const;
    /// k + 1 coefficients, lowest degree first; the last one is 1.
    std::span<const std::uint32_t> modulus() const;
    std::string name() const;

    bool operator==(const Field &other) const;

    Raw add(Raw a, Raw b) const;
    Raw sub(Raw a, Raw b) const;
    Raw neg(Raw a) const;
    Raw mul(Raw a, Raw b) const;
    Raw inv(Raw a) const;
    Raw div(Raw a, Raw b) const;
    Raw pow(Raw a, std::uint64_t e) const;
    /// a^(p^i).
    Raw frobenius(Raw a, std::uint32_t i) const;
    /// Trace from this field down to F_{p^sub_degree}; result stays in this field.
    Raw trace(Raw a, std::uint32_t sub_degree) const;
    /// Image of an integer under Z -> F_p -> this field.
    Raw from_int(std::int64_t v) const;

    std::vector<std::uint32_t> coefficients(Raw a) const;
    Raw from_coefficients(std::span<const std::uint32_t> coeffs) const;

    /// The class of w, i.e. the root of the modulus.
    Raw generator() const;
    /// Smallest (by integer encoding) generator of the multiplicative group.
    Raw primitive() const;

    /// Lexicographic order on coefficient sequences, c_0 compared first.
    bool canonical_less(Raw a, Raw b) const;
    /// Sort key realizing canonical_less as an integer comparison.
    std::uint64_t canonical_key(Raw a) const;

    Element element(Raw a) const;
    Element zero() const;
    Element one() const;

    /// Full F_p coefficient serialization "c0,c1,...".
    std::string format(Raw a) const;

   private:
    explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
    std::shared_ptr<const detail::FieldData> data_;
};

/// A field element tagged with its field. Arithmetic between elements of
/// different fields throws.
class Element {
   public:
    Element(Field field, Field::Raw raw);

    const Field &field() const { return field_; }
    Field::Raw raw() const { return raw_; }
    bool is_zero() const { return raw_ == 0; }

    Element operator+(const Element &o) const;
    Element operator-(const Element &o) const;
    Element operator*(const Element &o) const;
    Element operator/(const Element &o) const;
    Element operator-() const;
    Element inverse() const;
    Element pow(std::uint64_t e) const;

    bool operator==(const Element &o) const { return field_ == o.field_ && raw_ == o.raw_; }

    std::vector<std::uint32_t> coefficients() const { return field_.coefficients(raw_); }
    std::string to_string() const { return field_.format(raw_); }

   private:
    void check_same_field(const Element &o) const;
    Field field_;
    Field::Raw raw_;
};

/// Canonical ordering of elements of one field (coefficient sequences, c_0 first).
bool canonical_less(const Element &a, const Element &b);

Element frobenius(const Element &a, std::uint32_t i);
Element relative_trace(const Element &a, std::uint32_t sub_degree);

/// Ring embedding F_{p^k} -> F_{p^{ks}} sending w to the canonically smallest
/// root of the source modulus in the target. Cached per field pair.
class Embedding {
   public:
    Embedding(Field source, Field target);

    const Field &source() const { return source_; }
    const Field &target() const { return target_; }
    Field::Raw root() const { return root_; }

    Field::Raw map(Field::Raw a) const;
    /// Inverse image, or false if the value is not in the image.
    bool preimage(Field::Raw b, Field::Raw &out) const;

   private:
    Field source_;
    Field target_;
    Field::Raw root_;
    // Coefficient columns of root^i over F_p.
    std::vector<std::vector<std::uint32_t>> images_;
    // Left inverse (k rows, K columns) of the K x k image matrix over F_p.
    std::vector<std::vector<std::uint32_t>> left_inverse_;
};

const Embedding &embedding(const Field &source, const Field &target);
Element embed(const Element &a, const Field &target);
/// Convert an element lying in a subfield to that subfield's representation.
Element restrict_to(const Element &a, const Field &subfield);

/// Dual basis with respect to the absolute trace form Tr(x y) over F_p.
std::vector<Element> dual_basis(std::span<const Element> basis);

/// The polynomial basis 1, w, ..., w^{k-1}.
std::vector<Element> polynomial_basis(const Field &field);

bool is_prime(std::uint64_t n);
/// (p, r) with q = p^r, or throws if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q);

}  // namespace agqc

#endif  // AGQC_GF_H_
