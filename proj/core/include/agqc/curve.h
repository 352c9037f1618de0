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

#ifndef AGQC_CURVE_H_
#define AGQC_CURVE_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "agqc/gf.h"

namespace agqc {

enum class PlaceKind { kAffine, kDegree2, kInfinity };

/// A place of the curve: an affine F_{q^2}-rational point, the unique place
/// at infinity, or a degree-2 place given by a point over F_{q^4} together
/// with its conjugate under x -> x^{q^2}.
class Place {
   public:
    static Place infinity();
    static Place affine(Element x, Element y);
    /// (x, y) over F_{q^4}; the conjugate is (x^{q^2}, y^{q^2}). Represented by
    /// the canonically smaller point of the pair.
    static Place degree2(Element x, Element y);

    PlaceKind kind() const { return kind_; }
    bool is_rational() const { return kind_ != PlaceKind::kDegree2; }
    int degree() const { return kind_ == PlaceKind::kDegree2 ? 2 : 1; }

    const Element &x() const;
    const Element &y() const;
    const Element &conjugate_x() const;
    const Element &conjugate_y() const;

    std::string to_string() const;

    friend bool operator==(const Place &a, const Place &b);
    friend bool operator<(const Place &a, const Place &b);

   private:
    Place() = default;
    PlaceKind kind_ = PlaceKind::kInfinity;
    std::optional<Element> x_, y_, cx_, cy_;
};

/// Finite formal sum of places with integer coefficients.
class Divisor {
   public:
    Divisor() = default;

    void add(const Place &p, std::int64_t coefficient);
    std::int64_t coefficient(const Place &p) const;
    std::int64_t degree() const;
    std::vector<Place> support() const;
    const std::map<Place, std::int64_t> &terms() const { return terms_; }
    bool is_effective() const;
    bool empty() const { return terms_.empty(); }

    /// Coefficientwise comparison.
    bool operator<=(const Divisor &o) const;
    bool operator==(const Divisor &o) const { return terms_ == o.terms_; }
    Divisor operator+(const Divisor &o) const;
    Divisor scaled(std::int64_t s) const;

    std::string to_string() const;

   private:
    std::map<Place, std::int64_t> terms_;  // zero coefficients are never stored
};

namespace detail {
struct CurveData;
}

/// The curve y^q + y = x^m over F_{q^2}, m | q + 1.
class Curve {
   public:
    static Curve make(std::uint32_t q, std::uint32_t m);

    std::uint32_t q() const;
    std::uint32_t m() const;
    std::uint32_t p() const;
    /// q = p^r
    std::uint32_t r() const;
    std::int64_t genus() const;
    /// 1 + q(1 + (q-1)m)
    std::int64_t rational_place_count() const;
    /// -v_inf(x) and -v_inf(y)
    std::int64_t pole_order_x() const { return q(); }
    std::int64_t pole_order_y() const { return m(); }

    /// F_{q^2}
    const Field &base_field() const;
    /// F_{q^4}, where degree-2 places split.
    const Field &quadratic_extension() const;

    /// All rational places: affine points ordered by (x, y) canonically, P_inf last.
    const std::vector<Place> &rational_places() const;

    /// All y in ext with y^q + y = x^m, in canonical order.
    std::vector<Element> fiber(const Element &x, const Field &ext) const;
    bool on_curve(const Element &x, const Element &y) const;

    /// First point over F_{q^4} with x outside F_{q^2}, paired with its conjugate.
    Place find_degree2_place() const;

    /// "y^3 + y = x^4 over F_9"
    std::string describe() const;

    bool operator==(const Curve &o) const { return q() == o.q() && m() == o.m(); }

   private:
    explicit Curve(std::shared_ptr<const detail::CurveData> d) : data_(std::move(d)) {}
    std::shared_ptr<const detail::CurveData> data_;
};

/// Parses "7*inf + 3*P5 + 2*deg2": P<i> is the i-th rational place (1-based,
/// so inf = P_N), deg2 is find_degree2_place(). A bare place means coefficient 1.
Divisor parse_divisor(const Curve &c, const std::string &text);

}  // namespace agqc

#endif  // AGQC_CURVE_H_
