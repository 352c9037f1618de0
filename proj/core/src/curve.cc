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

#include "agqc/curve.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "agqc/matrix.h"

namespace agqc {

namespace {

bool point_less(const Element &x1, const Element &y1, const Element &x2, const Element &y2) {
    const auto k1 = x1.field().canonical_key(x1.raw());
    const auto k2 = x2.field().canonical_key(x2.raw());
    if (k1 != k2) return k1 < k2;
    return y1.field().canonical_key(y1.raw()) < y2.field().canonical_key(y2.raw());
}

}  // namespace

Place Place::infinity() { return Place(); }

Place Place::affine(Element x, Element y) {
    require(x.field() == y.field(), "affine place coordinates in different fields");
    Place p;
    p.kind_ = PlaceKind::kAffine;
    p.x_ = std::move(x);
    p.y_ = std::move(y);
    return p;
}

Place Place::degree2(Element x, Element y) {
    require(x.field() == y.field(), "degree-2 place coordinates in different fields");
    require(x.field().degree() % 2 == 0, "degree-2 place needs an even-degree field");
    const std::uint32_t half = x.field().degree() / 2;
    Element cx = frobenius(x, half);
    Element cy = frobenius(y, half);
    require(!(cx == x && cy == y), "point is fixed by Frobenius; not a degree-2 place");
    require(frobenius(cx, half) == x && frobenius(cy, half) == y, "conjugate orbit does not close");
    Place p;
    p.kind_ = PlaceKind::kDegree2;
    if (point_less(cx, cy, x, y)) {
        std::swap(x, cx);
        std::swap(y, cy);
    }
    p.x_ = std::move(x);
    p.y_ = std::move(y);
    p.cx_ = std::move(cx);
    p.cy_ = std::move(cy);
    return p;
}

const Element &Place::x() const {
    require(x_.has_value(), "place at infinity has no coordinates");
    return *x_;
}
const Element &Place::y() const {
    require(y_.has_value(), "place at infinity has no coordinates");
    return *y_;
}
const Element &Place::conjugate_x() const {
    require(cx_.has_value(), "not a degree-2 place");
    return *cx_;
}
const Element &Place::conjugate_y() const {
    require(cy_.has_value(), "not a degree-2 place");
    return *cy_;
}

std::string Place::to_string() const {
    switch (kind_) {
        case PlaceKind::kInfinity:
            return "P_inf";
        case PlaceKind::kAffine:
            return "(" + x_->to_string() + ";" + y_->to_string() + ")";
        case PlaceKind::kDegree2:
            return "{(" + x_->to_string() + ";" + y_->to_string() + "),(" + cx_->to_string() + ";" +
                   cy_->to_string() + ")}";
    }
    return "?";
}

bool operator==(const Place &a, const Place &b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == PlaceKind::kInfinity) return true;
    return *a.x_ == *b.x_ && *a.y_ == *b.y_;
}

bool operator<(const Place &a, const Place &b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    if (a.kind_ == PlaceKind::kInfinity) return false;
    require(a.x_->field() == b.x_->field(), "comparing places over different fields");
    return point_less(*a.x_, *a.y_, *b.x_, *b.y_);
}

void Divisor::add(const Place &p, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto &c = terms_[p];
    c += coefficient;
    if (c == 0) terms_.erase(p);
}

std::int64_t Divisor::coefficient(const Place &p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t Divisor::degree() const {
    std::int64_t d = 0;
    for (const auto &[p, c] : terms_) d += c * p.degree();
    return d;
}

std::vector<Place> Divisor::support() const {
    std::vector<Place> out;
    for (const auto &[p, c] : terms_) out.push_back(p);
    return out;
}

bool Divisor::is_effective() const {
    for (const auto &[p, c] : terms_)
        if (c < 0) return false;
    return true;
}

bool Divisor::operator<=(const Divisor &o) const {
    for (const auto &[p, c] : terms_)
        if (c > o.coefficient(p)) return false;
    for (const auto &[p, c] : o.terms_)
        if (coefficient(p) > c) return false;
    return true;
}

Divisor Divisor::operator+(const Divisor &o) const {
    Divisor out = *this;
    for (const auto &[p, c] : o.terms_) out.add(p, c);
    return out;
}

Divisor Divisor::scaled(std::int64_t s) const {
    Divisor out;
    for (const auto &[p, c] : terms_) out.add(p, c * s);
    return out;
}

std::string Divisor::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[p, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*" << p.to_string();
    }
    return os.str();
}

namespace detail {

struct CurveData {
    std::uint32_t q = 0, m = 0, p = 0, r = 0;
    std::int64_t genus = 0;
    std::int64_t n_rational = 0;
    Field base = Field::make(2, 1);
    Field ext = Field::make(2, 1);
    std::vector<Place> places;
};

}  // namespace detail

Curve Curve::make(std::uint32_t q, std::uint32_t m) {
    const auto [p, r] = prime_power_decompose(q);
    require(m >= 1, "m must be positive");
    require((q + 1) % m == 0, "m = " + std::to_string(m) + " does not divide q + 1 = " + std::to_string(q + 1));
    auto d = std::make_shared<detail::CurveData>();
    d->q = q;
    d->m = m;
    d->p = p;
    d->r = r;
    ensure(std::gcd(q, m) == 1, "gcd(q, m) != 1");
    ensure((static_cast<std::int64_t>(q) - 1) * (m - 1) % 2 == 0, "genus is not an integer");
    d->genus = (static_cast<std::int64_t>(q) - 1) * (m - 1) / 2;
    d->n_rational = 1 + static_cast<std::int64_t>(q) * (1 + (static_cast<std::int64_t>(q) - 1) * m);
    d->base = Field::make(p, 2 * r);
    d->ext = Field::make(p, 4 * r);

    Curve tmp(d);
    std::vector<Field::Raw> xs(d->base.order());
    for (Field::Raw a = 0; a < d->base.order(); ++a) xs[a] = a;
    std::sort(xs.begin(), xs.end(),
              [&](Field::Raw a, Field::Raw b) { return d->base.canonical_less(a, b); });
    for (Field::Raw a : xs) {
        Element x(d->base, a);
        for (auto &y : tmp.fiber(x, d->base)) d->places.push_back(Place::affine(x, y));
    }
    d->places.push_back(Place::infinity());
    ensure(static_cast<std::int64_t>(d->places.size()) == d->n_rational,
           "enumerated " + std::to_string(d->places.size()) + " rational places, expected " +
               std::to_string(d->n_rational));
    return Curve(std::move(d));
}

std::uint32_t Curve::q() const { return data_->q; }
std::uint32_t Curve::m() const { return data_->m; }
std::uint32_t Curve::p() const { return data_->p; }
std::uint32_t Curve::r() const { return data_->r; }
std::int64_t Curve::genus() const { return data_->genus; }
std::int64_t Curve::rational_place_count() const { return data_->n_rational; }
const Field &Curve::base_field() const { return data_->base; }
const Field &Curve::quadratic_extension() const { return data_->ext; }
const std::vector<Place> &Curve::rational_places() const { return data_->places; }

bool Curve::on_curve(const Element &x, const Element &y) const {
    require(x.field() == y.field(), "coordinates in different fields");
    return frobenius(y, r()) + y == x.pow(m());
}

std::vector<Element> Curve::fiber(const Element &x, const Field &ext) const {
    require(x.field() == ext, "fiber: x must lie in the extension field");
    require(ext.characteristic() == p() && ext.degree() % (2 * r()) == 0,
            "fiber: " + ext.name() + " does not extend " + base_field().name());
    const Field fp = Field::make(p(), 1);
    const std::uint32_t K = ext.degree();
    // y -> y^q + y is F_p-linear; solve in coefficient coordinates.
    Matrix system(fp, K, K + 1);
    Field::Raw basis_elem = 1;
    for (std::uint32_t i = 0; i < K; ++i) {
        const Field::Raw image = ext.add(ext.frobenius(basis_elem, r()), basis_elem);
        const auto c = ext.coefficients(image);
        for (std::uint32_t j = 0; j < K; ++j) system.set_raw(j, i, c[j]);
        basis_elem = ext.mul(basis_elem, ext.generator());
    }
    const auto rhs = ext.coefficients(ext.pow(x.raw(), m()));
    for (std::uint32_t j = 0; j < K; ++j) system.set_raw(j, K, rhs[j]);
    const auto red = rref(system);
    if (!red.pivots.empty() && red.pivots.back() == K) return {};
    std::vector<std::uint32_t> particular(K, 0);
    for (std::size_t i = 0; i < red.rank; ++i) particular[red.pivots[i]] = red.reduced.raw(i, K);
    Matrix homogeneous(fp, 0, K);
    for (std::size_t i = 0; i < red.rank; ++i) {
        auto row = red.reduced.row(i);
        homogeneous.append_row(row.subspan(0, K));
    }
    const Matrix ker = homogeneous.empty() ? Matrix::identity(fp, K) : kernel(homogeneous);
    std::vector<Element> out;
    std::vector<std::uint32_t> digits(ker.rows(), 0);
    while (true) {
        std::vector<std::uint32_t> v = particular;
        for (std::size_t i = 0; i < ker.rows(); ++i)
            for (std::uint32_t j = 0; j < K; ++j)
                v[j] = static_cast<std::uint32_t>((v[j] + static_cast<std::uint64_t>(digits[i]) * ker.raw(i, j)) % p());
        out.emplace_back(ext, ext.from_coefficients(v));
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == p()) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const Element &a, const Element &b) { return canonical_less(a, b); });
    return out;
}

Place Curve::find_degree2_place() const {
    const Field &ext = quadratic_extension();
    const auto &emb = embedding(base_field(), ext);
    std::vector<Field::Raw> xs(ext.order());
    for (Field::Raw a = 0; a < ext.order(); ++a) xs[a] = a;
    std::sort(xs.begin(), xs.end(), [&](Field::Raw a, Field::Raw b) { return ext.canonical_less(a, b); });
    for (Field::Raw a : xs) {
        Field::Raw tmp = 0;
        if (emb.preimage(a, tmp)) continue;
        Element x(ext, a);
        auto ys = fiber(x, ext);
        if (ys.empty()) continue;
        Place pl = Place::degree2(x, ys.front());
        ensure(on_curve(pl.x(), pl.y()) && on_curve(pl.conjugate_x(), pl.conjugate_y()),
               "degree-2 place off the curve");
        return pl;
    }
    throw Error("no degree-2 place");
}

std::string Curve::describe() const {
    std::ostringstream os;
    os << "y^" << q() << " + y = x^" << m() << " over " << base_field().name();
    return os.str();
}

Divisor parse_divisor(const Curve &c, const std::string &text) {
    std::string compact;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
    require(!compact.empty(), "empty divisor");
    Divisor out;
    std::size_t pos = 0;
    while (pos < compact.size()) {
        std::size_t end = compact.find('+', pos);
        if (end == std::string::npos) end = compact.size();
        const std::string term = compact.substr(pos, end - pos);
        require(!term.empty(), "malformed divisor: " + text);
        std::int64_t coeff = 1;
        std::string name = term;
        if (const auto star = term.find('*'); star != std::string::npos) {
            const std::string num = term.substr(0, star);
            name = term.substr(star + 1);
            require(!num.empty() && std::all_of(num.begin(), num.end(), ::isdigit), "bad coefficient in " + term);
            coeff = std::stoll(num);
        }
        if (name == "inf") {
            out.add(Place::infinity(), coeff);
        } else if (name == "deg2") {
            out.add(c.find_degree2_place(), coeff);
        } else if (name.size() > 1 && name[0] == 'P' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
            const std::size_t idx = std::stoul(name.substr(1));
            require(idx >= 1 && idx <= c.rational_places().size(),
                    "place index out of range 1.." + std::to_string(c.rational_places().size()) + ": " + name);
            out.add(c.rational_places()[idx - 1], coeff);
        } else {
            throw Error("unknown place '" + name + "' (use inf, P<i> or deg2)");
        }
        pos = end + 1;
        require(end == compact.size() || pos < compact.size(), "malformed divisor: " + text);
    }
    return out;
}

}  // namespace agqc
