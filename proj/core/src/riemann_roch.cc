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

#include "agqc/riemann_roch.h"

#include <algorithm>
#include <map>
#include <sstream>

namespace agqc {

namespace {

using Raw = Field::Raw;
using Series = std::vector<Raw>;

Series series_mul(const Field &f, const Series &a, const Series &b, std::size_t prec) {
    Series r(prec, 0);
    for (std::size_t i = 0; i < a.size() && i < prec; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size() && i + j < prec; ++j) {
            if (b[j]) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
        }
    }
    return r;
}

// Powers of x = x0 + t and of the local branch y(t), truncated at a fixed precision.
class PointSeries {
   public:
    PointSeries(const Curve &c, const LocalExpansion &e) : field_(e.field), prec_(e.precision), y_(e.y_series) {
        xpow_.push_back(unit());
        ypow_.push_back(unit());
        (void)c;
    }

    const Series &xpow(std::int64_t i) {
        while (static_cast<std::int64_t>(xpow_.size()) <= i) {
            const Series &prev = xpow_.back();
            Series next(prec_, 0);
            for (int k = 0; k < prec_; ++k) {
                Raw v = field_.mul(x0(), prev[k]);
                if (k > 0) v = field_.add(v, prev[k - 1]);
                next[k] = v;
            }
            xpow_.push_back(std::move(next));
        }
        return xpow_[i];
    }

    const Series &ypow(std::int64_t j) {
        while (static_cast<std::int64_t>(ypow_.size()) <= j) {
            ypow_.push_back(series_mul(field_, ypow_.back(), y_, prec_));
        }
        return ypow_[j];
    }

    Series monomial(const Monomial &mono) {
        if (mono.y_exp == 0) return xpow(mono.x_exp);
        if (mono.x_exp == 0) return ypow(mono.y_exp);
        return series_mul(field_, xpow(mono.x_exp), ypow(mono.y_exp), prec_);
    }

    void set_x0(Raw x0) { x0_ = x0; }

   private:
    Raw x0() const { return x0_; }
    Series unit() const {
        Series s(prec_, 0);
        if (prec_ > 0) s[0] = 1;
        return s;
    }
    Field field_;
    int prec_;
    Series y_;
    Raw x0_ = 0;
    std::vector<Series> xpow_, ypow_;
};

PointSeries make_point_series(const Curve &c, const LocalExpansion &e) {
    PointSeries ps(c, e);
    ps.set_x0(e.x0);
    return ps;
}

using Poly = std::vector<Raw>;  // lowest degree first

Poly poly_mul(const Field &f, const Poly &a, const Poly &b) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    return r;
}

Raw poly_eval(const Field &f, const Poly &a, Raw x) {
    Raw acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
    return acc;
}

// Multiplicity of x0 as a root of a (a != 0).
int root_multiplicity(const Field &f, Poly a, Raw x0) {
    int e = 0;
    while (a.size() > 1) {
        // synthetic division by (x - x0)
        Poly q(a.size() - 1, 0);
        Raw carry = 0;
        for (std::size_t i = a.size(); i-- > 1;) {
            carry = f.add(a[i], f.mul(carry, x0));
            q[i - 1] = carry;
        }
        const Raw rem = f.add(a[0], f.mul(carry, x0));
        if (rem != 0) break;
        a = std::move(q);
        ++e;
    }
    return e;
}

// Taylor coefficient of t^e in a(x0 + t).
Raw taylor_coefficient(const Field &f, const Poly &a, Raw x0, int e) {
    Series acc(e + 1, 0);
    Series xp(e + 1, 0);
    xp[0] = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i])
            for (int k = 0; k <= e; ++k) acc[k] = f.add(acc[k], f.mul(a[i], xp[k]));
        Series next(e + 1, 0);
        for (int k = 0; k <= e; ++k) {
            next[k] = f.mul(x0, xp[k]);
            if (k > 0) next[k] = f.add(next[k], xp[k - 1]);
        }
        xp = std::move(next);
    }
    return acc[e];
}

bool same_shape(const FunctionRep &a, const FunctionRep &b) {
    return a.field == b.field && a.monomials == b.monomials && a.denominator == b.denominator;
}

// Linear functional on numerator coefficients giving the value at a rational
// place, plus the list of functionals that must vanish (pole check).
struct PlaceFunctional {
    std::vector<Raw> value;
    std::vector<std::vector<Raw>> must_vanish;
};

PlaceFunctional place_functional(const Curve &c, const FunctionRep &shape, const Place &place) {
    const Field &f = shape.field;
    const std::size_t nm = shape.monomials.size();
    PlaceFunctional out;
    out.value.assign(nm, 0);
    require(place.is_rational(), "evaluation is defined only at rational places");
    if (place.kind() == PlaceKind::kInfinity) {
        const std::int64_t d = shape.denominator_degree();
        for (std::size_t i = 0; i < nm; ++i) {
            const auto &mono = shape.monomials[i];
            if (pole_order(c, mono) > c.q() * d) {
                std::vector<Raw> v(nm, 0);
                v[i] = 1;
                out.must_vanish.push_back(std::move(v));
            } else if (mono.x_exp == d && mono.y_exp == 0) {
                out.value[i] = 1;
            }
        }
        return out;
    }
    require(place.x().field() == f, "place is not defined over " + f.name());
    const Raw x0 = place.x().raw();
    const int e = root_multiplicity(f, shape.denominator, x0);
    if (e == 0) {
        const Raw hinv = f.inv(poly_eval(f, shape.denominator, x0));
        const Raw y0 = place.y().raw();
        for (std::size_t i = 0; i < nm; ++i) {
            const auto &mono = shape.monomials[i];
            out.value[i] = f.mul(hinv, f.mul(f.pow(x0, mono.x_exp), f.pow(y0, mono.y_exp)));
        }
        return out;
    }
    const auto exp = local_expansion(c, place, e + 1);
    auto ps = make_point_series(c, exp);
    const Raw hinv = f.inv(taylor_coefficient(f, shape.denominator, x0, e));
    out.must_vanish.assign(e, std::vector<Raw>(nm, 0));
    for (std::size_t i = 0; i < nm; ++i) {
        const Series s = ps.monomial(shape.monomials[i]);
        for (int k = 0; k < e; ++k) out.must_vanish[k][i] = s[k];
        out.value[i] = f.mul(s[e], hinv);
    }
    return out;
}

Raw apply(const Field &f, const std::vector<Raw> &functional, const std::vector<Raw> &coeffs) {
    Raw acc = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] && functional[i]) acc = f.add(acc, f.mul(functional[i], coeffs[i]));
    return acc;
}

}  // namespace

std::int64_t pole_order(const Curve &c, const Monomial &mono) {
    return static_cast<std::int64_t>(c.q()) * mono.x_exp + static_cast<std::int64_t>(c.m()) * mono.y_exp;
}

std::int64_t FunctionRep::numerator_pole_order(const Curve &c) const {
    std::int64_t best = -1;
    for (std::size_t i = 0; i < monomials.size(); ++i)
        if (numerator[i]) best = std::max(best, pole_order(c, monomials[i]));
    return best;
}

bool FunctionRep::is_zero() const {
    for (Raw v : numerator)
        if (v) return false;
    return true;
}

std::string FunctionRep::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        if (!numerator[i]) continue;
        if (!first) os << " + ";
        first = false;
        os << "[" << field.format(numerator[i]) << "]";
        if (monomials[i].x_exp) os << "*x^" << monomials[i].x_exp;
        if (monomials[i].y_exp) os << "*y^" << monomials[i].y_exp;
    }
    if (first) os << "0";
    if (denominator.size() > 1) {
        os << " / (";
        bool f2 = true;
        for (std::size_t i = denominator.size(); i-- > 0;) {
            if (!denominator[i]) continue;
            if (!f2) os << " + ";
            f2 = false;
            os << "[" << field.format(denominator[i]) << "]*x^" << i;
        }
        os << ")";
    }
    return os.str();
}

std::vector<Monomial> one_point_monomials(const Curve &c, std::int64_t a) {
    std::vector<Monomial> out;
    if (a < 0) return out;
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(c.q()); ++j) {
        for (std::int64_t i = 0;; ++i) {
            Monomial mono{i, j};
            if (pole_order(c, mono) > a) break;
            out.push_back(mono);
        }
    }
    std::sort(out.begin(), out.end(),
              [&](const Monomial &u, const Monomial &v) { return pole_order(c, u) < pole_order(c, v); });
    return out;
}

std::vector<FunctionRep> one_point_basis(const Curve &c, std::int64_t a) {
    const auto monos = one_point_monomials(c, a);
    std::vector<FunctionRep> out;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        FunctionRep f{c.base_field(), monos, std::vector<Raw>(monos.size(), 0), {1}};
        f.numerator[i] = 1;
        out.push_back(std::move(f));
    }
    return out;
}

LocalExpansion local_expansion(const Curve &c, const Element &x0, const Element &y0, int precision) {
    require(precision >= 1, "precision must be positive");
    require(c.on_curve(x0, y0), "expansion center is not on the curve");
    const Field &f = x0.field();
    const std::size_t prec = static_cast<std::size_t>(precision);
    // (x0 + t)^m
    Series xm(prec, 0);
    xm[0] = 1;
    for (std::uint32_t k = 0; k < c.m(); ++k) {
        Series next(prec, 0);
        for (std::size_t i = 0; i < prec; ++i) {
            next[i] = f.mul(x0.raw(), xm[i]);
            if (i > 0) next[i] = f.add(next[i], xm[i - 1]);
        }
        xm = std::move(next);
    }
    Series y(prec, 0);
    y[0] = y0.raw();
    // y <- y - (y^q + y - x^m) = x^m - y^q; the error valuation multiplies by q per step.
    int steps = 1;
    for (std::int64_t reach = 1; reach < precision; reach *= c.q()) ++steps;
    for (int s = 0; s < steps; ++s) {
        Series next = xm;
        for (std::size_t k = 0; k * c.q() < prec; ++k) {
            if (y[k]) next[k * c.q()] = f.sub(next[k * c.q()], f.frobenius(y[k], c.r()));
        }
        y = std::move(next);
    }
    ensure(y[0] == y0.raw(), "local expansion lost its constant term");
    return LocalExpansion{f, x0.raw(), y0.raw(), precision, std::move(y)};
}

LocalExpansion local_expansion(const Curve &c, const Place &place, int precision) {
    require(place.kind() == PlaceKind::kAffine, "local expansions are defined at affine rational places");
    return local_expansion(c, place.x(), place.y(), precision);
}

std::vector<Raw> expand_numerator(const Curve &c, const LocalExpansion &e, std::span<const Monomial> monomials,
                                  std::span<const Raw> coeffs) {
    require(monomials.size() == coeffs.size(), "monomial/coefficient length mismatch");
    auto ps = make_point_series(c, e);
    Series acc(e.precision, 0);
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        if (!coeffs[i]) continue;
        const Series s = ps.monomial(monomials[i]);
        for (int k = 0; k < e.precision; ++k) acc[k] = e.field.add(acc[k], e.field.mul(coeffs[i], s[k]));
    }
    return acc;
}

std::vector<FunctionRep> rr_space(const Curve &c, const Divisor &g) {
    const Field &base = c.base_field();
    const Field &ext = c.quadratic_extension();
    require(g.is_effective(), "rr_space: divisor must be effective");

    std::int64_t a_inf = 0;
    std::optional<Place> deg2;
    std::int64_t a_deg2 = 0;
    // x-coordinate -> (required h exponent, support points in that fiber)
    std::map<Raw, std::int64_t> fiber_exponent;
    for (const auto &[place, coeff] : g.terms()) {
        switch (place.kind()) {
            case PlaceKind::kInfinity:
                a_inf = coeff;
                break;
            case PlaceKind::kAffine: {
                require(place.x().field() == base, "affine support place is not F_{q^2}-rational");
                require(c.on_curve(place.x(), place.y()), "support place is not on the curve");
                auto &e = fiber_exponent[place.x().raw()];
                e = std::max(e, coeff);
                break;
            }
            case PlaceKind::kDegree2:
                require(!deg2.has_value(), "rr_space supports at most one degree-2 place");
                require(place.x().field() == ext, "degree-2 place must be given over " + ext.name());
                require(c.on_curve(place.x(), place.y()), "degree-2 place is not on the curve");
                deg2 = place;
                a_deg2 = coeff;
                break;
        }
    }

    // Common denominator h.
    Poly h{1};
    for (const auto &[x0, e] : fiber_exponent) {
        const Poly lin{base.neg(x0), 1};
        for (std::int64_t i = 0; i < e; ++i) h = poly_mul(base, h, lin);
    }
    if (deg2) {
        const Raw s = ext.add(deg2->x().raw(), deg2->conjugate_x().raw());
        const Raw pr = ext.mul(deg2->x().raw(), deg2->conjugate_x().raw());
        const Element s_small = restrict_to(Element(ext, s), base);
        const Element p_small = restrict_to(Element(ext, pr), base);
        const Poly mu{p_small.raw(), base.neg(s_small.raw()), 1};
        for (std::int64_t i = 0; i < a_deg2; ++i) h = poly_mul(base, h, mu);
    }
    const std::int64_t deg_h = static_cast<std::int64_t>(h.size()) - 1;
    const std::int64_t big_m = a_inf + static_cast<std::int64_t>(c.q()) * deg_h;
    const auto monos = one_point_monomials(c, big_m);
    const std::size_t nm = monos.size();

    const bool over_ext = deg2.has_value();
    const Field &work = over_ext ? ext : base;
    const Embedding *to_work = over_ext ? &embedding(base, ext) : nullptr;

    Matrix constraints(work, 0, nm);
    auto add_point_constraints = [&](const Element &x0, const Element &y0, std::int64_t order) {
        if (order <= 0) return;
        const auto e = local_expansion(c, x0, y0, static_cast<int>(order));
        auto ps = make_point_series(c, e);
        std::vector<std::vector<Raw>> rows(order, std::vector<Raw>(nm, 0));
        for (std::size_t col = 0; col < nm; ++col) {
            const Series s = ps.monomial(monos[col]);
            for (std::int64_t k = 0; k < order; ++k) {
                rows[k][col] = (to_work && x0.field() == base) ? to_work->map(s[k]) : s[k];
            }
        }
        for (auto &r : rows) constraints.append_row(r);
    };

    for (const auto &[x0raw, e] : fiber_exponent) {
        const Element x0(base, x0raw);
        for (const auto &y0 : c.fiber(x0, base)) {
            const std::int64_t own = g.coefficient(Place::affine(x0, y0));
            add_point_constraints(x0, y0, e - own);
        }
    }
    if (deg2) {
        const std::pair<Element, Element> pts[2] = {{deg2->x(), deg2->y()}, {deg2->conjugate_x(), deg2->conjugate_y()}};
        for (const auto &[px, py] : pts) {
            for (const auto &y0 : c.fiber(px, ext)) {
                add_point_constraints(px, y0, y0 == py ? 0 : a_deg2);
            }
        }
    }

    Matrix solutions = constraints.empty() ? Matrix::identity(work, nm) : kernel(constraints);
    if (over_ext) solutions = frobenius_fixed_subspace(solutions, base);

    std::vector<FunctionRep> out;
    out.reserve(solutions.rows());
    for (std::size_t r = 0; r < solutions.rows(); ++r) {
        auto row = solutions.row(r);
        out.push_back(FunctionRep{base, monos, std::vector<Raw>(row.begin(), row.end()), h});
    }

    const std::int64_t deg = g.degree();
    const std::int64_t dim = static_cast<std::int64_t>(out.size());
    if (deg > 2 * c.genus() - 2) {
        ensure(dim == deg + 1 - c.genus(), "Riemann-Roch dimension mismatch for G = " + g.to_string() + ": got " +
                                               std::to_string(dim) + ", expected " +
                                               std::to_string(deg + 1 - c.genus()));
    } else {
        ensure(dim >= deg + 1 - c.genus() && dim <= deg + 1,
               "Riemann-Roch dimension out of range for G = " + g.to_string());
    }
    return out;
}

Element evaluate(const Curve &c, const FunctionRep &f, const Place &place) {
    const auto fn = place_functional(c, f, place);
    for (const auto &v : fn.must_vanish) {
        require(apply(f.field, v, f.numerator) == 0, "evaluation at a pole: " + place.to_string());
    }
    return Element(f.field, apply(f.field, fn.value, f.numerator));
}

Matrix evaluation_matrix(const Curve &c, std::span<const FunctionRep> functions, std::span<const Place> places) {
    require(!functions.empty(), "evaluation_matrix needs at least one function");
    const Field &field = functions.front().field;
    Matrix out(field, functions.size(), places.size());
    bool shared = true;
    for (const auto &f : functions) shared = shared && same_shape(f, functions.front());
    for (std::size_t col = 0; col < places.size(); ++col) {
        if (!shared) {
            for (std::size_t r = 0; r < functions.size(); ++r)
                out.set_raw(r, col, evaluate(c, functions[r], places[col]).raw());
            continue;
        }
        const auto fn = place_functional(c, functions.front(), places[col]);
        for (std::size_t r = 0; r < functions.size(); ++r) {
            for (const auto &v : fn.must_vanish) {
                require(apply(field, v, functions[r].numerator) == 0,
                        "evaluation at a pole: " + places[col].to_string());
            }
            out.set_raw(r, col, apply(field, fn.value, functions[r].numerator));
        }
    }
    return out;
}

FunctionRep multiply(const Curve &c, const FunctionRep &a, const FunctionRep &b) {
    require(a.field == b.field, "multiply: functions over different fields");
    const Field &f = a.field;
    const std::int64_t q = c.q();
    std::map<std::pair<std::int64_t, std::int64_t>, Raw> terms;
    auto accumulate = [&](std::int64_t i, std::int64_t j, Raw v) {
        if (!v) return;
        auto &slot = terms[{j, i}];
        slot = f.add(slot, v);
    };
    for (std::size_t u = 0; u < a.monomials.size(); ++u) {
        if (!a.numerator[u]) continue;
        for (std::size_t v = 0; v < b.monomials.size(); ++v) {
            if (!b.numerator[v]) continue;
            accumulate(a.monomials[u].x_exp + b.monomials[v].x_exp, a.monomials[u].y_exp + b.monomials[v].y_exp,
                       f.mul(a.numerator[u], b.numerator[v]));
        }
    }
    // Keys are (j, i); reduce from the largest y-exponent down.
    while (!terms.empty() && terms.rbegin()->first.first >= q) {
        auto it = std::prev(terms.end());
        const auto [j, i] = it->first;
        const Raw v = it->second;
        terms.erase(it);
        accumulate(i + c.m(), j - q, v);
        accumulate(i, j - q + 1, f.neg(v));
    }
    FunctionRep out{f, {}, {}, poly_mul(f, a.denominator, b.denominator)};
    std::vector<std::pair<Monomial, Raw>> flat;
    for (const auto &[key, v] : terms)
        if (v) flat.push_back({Monomial{key.second, key.first}, v});
    std::sort(flat.begin(), flat.end(),
              [&](const auto &u, const auto &v) { return pole_order(c, u.first) < pole_order(c, v.first); });
    for (const auto &[mono, v] : flat) {
        out.monomials.push_back(mono);
        out.numerator.push_back(v);
    }
    if (out.monomials.empty()) {
        out.monomials.push_back(Monomial{0, 0});
        out.numerator.push_back(0);
    }
    return out;
}

}  // namespace agqc
