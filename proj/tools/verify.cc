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

#include "verify.h"

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "agqc/asymptotics.h"
#include "agqc/css.h"
#include "agqc/expand.h"
#include "agqc/riemann_roch.h"
#include "agqc/tables.h"

namespace agqc::tools {

namespace {

class Suite {
   public:
    explicit Suite(std::ostream &out) : out_(out) {}

    void run(const std::string &name, const std::function<void()> &body) {
        try {
            body();
            out_ << "PASS " << name << "\n";
        } catch (const std::exception &e) {
            ++failures_;
            out_ << "FAIL " << name << ": " << e.what() << "\n";
        }
    }
    int failures() const { return failures_; }

   private:
    std::ostream &out_;
    int failures_ = 0;
};

void check(bool cond, const std::string &what) {
    if (!cond) throw InternalError(what);
}

Matrix random_matrix(const Field &f, std::size_t rows, std::size_t cols, std::mt19937_64 &rng) {
    std::uniform_int_distribution<Field::Raw> pick(0, f.order() - 1);
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set_raw(r, c, pick(rng));
    return m;
}

// Divisor on up to three rational places with 2g - 2 < deg G < N - 3.
Divisor random_divisor(const Curve &c, std::mt19937_64 &rng) {
    const auto &places = c.rational_places();
    const std::int64_t lo = 2 * c.genus() - 1;
    const std::int64_t hi = c.rational_place_count() - 4;
    const std::int64_t deg = std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    const int t = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<std::size_t> idx(places.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    Divisor g;
    std::int64_t left = deg;
    for (int i = 0; i < t; ++i) {
        const std::int64_t a = i + 1 == t ? left : std::uniform_int_distribution<std::int64_t>(0, left)(rng);
        g.add(places[idx[i]], a);
        left -= a;
    }
    return g;
}

}  // namespace

int run_verify(std::ostream &out, const SearchOptions &opts, std::uint64_t seed) {
    Suite s(out);
    std::mt19937_64 rng(seed);

    s.run("field arithmetic", [&] {
        for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
            const Field f = Field::make(p, k);
            for (Field::Raw a = 1; a < f.order(); ++a) {
                check(f.mul(a, f.inv(a)) == 1, f.name() + ": a * a^-1 != 1");
                check(f.trace(a, 1) < static_cast<Field::Raw>(p), f.name() + ": trace outside F_p");
                const Field::Raw b = (a * 7 + 3) % f.order();
                check(f.frobenius(f.add(a, b), 1) == f.add(f.frobenius(a, 1), f.frobenius(b, 1)),
                      f.name() + ": Frobenius is not additive");
            }
        }
    });

    s.run("place counts and fibers", [&] {
        for (auto [q, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 4}, {4, 5}, {5, 2}, {5, 3}, {5, 6}, {7, 4}}) {
            const Curve c = Curve::make(q, m);
            const auto &places = c.rational_places();
            check(static_cast<std::int64_t>(places.size()) == 1 + q * (1 + (q - 1) * m), "place count");
            for (std::size_t i = 0; i + 1 < places.size(); i += q)
                check(c.fiber(places[i].x(), c.base_field()).size() == static_cast<std::size_t>(q), "fiber size");
        }
    });

    s.run("local expansion residual", [&] {
        const Curve c = Curve::make(5, 2);
        const Field &f = c.base_field();
        for (std::size_t i = 0; i < c.rational_places().size(); i += 7) {
            const Place &p = c.rational_places()[i];
            if (p.kind() != PlaceKind::kAffine) continue;
            const auto e = local_expansion(c, p, 12);
            const Monomial ys[] = {{0, 5}, {0, 1}, {2, 0}};
            const Field::Raw coeffs[] = {1, 1, f.neg(1)};
            for (auto v : expand_numerator(c, e, ys, coeffs)) check(v == 0, "residual is nonzero");
        }
    });

    s.run("Riemann-Roch dimension law", [&] {
        for (auto [q, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 4}, {5, 2}}) {
            const Curve c = Curve::make(q, m);
            for (int trial = 0; trial < 10; ++trial) {
                const Divisor g = random_divisor(c, rng);
                check(static_cast<std::int64_t>(rr_space(c, g).size()) == g.degree() + 1 - c.genus(),
                      "l(G) != deg G + 1 - g for " + g.to_string());
            }
        }
    });

    s.run("duality and nesting", [&] {
        const Curve c = Curve::make(3, 4);
        for (int trial = 0; trial < 10; ++trial) {
            const Divisor g = random_divisor(c, rng);
            const LinearCode code = evaluation_code(c, g);
            const LinearCode dual = omega_code(code);
            check((code.generator() * dual.generator().transpose()).is_zero(), "G H^T != 0");
            Divisor bigger = g;
            bigger.add(c.rational_places().back(), 1);
            if (bigger.degree() < static_cast<std::int64_t>(code.length()) && g.coefficient(Place::infinity()) > 0) {
                const LinearCode up = evaluation_code(c, bigger, default_evaluation_places(c, g));
                check(rowspace_contains(code.generator(), up.generator()), "C_L(G) not inside C_L(G + P)");
            }
        }
    });

    s.run("minimum weight search", [&] {
        const Field f9 = Field::make(3, 2);
        for (int trial = 0; trial < 10; ++trial) {
            const LinearCode code = LinearCode::from_generator(random_matrix(f9, 3, 10, rng));
            const auto ex = exhaustive_min_weight(code, opts);
            const auto bz = bz_min_weight(code, opts);
            check(bz.exact() && bz.upper == ex, "search disagrees with enumeration");
        }
    });

    s.run("expansion duality", [&] {
        const Field f9 = Field::make(3, 2);
        const auto basis = polynomial_basis(f9);
        for (int trial = 0; trial < 5; ++trial) {
            const LinearCode code = LinearCode::from_generator(random_matrix(f9, 3, 6, rng));
            check(verify_expansion_duality(code, basis), "[beta(C)]^perp != beta^perp(C^perp)");
        }
    });

    s.run("table reproduction", [&] {
        for (int which = 1; which <= 3; ++which)
            for (const auto &row : reproduce_table(which, true))
                check(row.match, "table " + std::to_string(which) + " row " + row.inputs() + " does not match");
    });

    s.run("tower schedules", [&] {
        for (std::uint64_t q : {5, 7, 8}) {
            const Rational c(1, 10);
            for (const auto &lv : gs_tower_metrics(q, 12)) {
                if (lv.genus <= 1) continue;
                const auto sched = two_point_schedule(lv, c);
                check(sched.rate > 0 && sched.relative_distance > 0, "nonpositive schedule column");
            }
        }
    });

    return s.failures();
}

}  // namespace agqc::tools
