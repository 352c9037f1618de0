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

// Acceptance checks: one PASS/FAIL line per criterion, with indented detail lines.
// Usage: acceptance [--criterion N]

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "agqc/asymptotics.h"
#include "agqc/css.h"
#include "agqc/expand.h"
#include "agqc/minweight.h"
#include "agqc/riemann_roch.h"
#include "agqc/tables.h"

namespace {

using namespace agqc;
using Clock = std::chrono::steady_clock;

class Report {
   public:
    void line(bool ok, const std::string &what) {
        details_ << "    " << (ok ? "PASS" : "FAIL") << " " << what << "\n";
        ok_ = ok_ && ok;
    }
    bool ok() const { return ok_; }
    std::string details() const { return details_.str(); }

   private:
    bool ok_ = true;
    std::ostringstream details_;
};

std::string seconds(double s) {
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << s << " s";
    return os.str();
}

void check_runtime(Report &r, Clock::time_point start, double limit) {
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    r.line(s < limit, "runtime " + seconds(s) + " < " + seconds(limit));
}

Divisor random_divisor(const Curve &c, std::int64_t degree, std::mt19937_64 &rng, bool allow_degree2) {
    const auto &places = c.rational_places();
    Divisor g;
    std::int64_t left = degree;
    if (allow_degree2 && rng() % 3 == 0) {
        const std::int64_t a = static_cast<std::int64_t>(rng() % (left / 2 + 1));
        g.add(c.find_degree2_place(), a);
        left -= 2 * a;
    }
    const int t = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < t; ++i) {
        const std::int64_t a = i + 1 == t ? left : static_cast<std::int64_t>(rng() % (left + 1));
        g.add(places[rng() % places.size()], a);
        left -= a;
    }
    return g;
}

LinearCode random_code(const Field &f, std::size_t k, std::size_t n, std::mt19937_64 &rng) {
    Matrix m(f, k, n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < n; ++j) m.set_raw(r, j, static_cast<Field::Raw>(rng() % f.order()));
    return LinearCode::from_generator(m);
}

std::vector<Element> random_basis(const Field &f, std::mt19937_64 &rng) {
    while (true) {
        std::vector<Element> b;
        for (std::uint32_t i = 0; i < f.degree(); ++i) b.push_back(f.element(static_cast<Field::Raw>(rng() % f.order())));
        try {
            dual_basis(b);
            return b;
        } catch (const Error &) {
        }
    }
}

bool table_rows(Report &r, int which) {
    bool all = true;
    for (const auto &row : reproduce_table(which, true)) {
        std::string detail = row.inputs() + " -> " + row.computed.to_string();
        if (row.matrix_k) detail += " matrix k=" + std::to_string(*row.matrix_k);
        if (!row.match) {
            r.line(false, detail);
            all = false;
        }
    }
    return all;
}

bool criterion_1(Report &r) {
    const auto start = Clock::now();
    const auto rows = reproduce_table(1, true);
    std::size_t matches = 0, built = 0, formula_only = 0;
    bool layout_ok = true;
    for (const auto &row : rows) {
        matches += row.match;
        if (!row.match) r.line(false, row.inputs() + " -> " + row.computed.to_string());
        if (row.fixture.q == 7) {
            formula_only += !row.matrix_k.has_value();
            layout_ok = layout_ok && !row.matrix_k;
        } else {
            built += row.matrix_k.has_value();
            layout_ok = layout_ok && row.matrix_k && *row.matrix_k == row.computed.k;
        }
    }
    r.line(matches == rows.size(), std::to_string(matches) + "/" + std::to_string(rows.size()) + " rows match");
    r.line(layout_ok, std::to_string(built) + " rows built with matrix k = formula k, " +
                          std::to_string(formula_only) + " q=7 rows formula-level");
    r.line(rows[0].computed.to_string() == "[[27, 17, d>=3]]_9", "(3,4,7,24) -> " + rows[0].computed.to_string());
    r.line(rows[23].computed.to_string() == "[[175, 31, d>=64]]_49",
           "(7,4,80,111) -> " + rows[23].computed.to_string());
    check_runtime(r, start, 5);
    return r.ok();
}

bool criterion_2(Report &r) {
    const auto start = Clock::now();
    const Curve c = Curve::make(3, 4);
    r.line(table_rows(r, 2), "all 5 rows match");
    for (const auto &fx : table_fixtures(2)) {
        const CssCode code = t_point_build(c, fx.a, fx.b);
        const auto k1 = static_cast<std::int64_t>(code.c1.dimension());
        const auto k2 = static_cast<std::int64_t>(code.c2.dimension());
        const bool ok = k1 == fx.a[0] + fx.a[1] - c.genus() + 1 && k2 == fx.b[0] + fx.b[1] - c.genus() + 1 &&
                        rowspace_contains(code.c1.generator(), code.c2.generator());
        std::ostringstream os;
        os << "a=(" << fx.a[0] << "," << fx.a[1] << ") b=(" << fx.b[0] << "," << fx.b[1] << ") k1=" << k1
           << " k2=" << k2 << " nested";
        r.line(ok, os.str());
    }
    check_runtime(r, start, 30);
    return r.ok();
}

bool criterion_3(Report &r) {
    const auto start = Clock::now();
    const Curve c = Curve::make(5, 2);
    r.line(table_rows(r, 3), "all 4 rows match");
    for (const auto &fx : table_fixtures(3)) {
        const CssCode code = hyperelliptic_build(c, fx.a[0], fx.b[0]);
        const auto sd = code.params.singleton_defect();
        const bool ok = code.params.k == 2 * (fx.b[0] - fx.a[0]) && sd && *sd <= 4;
        r.line(ok, "t1=" + std::to_string(fx.a[0]) + " t2=" + std::to_string(fx.b[0]) + " -> " +
                       code.params.to_string() + " SD=" + (sd ? std::to_string(*sd) : "?"));
    }
    check_runtime(r, start, 120);
    return r.ok();
}

bool criterion_4(Report &r) {
    std::mt19937_64 rng(20261014);
    const std::pair<std::uint32_t, std::uint32_t> curves[] = {{3, 2}, {3, 4}, {4, 5}, {5, 2}, {5, 3}};
    int failures = 0, total = 0;
    for (int i = 0; i < 200; ++i) {
        const auto [q, m] = curves[i % 5];
        const Curve c = Curve::make(q, m);
        const std::int64_t deg = 2 * c.genus() - 1 + static_cast<std::int64_t>(rng() % 15);
        const Divisor g = random_divisor(c, deg, rng, q == 5 && m == 2);
        ++total;
        try {
            const auto dim = static_cast<std::int64_t>(rr_space(c, g).size());
            if (dim != g.degree() + 1 - c.genus()) {
                ++failures;
                r.line(false, c.describe() + " G = " + g.to_string() + " dim " + std::to_string(dim));
            }
        } catch (const std::exception &e) {
            ++failures;
            r.line(false, c.describe() + " G = " + g.to_string() + ": " + e.what());
        }
    }
    r.line(failures == 0, std::to_string(total) + " divisors, " + std::to_string(failures) + " failures");
    return r.ok();
}

bool criterion_5(Report &r) {
    std::mt19937_64 rng(5);
    const std::pair<std::uint32_t, std::uint32_t> curves[] = {{3, 2}, {3, 4}, {4, 5}, {5, 2}};
    int failures = 0;
    for (int i = 0; i < 50; ++i) {
        const auto [q, m] = curves[i % 4];
        const Curve c = Curve::make(q, m);
        const std::int64_t g = c.genus();
        const std::int64_t span = c.rational_place_count() - 3 - (2 * g - 1);
        const std::int64_t deg = 2 * g - 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(span));
        Divisor div;
        div.add(Place::infinity(), deg - deg / 3);
        div.add(c.rational_places()[rng() % (c.rational_places().size() - 1)], deg / 3);
        const LinearCode code = evaluation_code(c, div);
        const LinearCode dual = omega_code(code);
        const auto n = static_cast<std::int64_t>(code.length());
        const bool ok = static_cast<std::int64_t>(dual.dimension()) == n + g - 1 - deg &&
                        (code.generator() * dual.generator().transpose()).is_zero();
        if (!ok) {
            ++failures;
            r.line(false, c.describe() + " G = " + div.to_string());
        }
    }
    r.line(failures == 0, "50 codes: dual dimension n + g - 1 - deg G and G H^T = 0, " + std::to_string(failures) +
                              " failures");
    return r.ok();
}

bool criterion_6(Report &r) {
    const auto start = Clock::now();
    int pairs = 0, bad = 0, exact = 0;
    auto check_pairs = [&](const Curve &c, std::int64_t a_max, std::int64_t b_max) {
        const std::int64_t n = c.rational_place_count() - 1;
        for (std::int64_t a = 2 * c.genus() - 1; a <= a_max; ++a)
            for (std::int64_t b = a + 1; b <= b_max && b < n; ++b) {
                const CssCode code = one_point_build(c, a, b);
                const CssDistance d = css_distance(code.c1, code.c2);
                ++pairs;
                exact += d.exact();
                if (d.lower() < *code.params.d_lb) {
                    ++bad;
                    r.line(false, c.describe() + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                      " distance " + std::to_string(d.lower()) + " < " +
                                      std::to_string(*code.params.d_lb));
                }
            }
    };
    check_pairs(Curve::make(3, 2), 14, 14);
    // k2 = b - g + 1 <= 6 on the Hermitian curve.
    check_pairs(Curve::make(3, 4), 8, 8);
    r.line(bad == 0, std::to_string(pairs) + " CSS pairs, coset weights >= designed bound (" + std::to_string(exact) +
                         " exact)");

    std::mt19937_64 rng(6);
    const Field fields[] = {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2), Field::make(3, 2)};
    int agree = 0;
    for (int i = 0; i < 40; ++i) {
        const Field &f = fields[i % 4];
        const std::size_t k = 2 + rng() % 4, n = k + 4 + rng() % 8;
        const LinearCode code = random_code(f, k, n, rng);
        const WeightBracket b = bz_min_weight(code);
        agree += b.exact() && b.upper == exhaustive_min_weight(code);
    }
    r.line(agree == 40, "bz_min_weight = exhaustive on " + std::to_string(agree) + "/40 random codes");
    check_runtime(r, start, 600);
    return r.ok();
}

bool criterion_7(Report &r) {
    std::mt19937_64 rng(7);
    int good9 = 0, good25 = 0;
    const Field f9 = Field::make(3, 2), f25 = Field::make(5, 2);
    for (int i = 0; i < 20; ++i)
        good9 += verify_expansion_duality(random_code(f9, 1 + rng() % 5, 6 + rng() % 5, rng), random_basis(f9, rng));
    for (int i = 0; i < 10; ++i)
        good25 += verify_expansion_duality(random_code(f25, 1 + rng() % 4, 5 + rng() % 4, rng), random_basis(f25, rng));
    r.line(good9 == 20, std::to_string(good9) + "/20 codes over F_9");
    r.line(good25 == 10, std::to_string(good25) + "/10 codes over F_25");
    const CssCode q9 = one_point_build(Curve::make(3, 4), 7, 24);
    const CssCode q3 = expanded_css(q9.c1, q9.c2, 3);
    r.line(q3.params.to_string() == "[[54, 34, d>=3]]_3", "expanded (7,24) pair -> " + q3.params.to_string());
    return r.ok();
}

bool criterion_8(Report &r) {
    const auto start = Clock::now();
    constexpr double kTolerance = 1e-6;
    struct Case {
        std::uint64_t q, p;
        int rr;
    };
    for (const Case cs : {Case{5, 5, 1}, Case{7, 7, 1}, Case{8, 2, 3}}) {
        const std::string tag = "q^2=" + std::to_string(cs.q * cs.q);
        const auto levels = gs_tower_metrics(cs.q, 14);
        const double ratio8 = levels[7].ratio->to_double();
        const double target = static_cast<double>(cs.q - 1);
        r.line(std::abs(ratio8 - target) <= 0.05 * target,
               tag + " level 8 ratio " + std::to_string(ratio8) + " within 5% of " + std::to_string(target));

        const Rational edge = window_edge(cs.q);
        bool positive = true;
        double worst = 0, worst_prime = 0;
        for (int step = 1; step < 20; ++step) {
            const Rational c(edge.num() * step, edge.den() * 20);
            for (const auto &lv : levels) {
                if (lv.genus <= 1) continue;
                for (int t : {1, 2, 3}) {
                    const RateSchedule s = t_point_schedule(lv, c, t);
                    positive = positive && s.rate > 0 && s.relative_distance > 0;
                }
            }
            const RateSchedule top = two_point_schedule(levels.back(), c);
            worst = std::max(worst, std::abs(top.relative_distance - limit_relative_distance(cs.q, c)));
            const RateSchedule e = expansion_schedule(levels.back(), c, cs.p, cs.rr);
            worst_prime =
                std::max(worst_prime, std::abs(e.relative_distance - limit_prime_relative_distance(cs.p, cs.rr, c)));
        }
        std::ostringstream dev, dev_prime;
        dev.precision(3);
        dev_prime.precision(3);
        dev << std::scientific << worst;
        dev_prime << std::scientific << worst_prime;
        r.line(positive, tag + " t in {1,2,3} schedules positive across the window");
        r.line(worst <= kTolerance, tag + " level 14 relative distance deviation " + dev.str() + " <= 1e-6");
        r.line(worst_prime <= kTolerance, tag + " F_" + std::to_string(cs.p) + " (r=" + std::to_string(cs.rr) +
                                              ") level 14 deviation " + dev_prime.str() + " <= 1e-6");
    }
    check_runtime(r, start, 1);
    return r.ok();
}

const std::vector<std::pair<std::string, std::function<bool(Report &)>>> kCriteria = {
    {"one-point table reproduction", criterion_1},
    {"two-point table construction", criterion_2},
    {"degree-2 table construction", criterion_3},
    {"Riemann-Roch dimension law", criterion_4},
    {"duality law", criterion_5},
    {"desk-scale distance certification", criterion_6},
    {"expansion duality", criterion_7},
    {"asymptotic schedules", criterion_8},
};

}  // namespace

int main(int argc, char **argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 2;
        }
    }
    if (only < 0 || only > static_cast<int>(kCriteria.size())) {
        std::cerr << "no criterion " << only << "\n";
        return 2;
    }
    bool all = true;
    for (std::size_t i = 0; i < kCriteria.size(); ++i) {
        if (only && static_cast<int>(i + 1) != only) continue;
        Report report;
        bool ok = false;
        try {
            ok = kCriteria[i].second(report);
        } catch (const std::exception &e) {
            report.line(false, std::string("exception: ") + e.what());
        }
        ok = ok && report.ok();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << kCriteria[i].first << "\n"
                  << report.details() << std::flush;
        all = all && ok;
    }
    return all ? 0 : 1;
}
