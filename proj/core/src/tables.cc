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

#include "agqc/tables.h"

#include <sstream>

namespace agqc {

namespace {

TableFixture t1(std::int64_t n, std::int64_t k, std::int64_t d, std::uint64_t field, std::uint32_t q, std::uint32_t m,
                std::int64_t a, std::int64_t b) {
    return TableFixture{1, n, k, d, field, q, m, {a}, {b}};
}

TableFixture t2(std::int64_t n, std::int64_t k, std::int64_t d, std::uint64_t field, std::uint32_t q, std::uint32_t m,
                std::int64_t a1, std::int64_t a2, std::int64_t b1, std::int64_t b2) {
    return TableFixture{2, n, k, d, field, q, m, {a1, a2}, {b1, b2}};
}

TableFixture t3(std::int64_t n, std::int64_t k, std::int64_t d, std::uint64_t field, std::uint32_t q, std::uint32_t m,
                std::int64_t t1v, std::int64_t t2v) {
    return TableFixture{3, n, k, d, field, q, m, {t1v}, {t2v}};
}

const std::vector<TableFixture> kTable1 = {
    t1(27, 17, 3, 9, 3, 4, 7, 24),       t1(27, 15, 4, 9, 3, 4, 8, 23),       t1(27, 13, 5, 9, 3, 4, 9, 22),
    t1(27, 11, 6, 9, 3, 4, 10, 21),      t1(27, 9, 7, 9, 3, 4, 11, 20),       t1(27, 7, 8, 9, 3, 4, 12, 19),
    t1(27, 5, 9, 9, 3, 4, 13, 18),       t1(27, 3, 10, 9, 3, 4, 14, 17),      t1(27, 1, 11, 9, 3, 4, 15, 16),
    t1(64, 48, 3, 16, 4, 5, 13, 61),     t1(64, 46, 4, 16, 4, 5, 14, 60),     t1(64, 44, 5, 16, 4, 5, 15, 59),
    t1(64, 24, 15, 16, 4, 5, 25, 49),    t1(64, 4, 25, 16, 4, 5, 35, 39),     t1(64, 2, 26, 16, 4, 5, 36, 38),
    t1(65, 53, 3, 25, 5, 3, 9, 62),      t1(65, 51, 4, 25, 5, 3, 10, 61),     t1(65, 49, 5, 25, 5, 3, 11, 60),
    t1(65, 9, 25, 25, 5, 3, 31, 40),     t1(175, 153, 3, 49, 7, 4, 19, 172),  t1(175, 151, 4, 49, 7, 4, 20, 171),
    t1(175, 149, 5, 49, 7, 4, 21, 170),  t1(175, 109, 25, 49, 7, 4, 41, 150), t1(175, 31, 64, 49, 7, 4, 80, 111),
    t1(175, 1, 79, 49, 7, 4, 95, 96),
};

const std::vector<TableFixture> kTable2 = {
    t2(26, 16, 3, 9, 3, 4, 3, 4, 7, 16),  t2(26, 14, 4, 9, 3, 4, 3, 5, 7, 15), t2(26, 12, 5, 9, 3, 4, 3, 6, 7, 14),
    t2(26, 4, 9, 9, 3, 4, 3, 10, 7, 10),  t2(26, 2, 10, 9, 3, 4, 4, 10, 6, 10),
};

const std::vector<TableFixture> kTable3 = {
    t3(46, 36, 4, 25, 5, 2, 3, 21),
    t3(46, 32, 6, 25, 5, 2, 4, 20),
    t3(46, 28, 8, 25, 5, 2, 5, 19),
    t3(46, 4, 20, 25, 5, 2, 11, 13),
};

}  // namespace

const std::vector<TableFixture> &table_fixtures(int which) {
    switch (which) {
        case 1:
            return kTable1;
        case 2:
            return kTable2;
        case 3:
            return kTable3;
    }
    throw Error("no table " + std::to_string(which));
}

std::string TableRow::inputs() const {
    std::ostringstream os;
    os << "q=" << fixture.q << " m=" << fixture.m;
    if (fixture.table == 3) {
        os << " t1=" << fixture.a[0] << " t2=" << fixture.b[0];
        return os.str();
    }
    for (std::size_t i = 0; i < fixture.a.size(); ++i) os << " a" << (fixture.a.size() > 1 ? std::to_string(i + 1) : "") << "=" << fixture.a[i];
    for (std::size_t i = 0; i < fixture.b.size(); ++i) os << " b" << (fixture.b.size() > 1 ? std::to_string(i + 1) : "") << "=" << fixture.b[i];
    return os.str();
}

std::vector<TableRow> reproduce_table(int which, bool build) {
    std::vector<TableRow> out;
    for (const auto &fx : table_fixtures(which)) {
        TableRow row;
        row.fixture = fx;
        const Curve c = Curve::make(fx.q, fx.m);
        if (which == 3) {
            const std::int64_t deg[] = {2};
            row.computed = non_rational_params(c.rational_place_count(), c.genus(), c.base_field().order(), fx.a,
                                               fx.b, deg);
        } else {
            row.computed = t_point_params(c, fx.a, fx.b);
        }
        const bool explicit_build = build && fx.q <= 5;
        if (explicit_build) {
            const CssCode code = which == 3 ? hyperelliptic_build(c, fx.a[0], fx.b[0]) : t_point_build(c, fx.a, fx.b);
            row.matrix_k = code.params.k;
            row.nested = rowspace_contains(code.c1.generator(), code.c2.generator());
        }
        row.match = row.computed.n == fx.n && row.computed.k == fx.k && row.computed.d_lb == fx.d &&
                    row.computed.q == fx.field && (!row.matrix_k || *row.matrix_k == fx.k) &&
                    (!row.nested || *row.nested);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace agqc
