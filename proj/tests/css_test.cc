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

#include "agqc/css.h"

#include <gtest/gtest.h>

#include <functional>

#include "agqc/minweight.h"

namespace agqc {
namespace {

std::string error_text(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.what();
    }
    return "";
}

TEST(SingletonDefectTest, Examples) {
    EXPECT_EQ(singleton_defect(46, 36, 4), 4);
    EXPECT_EQ(singleton_defect(26, 16, 3), 6);
    EXPECT_EQ(singleton_defect(27, 17, 3), 6);
    QuantumParams p{27, 17, 3, std::nullopt, 9};
    EXPECT_EQ(p.singleton_defect(), 6);
    p.d_exact = 4;
    EXPECT_EQ(p.singleton_defect(), 4);
    EXPECT_EQ(p.to_string(), "[[27, 17, 4]]_9");
    EXPECT_FALSE(QuantumParams{}.singleton_defect().has_value());
}

TEST(TPointParamsTest, OnePointHermitian) {
    const Curve c = Curve::make(3, 4);
    const std::int64_t a[] = {7}, b[] = {24};
    const QuantumParams p = t_point_params(c, a, b);
    EXPECT_EQ(p.to_string(), "[[27, 17, d>=3]]_9");
    EXPECT_EQ(p.singleton_defect(), 6);
    const std::int64_t a2[] = {15}, b2[] = {16};
    EXPECT_EQ(t_point_params(c, a2, b2).to_string(), "[[27, 1, d>=11]]_9");
}

TEST(TPointParamsTest, TwoPointShrinksLength) {
    const Curve c = Curve::make(3, 4);
    const std::int64_t a[] = {3, 4}, b[] = {10, 8};
    const QuantumParams p = t_point_params(c, a, b);
    EXPECT_EQ(p.n, 26);
    EXPECT_EQ(p.k, 11);
    EXPECT_EQ(p.d_lb, 3);
}

TEST(TPointParamsTest, RangeErrors) {
    const Curve c = Curve::make(3, 4);
    const std::int64_t lo[] = {4}, hi[] = {27}, ok[] = {10};
    EXPECT_NE(error_text([&] { t_point_params(c, lo, ok); }).find("2g - 2 < sum a fails"), std::string::npos);
    EXPECT_NE(error_text([&] { t_point_params(c, ok, hi); }).find("sum b < n fails"), std::string::npos);
    const std::int64_t big[] = {12};
    EXPECT_NE(error_text([&] { t_point_params(c, big, ok); }).find("a_1 <= b_1 fails"), std::string::npos);
    const std::int64_t two[] = {5, 5};
    EXPECT_THROW(t_point_params(c, two, ok), Error);
}

TEST(NonRationalParamsTest, DegreeTwoPlace) {
    const std::int64_t a[] = {11}, b[] = {13}, deg[] = {2};
    EXPECT_EQ(non_rational_params(46, 2, 25, a, b, deg).to_string(), "[[46, 4, d>=20]]_25");
    const std::int64_t a2[] = {4}, b2[] = {20};
    EXPECT_EQ(non_rational_params(46, 2, 25, a2, b2, deg).to_string(), "[[46, 32, d>=6]]_25");
    const std::int64_t bad[] = {23};
    EXPECT_NE(error_text([&] { non_rational_params(46, 2, 25, a, bad, deg); }).find("sum b < n fails"),
              std::string::npos);
    const std::int64_t zero[] = {0};
    EXPECT_THROW(non_rational_params(46, 2, 25, a, b, zero), Error);
}

TEST(CssBuildTest, OnePointHermitian) {
    const Curve c = Curve::make(3, 4);
    const CssCode code = one_point_build(c, 7, 24);
    EXPECT_EQ(code.params.to_string(), "[[27, 17, d>=3]]_9");
    EXPECT_EQ(code.stabilizers.h_x.rows(), 5u);
    EXPECT_EQ(code.stabilizers.h_z.rows(), 5u);
    EXPECT_TRUE((code.stabilizers.h_x * code.stabilizers.h_z.transpose()).is_zero());
}

TEST(CssBuildTest, SmallCodeDistance) {
    const Curve c = Curve::make(3, 2);
    const CssCode code = one_point_build(c, 3, 5);
    EXPECT_EQ(code.params.to_string(), "[[15, 2, d>=3]]_9");
    const CssDistance d = css_distance(code.c1, code.c2);
    EXPECT_TRUE(d.exact());
    EXPECT_GE(d.lower(), 3);
    EXPECT_EQ(d.x_side.lower, 10);
    EXPECT_EQ(d.z_side.lower, 3);
}

TEST(CssBuildTest, TwoPointNesting) {
    const Curve c = Curve::make(3, 4);
    const std::int64_t a[] = {3, 2}, b[] = {9, 6};
    const CssCode code = t_point_build(c, a, b);
    EXPECT_EQ(code.params.n, 26);
    EXPECT_EQ(code.params.k, 10);
    EXPECT_EQ(code.params.d_lb, 1);
    EXPECT_TRUE(rowspace_contains(code.c1.generator(), code.c2.generator()));
}

TEST(CssBuildTest, EqualCodesGiveNoLogicalQudits) {
    const Curve c = Curve::make(3, 4);
    const CssCode code = one_point_build(c, 8, 8);
    EXPECT_EQ(code.params.k, 0);
}

TEST(CssBuildTest, HyperellipticDegreeTwo) {
    const Curve c = Curve::make(5, 2);
    const CssCode a = hyperelliptic_build(c, 11, 13);
    EXPECT_EQ(a.params.to_string(), "[[46, 4, d>=20]]_25");
    const CssCode b = hyperelliptic_build(c, 4, 20);
    EXPECT_EQ(b.params.to_string(), "[[46, 32, d>=6]]_25");
    EXPECT_EQ(b.params.singleton_defect(), 4);
}

TEST(CssAssembleTest, RejectsNonNestedPair) {
    const Curve c = Curve::make(3, 4);
    const CssCode code = one_point_build(c, 7, 12);
    EXPECT_NE(error_text([&] { css_assemble(code.c2, code.c1); }).find("C1 ⊄ C2"), std::string::npos);
}

}  // namespace
}  // namespace agqc
