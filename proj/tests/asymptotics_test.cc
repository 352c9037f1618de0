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

#include "agqc/asymptotics.h"

#include <gtest/gtest.h>

#include <cmath>

#include "agqc/error.h"

namespace agqc {
namespace {

TEST(RationalTest, ParseAndOrder) {
    EXPECT_EQ(Rational::parse("3/10"), Rational(3, 10));
    EXPECT_EQ(Rational::parse("0.1"), Rational(1, 10));
    EXPECT_EQ(Rational::parse("2"), Rational(2));
    EXPECT_EQ(Rational(4, -8).to_string(), "-1/2");
    EXPECT_EQ(Rational(6, 3).to_string(), "2");
    EXPECT_TRUE(Rational(1, 3) < Rational(1, 2));
    EXPECT_THROW(Rational::parse("1/0"), Error);
    EXPECT_THROW(Rational::parse("abc"), Error);
}

TEST(TowerTest, ClosedForms) {
    const auto lv = gs_tower_metrics(2, 4);
    ASSERT_EQ(lv.size(), 4u);
    EXPECT_EQ(lv[0].genus, 0);
    EXPECT_FALSE(lv[0].ratio.has_value());
    // q = 2: g_2 = (2 - 1)^2, g_3 = (2 - 1)(4 - 1), g_4 = (4 - 1)^2.
    EXPECT_EQ(lv[1].genus, 1);
    EXPECT_EQ(lv[2].genus, 3);
    EXPECT_EQ(lv[3].genus, 9);
    EXPECT_EQ(lv[3].places, 2 * 8);
    EXPECT_EQ(*lv[3].ratio, Rational(16, 9));
}

TEST(TowerTest, RatioApproachesDrinfeldVladut) {
    for (std::uint64_t q : {4u, 5u, 7u, 8u}) {
        const auto lv = gs_tower_metrics(q, 12);
        EXPECT_LT(std::abs(lv[7].ratio->to_double() - static_cast<double>(q - 1)), 0.05 * static_cast<double>(q - 1))
            << q;
        double prev_gap = INFINITY;
        for (std::size_t i = 1; i < lv.size(); ++i) {
            ASSERT_TRUE(lv[i].ratio.has_value());
            if (i >= 2) EXPECT_TRUE(*lv[i].ratio < *lv[i - 1].ratio || *lv[i].ratio == *lv[i - 1].ratio);
            const double gap = std::abs(lv[i].ratio->to_double() - static_cast<double>(q - 1));
            EXPECT_LE(gap, prev_gap);
            prev_gap = gap;
        }
    }
}

TEST(WindowTest, EdgeAndEmptyWindow) {
    EXPECT_EQ(window_edge(5), Rational(1, 2));
    EXPECT_EQ(window_edge(4), Rational(1, 3));
    try {
        window_edge(3);
        FAIL() << "expected an error";
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find("no positive-rate window"), std::string::npos);
    }
    const auto lv = gs_tower_metrics(5, 6);
    EXPECT_THROW(two_point_schedule(lv[5], Rational(0)), Error);
    EXPECT_THROW(two_point_schedule(lv[5], Rational(3, 5)), Error);
}

TEST(ScheduleTest, TwoPointFloorFormula) {
    const auto lv = gs_tower_metrics(5, 6);
    const TowerLevel &l = lv[5];
    const RateSchedule s = two_point_schedule(l, Rational(1, 10));
    EXPECT_EQ(s.n, l.places - 2);
    EXPECT_EQ(s.dimension, std::llround(0.1 * static_cast<double>(l.places)));
    EXPECT_EQ(s.sum_b, (l.places + 2 * l.genus + s.dimension - 4) / 2);
    EXPECT_EQ(s.sum_b - s.sum_a, s.dimension);
    EXPECT_EQ(s.a.size(), 2u);
    EXPECT_EQ(s.a[0] + s.a[1], s.sum_a);
    EXPECT_EQ(s.b[0] + s.b[1], s.sum_b);
    EXPECT_TRUE(Rational(s.proof_bound) <= Rational(s.d_lb));
    EXPECT_EQ(s.proof_bound, Rational(l.places - s.dimension - 2 * l.genus - 1, 2));
}

TEST(ScheduleTest, TPointVariants) {
    const auto lv = gs_tower_metrics(7, 8);
    const TowerLevel &l = lv[7];
    const Rational c(1, 5);
    const RateSchedule two = two_point_schedule(l, c), t2 = t_point_schedule(l, c, 2);
    EXPECT_EQ(two.sum_b, t2.sum_b);
    EXPECT_EQ(two.d_lb, t2.d_lb);
    const RateSchedule t1 = t_point_schedule(l, c, 1), t3 = t_point_schedule(l, c, 3);
    EXPECT_EQ(t1.n - t3.n, 2);
    EXPECT_EQ(t1.sum_b, (l.places + 2 * l.genus + t1.dimension - 3) / 2);
    EXPECT_EQ(t3.sum_b, (l.places + 2 * l.genus + t3.dimension - 5) / 2);
    EXPECT_EQ(t3.a.size(), 3u);
}

TEST(ScheduleTest, FeasibilityAndPositivityAcrossWindow) {
    for (std::uint64_t q : {4u, 5u, 7u, 8u}) {
        const auto lv = gs_tower_metrics(q, 10);
        const Rational edge = window_edge(q);
        for (int step = 1; step < 10; ++step) {
            const Rational c(edge.num() * step, edge.den() * 10);
            for (const auto &l : lv) {
                if (l.genus <= 1) continue;
                for (int t : {1, 2, 4}) {
                    const RateSchedule s = t_point_schedule(l, c, t);
                    EXPECT_GT(s.dimension, 0);
                    EXPECT_LE(s.dimension, l.places - 2 * l.genus - t);
                    EXPECT_LT(2 * l.genus - 2, s.sum_a);
                    EXPECT_LT(s.sum_a, s.sum_b);
                    EXPECT_LT(s.sum_b, s.n);
                    EXPECT_GT(s.rate, 0);
                    EXPECT_GT(s.relative_distance, 0);
                }
            }
        }
    }
}

TEST(ScheduleTest, LimitsAtHighLevel) {
    const auto lv = gs_tower_metrics(5, 14);
    const RateSchedule s = two_point_schedule(lv.back(), Rational(1, 10));
    EXPECT_NEAR(s.rate, 0.1, 1e-6);
    EXPECT_NEAR(limit_relative_distance(5, Rational(1, 10)), 0.2, 1e-12);
    EXPECT_NEAR(s.relative_distance, 0.2, 1e-4);
    // The t dependence fades: t/N -> 0.
    const RateSchedule s5 = t_point_schedule(lv.back(), Rational(1, 10), 5);
    EXPECT_NEAR(s.relative_distance, s5.relative_distance, 1e-6);
}

TEST(ScheduleTest, WindowEdgeGivesVanishingDistance) {
    const auto lv = gs_tower_metrics(7, 14);
    const RateSchedule s = two_point_schedule(lv.back(), window_edge(7));
    EXPECT_NEAR(s.relative_distance, 0.0, 1e-4);
    EXPECT_NEAR(limit_relative_distance(7, window_edge(7)), 0.0, 1e-12);
}

TEST(ExpansionScheduleTest, ColumnsScaleByTwoR) {
    const auto lv = gs_tower_metrics(5, 10);
    const Rational c(1, 10);
    const RateSchedule base = two_point_schedule(lv.back(), c);
    const RateSchedule e = expansion_schedule(lv.back(), c, 5, 1);
    EXPECT_EQ(e.n, 2 * (lv.back().places - 2));
    EXPECT_EQ(e.dimension, 2 * base.dimension);
    EXPECT_NEAR(limit_prime_relative_distance(5, 1, c), 0.1, 1e-12);
    EXPECT_NEAR(e.relative_distance, 0.1, 1e-3);

    const auto lv8 = gs_tower_metrics(8, 10);
    const RateSchedule e8 = expansion_schedule(lv8.back(), Rational(1, 5), 2, 3);
    EXPECT_EQ(e8.n, 6 * (lv8.back().places - 2));
    EXPECT_THROW(expansion_schedule(lv8.back(), c, 2, 2), Error);
    EXPECT_THROW(expansion_schedule(lv8.back(), c, 4, 1), Error);
}

}  // namespace
}  // namespace agqc
