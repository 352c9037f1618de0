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

#include <cmath>
#include <limits>
#include <numeric>

#include "agqc/error.h"
#include "agqc/gf.h"

namespace agqc {

namespace {

__extension__ using i128 = __int128;

std::int64_t narrow(i128 v, const char *what) {
    require(v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min(),
            std::string(what) + " overflows 64 bits");
    return static_cast<std::int64_t>(v);
}

i128 ipow(std::uint64_t b, int e) {
    i128 r = 1;
    for (int i = 0; i < e; ++i) {
        r *= b;
        require(r <= std::numeric_limits<std::int64_t>::max(), "tower level too large");
    }
    return r;
}

i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    require(den != 0, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / (g ? g : 1);
    den_ = den / (g ? g : 1);
}

Rational Rational::parse(const std::string &text) {
    require(!text.empty(), "empty rational");
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            std::size_t used = 0;
            const std::int64_t a = std::stoll(text.substr(0, slash), &used);
            require(used == slash, "bad rational: " + text);
            const std::string rest = text.substr(slash + 1);
            const std::int64_t b = std::stoll(rest, &used);
            require(used == rest.size(), "bad rational: " + text);
            return Rational(a, b);
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos) {
            std::size_t used = 0;
            const std::int64_t a = std::stoll(text, &used);
            require(used == text.size(), "bad rational: " + text);
            return Rational(a, 1);
        }
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        require(frac.size() <= 17, "too many decimal digits: " + text);
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            require(frac[i] >= '0' && frac[i] <= '9', "bad rational: " + text);
            den *= 10;
        }
        const bool negative = !whole.empty() && whole[0] == '-';
        const std::int64_t w = (whole.empty() || whole == "-") ? 0 : std::stoll(whole);
        const std::int64_t f = frac.empty() ? 0 : std::stoll(frac);
        const i128 num = static_cast<i128>(w < 0 ? -w : w) * den + f;
        return Rational(narrow(negative ? -num : num, "rational"), den);
    } catch (const std::logic_error &) {
        throw Error("bad rational: " + text);
    }
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

bool operator<(const Rational &a, const Rational &b) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

std::vector<TowerLevel> gs_tower_metrics(std::uint64_t q, int levels) {
    require(levels >= 1, "levels must be at least 1");
    prime_power_decompose(q);
    std::vector<TowerLevel> out;
    for (int i = 1; i <= levels; ++i) {
        TowerLevel lv;
        lv.index = i;
        lv.q = q;
        const i128 g = (i % 2 == 0) ? (ipow(q, i / 2) - 1) * (ipow(q, i / 2) - 1)
                                    : (ipow(q, (i - 1) / 2) - 1) * (ipow(q, (i + 1) / 2) - 1);
        lv.genus = narrow(g, "genus");
        lv.places = narrow(static_cast<i128>(q * q - q) * ipow(q, i - 1), "place count");
        if (lv.genus > 0) lv.ratio = Rational(lv.places, lv.genus);
        out.push_back(lv);
    }
    return out;
}

Rational window_edge(std::uint64_t q) {
    if (q <= 3) throw Error("no positive-rate window for q = " + std::to_string(q));
    return Rational(static_cast<std::int64_t>(q) - 3, static_cast<std::int64_t>(q) - 1);
}

RateSchedule t_point_schedule(const TowerLevel &level, const Rational &c, int t) {
    const Rational edge = window_edge(level.q);
    require(Rational(0) < c && c <= edge, "c = " + c.to_string() + " lies outside the window (0, " +
                                              edge.to_string() + "]");
    require(t >= 1 && t < level.places, "support size out of range");
    const i128 big_n = level.places;
    const i128 g = level.genus;
    const i128 k_max = big_n - 2 * g - t;
    require(k_max >= 1, "level " + std::to_string(level.index) + " admits no dimension");
    i128 k = floor_div(2 * static_cast<i128>(c.num()) * big_n + c.den(), 2 * static_cast<i128>(c.den()));
    k = std::clamp<i128>(k, 1, k_max);

    RateSchedule s;
    s.level = level.index;
    s.t = t;
    s.n = narrow(big_n - t, "length");
    s.dimension = narrow(k, "dimension");
    s.sum_b = narrow(floor_div(big_n + 2 * g + k - t - 2, 2), "sum b");
    s.sum_a = s.sum_b - s.dimension;
    ensure(2 * level.genus - 2 < s.sum_a && s.sum_a < s.sum_b && s.sum_b < s.n,
           "schedule violates 2g - 2 < sum a < sum b < n");
    for (int j = 0; j < t; ++j) {
        s.a.push_back(s.sum_a / t + (j < s.sum_a % t ? 1 : 0));
        s.b.push_back(s.sum_b / t + (j < s.sum_b % t ? 1 : 0));
    }
    s.d_lb = std::min(s.n - s.sum_b, s.sum_a - (2 * level.genus - 2));
    s.proof_bound = Rational(narrow(big_n - k - 2 * g - t + 1, "bound"), 2);
    ensure(!(Rational(s.d_lb) < s.proof_bound), "distance bound below (N - K - 2g - t + 1)/2");
    s.rate = static_cast<double>(s.dimension) / static_cast<double>(s.n);
    s.relative_distance = static_cast<double>(s.d_lb) / static_cast<double>(s.n);
    return s;
}

RateSchedule expansion_schedule(const TowerLevel &level, const Rational &c, std::uint64_t p, int r) {
    require(is_prime(p) && r >= 1, "expansion needs a prime p and r >= 1");
    require(static_cast<i128>(ipow(p, r)) == static_cast<i128>(level.q),
            std::to_string(level.q) + " is not " + std::to_string(p) + "^" + std::to_string(r));
    RateSchedule s = two_point_schedule(level, c);
    s.n *= 2 * r;
    s.dimension *= 2 * r;
    s.rate = static_cast<double>(s.dimension) / static_cast<double>(s.n);
    s.relative_distance = static_cast<double>(s.d_lb) / static_cast<double>(s.n);
    return s;
}

double limit_relative_distance(std::uint64_t q, const Rational &c) {
    return 0.5 * (1.0 - 2.0 / (static_cast<double>(q) - 1.0) - c.to_double());
}

double limit_prime_relative_distance(std::uint64_t p, int r, const Rational &c) {
    const double pr = std::pow(static_cast<double>(p), r);
    return (1.0 - 2.0 / (pr - 1.0) - c.to_double()) / (4.0 * r);
}

}  // namespace agqc
