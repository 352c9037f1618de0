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

#ifndef AGQC_ASYMPTOTICS_H_
#define AGQC_ASYMPTOTICS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace agqc {

/// Exact rational with int64 numerator and positive denominator, always reduced.
class Rational {
   public:
    Rational(std::int64_t num = 0, std::int64_t den = 1);
    /// "3/10", "0.1", "2".
    static Rational parse(const std::string &text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const;

    friend bool operator==(const Rational &, const Rational &) = default;
    friend bool operator<(const Rational &a, const Rational &b);
    friend bool operator<=(const Rational &a, const Rational &b) { return !(b < a); }

   private:
    std::int64_t num_;
    std::int64_t den_;
};

/// One level of the Garcia-Stichtenoth tower over F_{q^2}.
struct TowerLevel {
    int index = 0;
    std::uint64_t q = 0;
    std::int64_t genus = 0;
    std::int64_t places = 0;  // lower bound (q^2 - q) q^(i-1)
    std::optional<Rational> ratio;  // places / genus; absent when genus = 0
};

std::vector<TowerLevel> gs_tower_metrics(std::uint64_t q, int levels);

struct RateSchedule {
    int level = 0;
    int t = 2;
    std::int64_t n = 0;
    std::int64_t dimension = 0;  // K
    std::int64_t sum_a = 0;
    std::int64_t sum_b = 0;
    std::vector<std::int64_t> a;  // per-point split
    std::vector<std::int64_t> b;
    std::int64_t d_lb = 0;
    Rational proof_bound;  // (N - K - 2g - t + 1) / 2, which is (N - K - 2g - 1) / 2 for t = 2
    double rate = 0;
    double relative_distance = 0;
};

/// Largest c for which the window is nonempty: 1 - 2/(q - 1).
Rational window_edge(std::uint64_t q);

RateSchedule t_point_schedule(const TowerLevel &level, const Rational &c, int t);
inline RateSchedule two_point_schedule(const TowerLevel &level, const Rational &c) {
    return t_point_schedule(level, c, 2);
}

/// Two-point schedule expanded to F_p, with q = p^r: length 2r n, dimension 2r K.
RateSchedule expansion_schedule(const TowerLevel &level, const Rational &c, std::uint64_t p, int r);

/// (1/2)(1 - 2/(q - 1) - c)
double limit_relative_distance(std::uint64_t q, const Rational &c);
/// (1/4r)(1 - 2/(p^r - 1) - c)
double limit_prime_relative_distance(std::uint64_t p, int r, const Rational &c);

}  // namespace agqc

#endif  // AGQC_ASYMPTOTICS_H_
