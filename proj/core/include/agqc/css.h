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

#ifndef AGQC_CSS_H_
#define AGQC_CSS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "agqc/agcode.h"

namespace agqc {

struct QuantumParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::optional<std::int64_t> d_lb;
    std::optional<std::int64_t> d_exact;
    std::uint64_t q = 0;

    /// n + 2 - k - 2 d for the best known distance (exact if present, else the bound).
    std::optional<std::int64_t> singleton_defect() const;
    /// "[[27, 17, d>=3]]_9"
    std::string to_string() const;
};

/// X-type rows generate C1, Z-type rows generate C2^perp.
struct StabilizerPair {
    Matrix h_x;
    Matrix h_z;
};

struct CssCode {
    QuantumParams params;
    StabilizerPair stabilizers;
    LinearCode c1;
    LinearCode c2;
};

std::int64_t singleton_defect(std::int64_t n, std::int64_t k, std::int64_t d);

/// CSS code of C1 inside C2; throws "C1 ⊄ C2" otherwise.
CssCode css_assemble(const LinearCode &c1, const LinearCode &c2);

/// Parameters from the t-point divisors a <= b, n = N - t.
QuantumParams t_point_params(const Curve &c, std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Parameters for divisors a, b supported on places of the given degrees.
QuantumParams non_rational_params(std::int64_t n, std::int64_t genus, std::uint64_t q, std::span<const std::int64_t> a,
                                  std::span<const std::int64_t> b, std::span<const std::int64_t> degrees);

/// The last t rational places in canonical order (so P_inf is always included).
std::vector<Place> t_point_support(const Curve &c, std::size_t t);
Divisor t_point_divisor(const Curve &c, std::span<const std::int64_t> coefficients);

/// Explicit CSS code from C_L(D, sum a_i P_i) inside C_L(D, sum b_i P_i).
CssCode t_point_build(const Curve &c, std::span<const std::int64_t> a, std::span<const std::int64_t> b);
inline CssCode one_point_build(const Curve &c, std::int64_t a, std::int64_t b) {
    return t_point_build(c, std::span<const std::int64_t>(&a, 1), std::span<const std::int64_t>(&b, 1));
}

/// Explicit CSS code from t1 G inside t2 G for the degree-2 place G, D = all rational places.
CssCode hyperelliptic_build(const Curve &c, std::int64_t t1, std::int64_t t2);

}  // namespace agqc

#endif  // AGQC_CSS_H_
