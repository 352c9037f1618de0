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

#include <numeric>
#include <sstream>

namespace agqc {

namespace {

void check_range(std::int64_t g, std::int64_t n, std::int64_t sum_a, std::int64_t sum_b,
                 std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    require(a.size() == b.size() && !a.empty(), "a and b must have the same positive length");
    for (std::size_t i = 0; i < a.size(); ++i) {
        require(a[i] >= 0, "a_" + std::to_string(i + 1) + " must be nonnegative");
        require(a[i] <= b[i], "a_" + std::to_string(i + 1) + " <= b_" + std::to_string(i + 1) + " fails");
    }
    require(2 * g - 2 < sum_a, "2g - 2 < sum a fails: " + std::to_string(2 * g - 2) + " >= " + std::to_string(sum_a));
    require(sum_b < n, "sum b < n fails: " + std::to_string(sum_b) + " >= " + std::to_string(n));
}

QuantumParams formula_params(std::int64_t n, std::int64_t g, std::uint64_t q, std::int64_t sum_a,
                             std::int64_t sum_b) {
    QuantumParams p;
    p.n = n;
    p.k = sum_b - sum_a;
    p.d_lb = std::min(n - sum_b, sum_a - (2 * g - 2));
    p.q = q;
    return p;
}

}  // namespace

std::optional<std::int64_t> QuantumParams::singleton_defect() const {
    if (d_exact) return agqc::singleton_defect(n, k, *d_exact);
    if (d_lb) return agqc::singleton_defect(n, k, *d_lb);
    return std::nullopt;
}

std::string QuantumParams::to_string() const {
    std::ostringstream os;
    os << "[[" << n << ", " << k;
    if (d_exact)
        os << ", " << *d_exact;
    else if (d_lb)
        os << ", d>=" << *d_lb;
    os << "]]_" << q;
    return os.str();
}

std::int64_t singleton_defect(std::int64_t n, std::int64_t k, std::int64_t d) { return n + 2 - k - 2 * d; }

CssCode css_assemble(const LinearCode &c1, const LinearCode &c2) {
    require(c1.field() == c2.field() && c1.length() == c2.length(), "CSS codes must share field and length");
    if (!rowspace_contains(c1.generator(), c2.generator())) throw Error("C1 ⊄ C2");
    CssCode out{QuantumParams{}, StabilizerPair{c1.generator(), dual_code(c2).generator()}, c1, c2};
    const auto n = static_cast<std::int64_t>(c1.length());
    out.params.n = n;
    out.params.k = static_cast<std::int64_t>(c2.dimension()) - static_cast<std::int64_t>(c1.dimension());
    out.params.q = c1.field().order();
    if (c2.designed_distance && c1.dual_designed_distance)
        out.params.d_lb = std::min(*c2.designed_distance, *c1.dual_designed_distance);
    const auto &hx = out.stabilizers.h_x;
    const auto &hz = out.stabilizers.h_z;
    if (hx.rows() && hz.rows()) ensure((hx * hz.transpose()).is_zero(), "stabilizers do not commute");
    ensure(static_cast<std::int64_t>(rank(hx) + rank(hz)) == n - out.params.k, "stabilizer rank mismatch");
    return out;
}

QuantumParams t_point_params(const Curve &c, std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    require(a.size() <= static_cast<std::size_t>(c.rational_place_count()), "more support points than places");
    const std::int64_t n = c.rational_place_count() - static_cast<std::int64_t>(a.size());
    const std::int64_t sum_a = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    const std::int64_t sum_b = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    check_range(c.genus(), n, sum_a, sum_b, a, b);
    return formula_params(n, c.genus(), c.base_field().order(), sum_a, sum_b);
}

QuantumParams non_rational_params(std::int64_t n, std::int64_t genus, std::uint64_t q, std::span<const std::int64_t> a,
                                  std::span<const std::int64_t> b, std::span<const std::int64_t> degrees) {
    require(degrees.size() == a.size(), "one degree per support place is required");
    std::int64_t sum_a = 0, sum_b = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        require(degrees[i] >= 1, "place degrees must be positive");
        require(i < b.size(), "a and b must have the same length");
        sum_a += a[i] * degrees[i];
        sum_b += b[i] * degrees[i];
    }
    check_range(genus, n, sum_a, sum_b, a, b);
    return formula_params(n, genus, q, sum_a, sum_b);
}

std::vector<Place> t_point_support(const Curve &c, std::size_t t) {
    const auto &places = c.rational_places();
    require(t >= 1 && t <= places.size(), "support size out of range");
    return std::vector<Place>(places.end() - static_cast<std::ptrdiff_t>(t), places.end());
}

Divisor t_point_divisor(const Curve &c, std::span<const std::int64_t> coefficients) {
    const auto support = t_point_support(c, coefficients.size());
    Divisor d;
    for (std::size_t i = 0; i < support.size(); ++i) d.add(support[i], coefficients[i]);
    return d;
}

CssCode t_point_build(const Curve &c, std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    const QuantumParams formula = t_point_params(c, a, b);
    const auto support = t_point_support(c, a.size());
    std::vector<Place> d;
    for (const auto &p : c.rational_places())
        if (std::find(support.begin(), support.end(), p) == support.end()) d.push_back(p);
    const LinearCode c1 = evaluation_code(c, t_point_divisor(c, a), d);
    const LinearCode c2 = evaluation_code(c, t_point_divisor(c, b), d);
    CssCode out = css_assemble(c1, c2);
    ensure(out.params.k == formula.k, "matrix dimension differs from sum b - sum a");
    ensure(out.params.d_lb == formula.d_lb, "designed bound differs from the parameter formula");
    return out;
}

CssCode hyperelliptic_build(const Curve &c, std::int64_t t1, std::int64_t t2) {
    const std::int64_t n = c.rational_place_count();
    const std::int64_t a[] = {t1}, b[] = {t2}, deg[] = {2};
    const QuantumParams formula = non_rational_params(n, c.genus(), c.base_field().order(), a, b, deg);
    Divisor g1, g2;
    const Place p = c.find_degree2_place();
    g1.add(p, t1);
    g2.add(p, t2);
    const std::vector<Place> &d = c.rational_places();
    CssCode out = css_assemble(evaluation_code(c, g1, d), evaluation_code(c, g2, d));
    ensure(out.params.k == 2 * (t2 - t1), "matrix dimension differs from 2(t2 - t1)");
    ensure(out.params.d_lb == formula.d_lb, "designed bound differs from the parameter formula");
    return out;
}

}  // namespace agqc
