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

#include "agqc/agcode.h"

#include <algorithm>
#include <sstream>

#include "agqc/riemann_roch.h"

namespace agqc {

LinearCode LinearCode::from_generator(const Matrix &generator) {
    LinearCode out;
    out.generator_ = rref(generator).reduced;
    return out;
}

std::string LinearCode::summary() const {
    std::ostringstream os;
    os << "[" << length() << ", " << dimension();
    if (exact_distance)
        os << ", " << *exact_distance;
    else if (designed_distance)
        os << ", d>=" << *designed_distance;
    os << "]_" << field().order();
    return os.str();
}

LinearCode dual_code(const LinearCode &c) {
    const Matrix k = c.dimension() == 0 ? Matrix::identity(c.field(), c.length()) : kernel(c.generator());
    return LinearCode::from_generator(k);
}

std::vector<Place> default_evaluation_places(const Curve &c, const Divisor &g) {
    std::vector<Place> out;
    for (const auto &p : c.rational_places())
        if (g.coefficient(p) == 0) out.push_back(p);
    return out;
}

LinearCode evaluation_code(const Curve &c, const Divisor &g, const std::vector<Place> &d) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        require(d[i].is_rational(), "evaluation places must be rational");
        require(g.coefficient(d[i]) == 0, "supp G meets D");
        for (std::size_t j = 0; j < i; ++j) require(!(d[i] == d[j]), "evaluation places must be distinct");
    }
    const auto basis = rr_space(c, g);
    const std::int64_t n = static_cast<std::int64_t>(d.size());
    const std::int64_t deg = g.degree();
    LinearCode code = basis.empty() ? LinearCode::from_generator(Matrix(c.base_field(), 0, d.size()))
                                    : LinearCode::from_generator(evaluation_matrix(c, basis, d));
    if (deg < n) {
        ensure(code.dimension() == basis.size(), "evaluation map is not injective for deg G < n");
        code.designed_distance = n - deg;
    }
    if (deg > 2 * c.genus() - 2) code.dual_designed_distance = deg - (2 * c.genus() - 2);
    auto &prov = code.provenance();
    prov.curve = c.describe();
    prov.g_description = g.to_string();
    prov.d_description = std::to_string(n) + " rational places";
    prov.deg_g = deg;
    prov.genus = c.genus();
    return code;
}

LinearCode evaluation_code(const Curve &c, const Divisor &g) {
    return evaluation_code(c, g, default_evaluation_places(c, g));
}

LinearCode omega_code(const LinearCode &c) {
    const auto &prov = c.provenance();
    require(prov.deg_g.has_value() && prov.genus.has_value() && !prov.dual,
            "omega_code needs a code built by evaluation_code");
    LinearCode out = dual_code(c);
    const std::int64_t n = static_cast<std::int64_t>(c.length());
    const std::int64_t deg = *prov.deg_g;
    const std::int64_t g = *prov.genus;
    if (deg > 2 * g - 2 && deg < n) {
        ensure(static_cast<std::int64_t>(out.dimension()) == n + g - 1 - deg,
               "dual dimension differs from n + g - 1 - deg G");
    }
    out.designed_distance = c.dual_designed_distance;
    out.dual_designed_distance = c.designed_distance;
    out.provenance() = prov;
    out.provenance().dual = true;
    return out;
}

std::pair<std::int64_t, std::int64_t> designed_bounds(const Curve &c, std::int64_t deg_g, std::int64_t n) {
    require(deg_g > 2 * c.genus() - 2, "deg G = " + std::to_string(deg_g) + " must exceed 2g - 2 = " +
                                           std::to_string(2 * c.genus() - 2));
    require(deg_g < n, "deg G = " + std::to_string(deg_g) + " must be below n = " + std::to_string(n));
    return {n - deg_g, deg_g - (2 * c.genus() - 2)};
}

}  // namespace agqc
