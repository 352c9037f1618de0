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

#ifndef AGQC_AGCODE_H_
#define AGQC_AGCODE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agqc/curve.h"
#include "agqc/matrix.h"

namespace agqc {

/// Where a code came from. Empty for codes given by a bare generator matrix.
struct Provenance {
    std::string curve;
    std::string d_description;
    std::string g_description;
    std::optional<std::int64_t> deg_g;
    std::optional<std::int64_t> genus;
    bool dual = false;  // true for C_Omega(D, G)
};

class LinearCode {
   public:
    /// Row-reduces the generator; zero rows are dropped.
    static LinearCode from_generator(const Matrix &generator);

    const Field &field() const { return generator_.field(); }
    std::size_t length() const { return generator_.cols(); }
    std::size_t dimension() const { return generator_.rows(); }
    const Matrix &generator() const { return generator_; }

    const Provenance &provenance() const { return provenance_; }
    Provenance &provenance() { return provenance_; }

    /// Structural lower bound on the minimum distance of this code.
    std::optional<std::int64_t> designed_distance;
    /// Structural lower bound on the minimum distance of the dual code.
    std::optional<std::int64_t> dual_designed_distance;
    std::optional<std::int64_t> exact_distance;

    /// "[27, 5, d>=20]_9"
    std::string summary() const;

   private:
    Matrix generator_{Field::make(2, 1), 0, 0};
    Provenance provenance_;
};

/// The dual code, without provenance.
LinearCode dual_code(const LinearCode &c);

/// All rational places not in supp G, in canonical order.
std::vector<Place> default_evaluation_places(const Curve &c, const Divisor &g);

/// C_L(D, G).
LinearCode evaluation_code(const Curve &c, const Divisor &g, const std::vector<Place> &d);
LinearCode evaluation_code(const Curve &c, const Divisor &g);

/// C_Omega(D, G) = C_L(D, G)^perp for a code built by evaluation_code.
LinearCode omega_code(const LinearCode &c);

/// (n - deg G, deg G - (2g - 2)); requires 2g - 2 < deg G < n.
std::pair<std::int64_t, std::int64_t> designed_bounds(const Curve &c, std::int64_t deg_g, std::int64_t n);

}  // namespace agqc

#endif  // AGQC_AGCODE_H_
