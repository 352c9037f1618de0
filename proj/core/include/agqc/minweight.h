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

#ifndef AGQC_MINWEIGHT_H_
#define AGQC_MINWEIGHT_H_

#include <cstdint>
#include <limits>
#include <string>

#include "agqc/agcode.h"

namespace agqc {

/// Minimum weight of an empty set of codewords.
inline constexpr std::int64_t kInfiniteWeight = std::numeric_limits<std::int64_t>::max();

struct SearchOptions {
    /// Upper limit on the number of candidate codewords examined.
    std::uint64_t budget = 100'000'000;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;
};

/// lower <= true minimum <= upper. Equal bounds mean the value is certified.
struct WeightBracket {
    std::int64_t lower = 0;
    std::int64_t upper = kInfiniteWeight;
    std::uint64_t candidates = 0;
    bool exact() const { return lower >= upper; }
    std::string to_string() const;
};

/// Enumerates every nonzero codeword; throws "use search" when q^k exceeds the budget.
std::int64_t exhaustive_min_weight(const LinearCode &c, const SearchOptions &opts = {});

/// Brouwer-Zimmermann search over disjoint information sets.
WeightBracket bz_min_weight(const LinearCode &c, const SearchOptions &opts = {});

/// Minimum weight over codewords of c that are not in `excluded` (a subcode of c).
WeightBracket bz_min_weight_outside(const LinearCode &c, const LinearCode &excluded, const SearchOptions &opts = {});

/// Minimum weight over C2 \ C1 by enumeration; requires C1 inside C2 and q^k2 within budget.
std::int64_t coset_min_weight(const LinearCode &c2, const LinearCode &c1, const SearchOptions &opts = {});

struct CssDistance {
    WeightBracket x_side;  // C2 \ C1
    WeightBracket z_side;  // C1^perp \ C2^perp
    std::int64_t lower() const;
    std::int64_t upper() const;
    bool exact() const;
};

/// Both sides of the CSS distance for C1 inside C2. The X side is enumerated
/// exhaustively when it fits the budget, otherwise searched.
CssDistance css_distance(const LinearCode &c1, const LinearCode &c2, const SearchOptions &opts = {});

}  // namespace agqc

#endif  // AGQC_MINWEIGHT_H_
