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

#ifndef AGQC_TABLES_H_
#define AGQC_TABLES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agqc/css.h"

namespace agqc {

/// A reference parameter row and the inputs it was derived from.
struct TableFixture {
    int table = 0;
    std::int64_t n = 0, k = 0, d = 0;
    std::uint64_t field = 0;
    std::uint32_t q = 0, m = 0;
    std::vector<std::int64_t> a;  // degree-2 table: {t1}
    std::vector<std::int64_t> b;  // degree-2 table: {t2}
};

const std::vector<TableFixture> &table_fixtures(int which);

struct TableRow {
    TableFixture fixture;
    QuantumParams computed;
    std::optional<std::int64_t> matrix_k;  // present when built explicitly
    std::optional<bool> nested;
    bool match = false;
    std::string inputs() const;
};

/// Recomputes every row of table 1, 2 or 3. With build = true, rows on
/// q in {3, 4, 5} are also constructed as matrices.
std::vector<TableRow> reproduce_table(int which, bool build);

}  // namespace agqc

#endif  // AGQC_TABLES_H_
