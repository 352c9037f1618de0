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

#ifndef AGQC_TOOLS_VERIFY_H_
#define AGQC_TOOLS_VERIFY_H_

#include <cstdint>
#include <ostream>

#include "agqc/minweight.h"

namespace agqc::tools {

/// Runs the invariant suites, one PASS/FAIL line each. Returns the number of failures.
int run_verify(std::ostream &out, const SearchOptions &opts, std::uint64_t seed);

}  // namespace agqc::tools

#endif  // AGQC_TOOLS_VERIFY_H_
