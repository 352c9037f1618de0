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

#ifndef AGQC_EXPAND_H_
#define AGQC_EXPAND_H_

#include <cstdint>
#include <span>

#include "agqc/agcode.h"
#include "agqc/css.h"

namespace agqc {

/// Coordinates of each entry in `basis`, blocked: entry j goes to columns j*K .. j*K+K-1.
/// The result lives over the prime field.
Matrix expand_vectors(const Matrix &m, std::span<const Element> basis);

/// beta(C): all codewords of C written out in the basis. Length K n, dimension K k.
LinearCode expand_code(const LinearCode &c, std::span<const Element> basis);

/// Compares [left(C)]^perp with right(C^perp) as row spaces over F_p.
bool expansion_duality_holds(const LinearCode &c, std::span<const Element> left, std::span<const Element> right);
/// The identity with right = dual basis of `basis`.
bool verify_expansion_duality(const LinearCode &c, std::span<const Element> basis);

/// CSS code over F_p from the expansions of C1 inside C2 in the polynomial basis.
CssCode expanded_css(const LinearCode &c1, const LinearCode &c2, std::uint32_t p);

}  // namespace agqc

#endif  // AGQC_EXPAND_H_
