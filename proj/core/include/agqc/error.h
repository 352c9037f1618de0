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

#ifndef AGQC_ERROR_H_
#define AGQC_ERROR_H_

#include <stdexcept>
#include <string>

namespace agqc {

/// Raised for precondition violations and unsupported inputs.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails. This always signals a bug
/// and must never be swallowed.
class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string &message) {
    if (!condition) {
        throw Error(message);
    }
}

inline void ensure(bool condition, const std::string &message) {
    if (!condition) {
        throw InternalError(message);
    }
}

}  // namespace agqc

#endif  // AGQC_ERROR_H_
