// Copyright 2026 The cmap Authors
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

#ifndef CMAP_ERRORS_H
#define CMAP_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmap {

/// Operands of mismatched qubit count.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A code that breaks a stabilizer-code invariant.
struct InvalidCodeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A request that exceeds a documented size bound (brute force, dense oracle).
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `line` is 1-based, or 0 when not tied to a line.
struct ParseError : std::invalid_argument {
    ParseError(const std::string &msg, std::size_t line = 0)
        : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + msg : msg), line(line) {
    }
    std::size_t line;
};

}  // namespace cmap

#endif
