/*
 * Copyright 2026 The spinor-kummer developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef KUMMER_ERRORS_HPP
#define KUMMER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kummer {

// Malformed input (bad JSON, unparsable curve spec, wrong shapes).
// CLI maps this to exit code 2.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical precondition failed (zero discriminant, characteristic 2,
// non-monic divisor, ...). CLI maps this to exit code 3.
struct MathError : std::runtime_error {
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant that should be unreachable was violated; signals an
// arithmetic bug, not a user error. CLI maps this to exit code 4.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline void internal_check(bool cond, const char* what) {
    if (!cond) throw InternalError(what);
}

}  // namespace kummer

#endif
