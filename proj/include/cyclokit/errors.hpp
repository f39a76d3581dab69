/*
   Copyright 2026 The cyclokit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CYCLOKIT_ERRORS_HPP
#define CYCLOKIT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace cyclokit {

/// Domain/validation error with a stable machine-readable name
/// (e.g. "modulus-mismatch", "division-by-zero", "not-prime").
class Error : public std::runtime_error {
   public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

   private:
    std::string name_;
};

[[noreturn]] inline void fail(const char* name, const std::string& message) {
    throw Error(name, message);
}

}  // namespace cyclokit

#endif
