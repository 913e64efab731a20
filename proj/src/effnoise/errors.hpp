// Copyright 2026 The effnoise Authors
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

#ifndef EFFNOISE_ERRORS_HPP
#define EFFNOISE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace effnoise {

enum class ErrorKind {
    invalid_argument,
    unsupported_parameter,
    resource_limit,
    construction_failure,
    parse_error,
};

const char *error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the C
/// API and the CLI can map it onto a status / exit code.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &message) { throw Error(kind, message); }

}  // namespace effnoise

#endif
