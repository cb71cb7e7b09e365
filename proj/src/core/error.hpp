// Copyright 2026 The Everett Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace everett {

enum class ErrorCode {
    InvalidArgument,
    Label,       // duplicate, unknown or repeated wire label
    Arity,
    ZeroState,
    Locality,
    Protocol,    // a protocol run did not reach the expected state
    Internal,
};

const char *error_code_name(ErrorCode code);

/// Every failure raised by the core library. The C API maps `code()` onto
/// its status enum one-to-one.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

/// Process-wide default numerical tolerance (1e-12 unless overridden).
double default_tolerance() noexcept;
void set_default_tolerance(double tol);

}  // namespace everett
