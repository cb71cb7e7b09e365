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


#include "error.hpp"

#include <atomic>
#include <cmath>

namespace everett {

namespace {
std::atomic<double> g_tolerance{1e-12};
}

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
            return "invalid_argument";
        case ErrorCode::Label:
            return "label";
        case ErrorCode::Arity:
            return "arity";
        case ErrorCode::ZeroState:
            return "zero_state";
        case ErrorCode::Locality:
            return "locality";
        case ErrorCode::Protocol:
            return "protocol";
        case ErrorCode::Internal:
            return "internal";
    }
    return "unknown";
}

double default_tolerance() noexcept { return g_tolerance.load(std::memory_order_relaxed); }

void set_default_tolerance(double tol) {
    if (!std::isfinite(tol) || tol <= 0 || tol >= 1) {
        fail(ErrorCode::InvalidArgument, "tolerance must lie in (0, 1)");
    }
    g_tolerance.store(tol, std::memory_order_relaxed);
}

}  // namespace everett
