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

#include <string>

namespace everett {

inline constexpr int kPrintDecimals = 12;

/// Fixed-point rendering with kPrintDecimals digits. Values that round to
/// zero print without a sign.
std::string format_fixed(double value);

/// "(re,im)" with both parts through format_fixed.
std::string format_complex(double re, double im);

/// The double a reader gets back by parsing format_fixed(value). JSON
/// output goes through this so that it carries the same numbers as the
/// human-readable output.
double printed_value(double value);

}  // namespace everett
