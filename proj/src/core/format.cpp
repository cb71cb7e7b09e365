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


#include "format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace everett {

std::string format_fixed(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", kPrintDecimals, value);
    std::string out = buf;
    if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) {
        out.erase(0, 1);
    }
    return out;
}

std::string format_complex(double re, double im) {
    return "(" + format_fixed(re) + "," + format_fixed(im) + ")";
}

double printed_value(double value) { return std::strtod(format_fixed(value).c_str(), nullptr); }

}  // namespace everett
