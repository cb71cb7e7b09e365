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
#include <vector>

namespace everett {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the full self-check: gate algebra, both protocols end to end, the
/// locality audit, the fixture round trip and output determinism. Pure and
/// deterministic (the random teleport inputs use a fixed seed).
std::vector<CheckResult> run_verification();

/// Human-readable decode table, e.g. "00->00 01->10 10->01 11->11".
std::string describe_decode_table();

}  // namespace everett
