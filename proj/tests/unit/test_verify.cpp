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


#include "verify.hpp"

#include <gtest/gtest.h>

TEST(Verify, all_checks_pass_in_order) {
    auto results = everett::run_verification();
    ASSERT_EQ(results.size(), 9U);
    for (std::size_t k = 0; k < results.size(); ++k) {
        EXPECT_EQ(results[k].id, static_cast<int>(k + 1));
        EXPECT_TRUE(results[k].passed) << results[k].name << ": " << results[k].detail;
        EXPECT_FALSE(results[k].name.empty());
    }
}

TEST(Verify, decode_table_summary_mentions_every_input) {
    std::string s = everett::describe_decode_table();
    for (const char *pq : {"00->00", "01->10", "10->01", "11->11"}) {
        EXPECT_NE(s.find(pq), std::string::npos) << s;
    }
}
