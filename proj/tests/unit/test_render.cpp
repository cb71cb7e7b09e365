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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "circuit.hpp"

namespace {

everett::CircuitProgram parse(const std::string &src) {
    auto r = everett::parse_circuit(src);
    if (const auto *e = std::get_if<everett::ParseError>(&r)) {
        ADD_FAILURE() << e->str();
        return {};
    }
    return std::get<everett::CircuitProgram>(r);
}

std::string golden(const char *name) {
    std::ifstream in(std::filesystem::path(EVERETT_TEST_DATA_DIR) / "golden" / name, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST(Render, registers_only_draws_plain_wires) {
    std::string out = everett::render_ascii(parse("wire a @ Alice\nwire b @ Bob\n"));
    auto lines = lines_of(out);
    ASSERT_GE(lines.size(), 3U);
    bool saw_a = false;
    bool saw_b = false;
    for (const auto &l : lines) {
        EXPECT_EQ(l.find("●"), std::string::npos);
        EXPECT_EQ(l.find("─["), std::string::npos);
        saw_a = saw_a || (l.rfind("a", 0) == 0 && l.find("───") != std::string::npos);
        saw_b = saw_b || (l.rfind("b", 0) == 0 && l.find("───") != std::string::npos);
    }
    EXPECT_TRUE(saw_a) << out;
    EXPECT_TRUE(saw_b) << out;
}

TEST(Render, superdense_topology) {
    std::string out = everett::render_ascii(parse(everett::superdense_fixture(0, 1, "10")));
    EXPECT_NE(out.find("[Uσ]"), std::string::npos) << out;
    EXPECT_NE(out.find("[UM]"), std::string::npos) << out;
    EXPECT_NE(out.find("●"), std::string::npos) << out;
    EXPECT_NE(out.find("[Bob]"), std::string::npos) << out;
    // The Uσ box comes before the measurement box in time.
    auto lines = lines_of(out);
    std::size_t us_col = std::string::npos;
    std::size_t um_col = std::string::npos;
    for (const auto &l : lines) {
        if (l.find("[Uσ]") != std::string::npos) {
            us_col = l.find("[Uσ]");
        }
        if (l.find("[UM]") != std::string::npos) {
            um_col = l.find("[UM]");
        }
    }
    EXPECT_LT(us_col, um_col);
}

TEST(Render, teleport_draws_decoder_controlled_by_pointer) {
    std::string out = everett::render_ascii(parse(everett::teleport_fixture()));
    EXPECT_NE(out.find("[UM]"), std::string::npos) << out;
    EXPECT_NE(out.find("[UB]"), std::string::npos) << out;
    auto lines = lines_of(out);
    // After the transfer, E1 and E2 have lanes below the separator that
    // carry control dots.
    bool below = false;
    int bob_e_controls = 0;
    for (const auto &l : lines) {
        if (l.rfind("[Bob]", 0) == 0) {
            below = true;
            continue;
        }
        if (below && l.rfind("E", 0) == 0 && l.find("●") != std::string::npos) {
            ++bob_e_controls;
        }
    }
    EXPECT_EQ(bob_e_controls, 2) << out;
}

TEST(Render, deterministic) {
    for (const std::string &src : {everett::superdense_fixture(1, 1, "11"), everett::teleport_fixture()}) {
        EXPECT_EQ(everett::render_ascii(parse(src)), everett::render_ascii(parse(src)));
    }
}

TEST(Render, matches_golden_diagrams) {
    EXPECT_EQ(everett::render_ascii(parse(everett::superdense_fixture(0, 1, "10"))), golden("superdense_01.txt"));
    EXPECT_EQ(everett::render_ascii(parse(everett::teleport_fixture())), golden("teleport.txt"));
}
