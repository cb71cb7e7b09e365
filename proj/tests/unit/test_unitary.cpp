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


#include "unitary.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "error.hpp"
#include "oracles.hpp"

using everett::Amplitude;
using everett::ErrorCode;
using everett::UnitaryGate;

TEST(UnitaryGate, validates_shape_and_entries) {
    EXPECT_EVERETT_ERROR(UnitaryGate("g", 1, {1, 0, 0}), ErrorCode::Arity);
    EXPECT_EVERETT_ERROR(UnitaryGate("g", 1, {1, 0, 0, INFINITY}), ErrorCode::InvalidArgument);
    EXPECT_EVERETT_ERROR(UnitaryGate::identity(17), ErrorCode::Arity);
}

TEST(UnitaryGate, identity_and_unitarity_error) {
    UnitaryGate id = UnitaryGate::identity(2);
    EXPECT_EQ(id.dimension(), 4U);
    EXPECT_EQ(id.unitarity_error(), 0.0);
    UnitaryGate scaled("s", 1, {2, 0, 0, 1});
    EXPECT_NEAR(scaled.unitarity_error(), 3.0, 1e-15);
    EXPECT_FALSE(scaled.is_unitary(1e-12));
}

TEST(UnitaryGate, random_unitaries_and_adjoint) {
    std::mt19937_64 rng(29);
    for (std::size_t arity = 1; arity <= 3; ++arity) {
        UnitaryGate g("r", arity, oracle::flatten(oracle::random_unitary(std::size_t{1} << arity, rng)));
        EXPECT_TRUE(g.is_unitary(1e-12));
        UnitaryGate a = g.adjoint();
        for (std::size_t r = 0; r < g.dimension(); ++r) {
            for (std::size_t c = 0; c < g.dimension(); ++c) {
                EXPECT_EQ(a.at(c, r), std::conj(g.at(r, c)));
            }
        }
    }
}

TEST(UnitaryGate, equality_ignores_name) {
    UnitaryGate a("a", 1, {0, 1, 1, 0});
    EXPECT_EQ(a, a.renamed("b"));
    EXPECT_EQ(a.renamed("b").name(), "b");
    EXPECT_NE(a, UnitaryGate::identity(1));
}

TEST(UnitaryGate, str_prints_exact_entries) {
    EXPECT_EQ(UnitaryGate("g", 1, {0, 1, -1, 0}).str(), " 0  1\n-1  0\n");
    EXPECT_EQ(UnitaryGate("g", 1, {0.5, Amplitude(0, -1), Amplitude(0.5, 0.25), 1}).str(),
              "     1/2       -i\n"
              "1/2+1/4i        1\n");
}
