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


#include "protocols.hpp"

#include <gtest/gtest.h>

#include "json.hpp"
#include <random>

#include "error.hpp"
#include "gates.hpp"
#include "oracles.hpp"

using everett::Agent;
using everett::Amplitude;
using everett::ErrorCode;
using everett::EventKind;
using everett::ProtocolWorld;
using everett::PureState;

namespace {

const double kTol = 1e-12;

std::string bits(int a, int b) { return std::to_string(a) + std::to_string(b); }

ProtocolWorld small_world() {
    PureState s = everett::tensor(PureState::basis({"c", "d"}, "10"), oracle::bell_by_hand(0, 0, "a", "b"));
    return ProtocolWorld::init(
        s, {{"c", Agent::Alice}, {"d", Agent::Alice}, {"a", Agent::Alice}, {"b", Agent::Bob}});
}

// The pointer label Bob's measurement must show for the post-encoding
// pair: the xy whose Bell state overlaps it. Computed from hand-built Bell
// states and the closed form of the encoded pair only.
std::string pointer_by_projection(int p, int q) {
    PureState pair = oracle::terms({"a", "b"}, {{bits((p + q) % 2, 0), p ? -1.0 : 1.0}, {bits((p + q + 1) % 2, 1), 1.0}});
    std::string found;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            if (std::abs(everett::inner_product(oracle::bell_by_hand(x, y, "a", "b"), pair)) > 1e-9) {
                EXPECT_TRUE(found.empty());
                found = bits(x, y);
            }
        }
    }
    return found;
}

// Brute-force superdense run with full 64x64 operators. The cu_sigma
// blocks come from the displayed matrices translated to the internal
// basis; the measurement is sum |m^x n^y><mn| (x) |psi><psi|/2 assembled
// from hand Bell states.
std::vector<Amplitude> brute_force_superdense(int p, int q) {
    using oracle::Matrix;
    Matrix cu = oracle::zeros(8);
    for (int k = 0; k < 4; ++k) {
        const Matrix &shown = oracle::displayed_sigma()[static_cast<std::size_t>(k)];
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) {
                cu[static_cast<std::size_t>(k) * 2 + r][static_cast<std::size_t>(k) * 2 + c] = shown[1 - r][1 - c];
            }
        }
    }
    Matrix meas = oracle::zeros(16);
    for (int k = 0; k < 4; ++k) {
        auto psi = oracle::amps_of(oracle::bell_by_hand(k / 2, k % 2, "a", "b"));
        for (std::size_t m = 0; m < 4; ++m) {
            std::size_t shifted = m ^ static_cast<std::size_t>(k);
            for (std::size_t i = 0; i < 4; ++i) {
                for (std::size_t j = 0; j < 4; ++j) {
                    meas[shifted * 4 + i][m * 4 + j] += psi[i] * std::conj(psi[j]) / 2.0;
                }
            }
        }
    }
    // Wire order c d a b E1 E2.
    PureState start = oracle::terms({"c", "d", "a", "b", "E1", "E2"},
                                    {{bits(p, q) + "0000", 1.0}, {bits(p, q) + "1100", 1.0}});
    auto v = oracle::amps_of(start);
    v = oracle::matvec(oracle::embed(cu, 6, {0, 1, 2}), v);
    v = oracle::matvec(oracle::embed(meas, 6, {4, 5, 2, 3}), v);
    return v;
}

}  // namespace

TEST(Agent, names_round_trip) {
    EXPECT_STREQ(everett::agent_name(Agent::Alice), "Alice");
    EXPECT_EQ(everett::parse_agent("Bob"), Agent::Bob);
    EXPECT_FALSE(everett::parse_agent("Eve").has_value());
}

TEST(ProtocolWorld, init_requires_a_holder_for_every_wire) {
    PureState s = PureState::basis({"a", "b"}, 0);
    EXPECT_EVERETT_ERROR(ProtocolWorld::init(s, {{"a", Agent::Alice}}), ErrorCode::Label);
    EXPECT_EVERETT_ERROR(ProtocolWorld::init(s, {{"a", Agent::Alice}, {"b", Agent::Bob}, {"z", Agent::Bob}}),
                         ErrorCode::Label);
}

TEST(ProtocolWorld, transfer_moves_location_only) {
    ProtocolWorld w = small_world();
    ProtocolWorld moved = transfer(w, "a", Agent::Bob);
    EXPECT_EQ(moved.location("a"), Agent::Bob);
    EXPECT_EQ(w.location("a"), Agent::Alice);
    EXPECT_EQ(moved.state(), w.state());
    ASSERT_EQ(moved.trace().size(), 2U);
    EXPECT_EQ(moved.trace().back().kind(), EventKind::Transfer);
    EXPECT_EVERETT_ERROR(transfer(w, "z", Agent::Bob), ErrorCode::Label);
}

TEST(ProtocolWorld, transfer_to_current_holder_is_recorded_noop) {
    ProtocolWorld w = transfer(small_world(), "b", Agent::Bob);
    EXPECT_EQ(w.location("b"), Agent::Bob);
    EXPECT_EQ(w.trace().size(), 2U);
    EXPECT_EQ(everett::event_line(w.trace().back()), "1 transfer b Bob->Bob norm2=2.000000000000");
}

TEST(ProtocolWorld, locality_is_enforced) {
    ProtocolWorld w = small_world();
    ProtocolWorld ok = apply_local(w, everett::cu_sigma(), {"c", "d", "a"}, Agent::Alice);
    EXPECT_EQ(ok.state(), everett::apply(everett::cu_sigma(), {"c", "d", "a"}, w.state()));
    PureState e = PureState::basis({"E1", "E2"}, 0);
    ProtocolWorld bigger = ProtocolWorld::init(everett::tensor(e, w.state()), {{"E1", Agent::Bob},
                                                                               {"E2", Agent::Bob},
                                                                               {"c", Agent::Alice},
                                                                               {"d", Agent::Alice},
                                                                               {"a", Agent::Alice},
                                                                               {"b", Agent::Bob}});
    EXPECT_EVERETT_ERROR(apply_local(bigger, everett::cu_meas(), {"E1", "E2", "a", "b"}, Agent::Bob),
                         ErrorCode::Locality);
    ProtocolWorld after = transfer(bigger, "a", Agent::Bob);
    EXPECT_NO_THROW(apply_local(after, everett::cu_meas(), {"E1", "E2", "a", "b"}, Agent::Bob));
}

TEST(ProtocolWorld, locality_error_names_the_holder) {
    try {
        apply_local(small_world(), everett::sigma(0, 1), {"b"}, Agent::Alice);
        FAIL() << "expected a locality error";
    } catch (const everett::Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Locality);
        EXPECT_NE(std::string(e.what()).find("Bob"), std::string::npos) << e.what();
    }
}

TEST(AuditLocality, flags_a_forged_gate_event) {
    everett::Trace t = small_world().trace();
    t.push_back(everett::Event{1, everett::GateEvent{"sigma01", Agent::Alice, {"b"}}, 2.0});
    auto audit = everett::audit_locality(t);
    EXPECT_FALSE(audit.ok);
    ASSERT_EQ(audit.violations.size(), 1U);
    t.back().payload = everett::GateEvent{"sigma01", Agent::Bob, {"b"}};
    EXPECT_TRUE(everett::audit_locality(t).ok);
}

TEST(AuditLocality, follows_transfers) {
    everett::Trace t = small_world().trace();
    t.push_back(everett::Event{1, everett::TransferEvent{"a", Agent::Alice, Agent::Bob}, 2.0});
    t.push_back(everett::Event{2, everett::GateEvent{"id", Agent::Bob, {"a", "b"}}, 2.0});
    EXPECT_TRUE(everett::audit_locality(t).ok);
    t.push_back(everett::Event{3, everett::GateEvent{"id", Agent::Alice, {"a"}}, 2.0});
    EXPECT_FALSE(everett::audit_locality(t).ok);
}

TEST(Superdense, intermediate_state_matches_closed_form) {
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            auto r = everett::run_superdense(p, q);
            PureState pair = oracle::terms({"a", "b"}, {{bits((p + q) % 2, 0), p ? -1.0 : 1.0},
                                                        {bits((p + q + 1) % 2, 1), 1.0}});
            PureState want = everett::tensor(PureState::basis({"c", "d"}, bits(p, q)), pair,
                                             PureState::basis({"E1", "E2"}, "00"));
            EXPECT_EQ(r.intermediate_state, want);
            EXPECT_EQ(everett::superdense_expected_intermediate(p, q), want);
        }
    }
}

TEST(Superdense, final_state_matches_brute_force) {
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            auto r = everett::run_superdense(p, q);
            EXPECT_LT(oracle::max_abs_diff(oracle::amps_of(r.final_state), brute_force_superdense(p, q)), kTol);
        }
    }
}

TEST(Superdense, single_branch_with_decoded_pointer) {
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            auto r = everett::run_superdense(p, q);
            EXPECT_EQ(r.branch_count, 1U);
            EXPECT_EQ(r.pointer, pointer_by_projection(p, q)) << p << q;
            const auto &branch = r.branches.branches.front();
            EXPECT_NEAR(branch.weight, 1.0, kTol);
            // Residual on (c, d, a, b): |p>|q> times the Bell state of the pointer.
            PureState want = everett::tensor(PureState::basis({"c", "d"}, bits(p, q)),
                                             oracle::bell_by_hand(r.pointer[0] - '0', r.pointer[1] - '0', "a", "b"));
            EXPECT_TRUE(everett::equal_up_to_phase(branch.residual, want));
        }
    }
}

TEST(Superdense, pointer_values_for_diagonal_inputs) {
    EXPECT_EQ(everett::run_superdense(0, 0).pointer, "00");
    EXPECT_EQ(everett::run_superdense(1, 1).pointer, "11");
}

TEST(Superdense, rejects_non_bits) {
    EXPECT_EVERETT_ERROR(everett::run_superdense(2, 0), ErrorCode::InvalidArgument);
    EXPECT_EVERETT_ERROR(everett::run_superdense(0, -1), ErrorCode::InvalidArgument);
}

TEST(Superdense, trace_is_local_constant_norm_with_one_transfer) {
    for (int k = 0; k < 4; ++k) {
        auto r = everett::run_superdense(k / 2, k % 2);
        EXPECT_TRUE(everett::audit_locality(r.trace).ok);
        int transfers = 0;
        for (const auto &e : r.trace) {
            EXPECT_NEAR(e.norm_squared, 2.0, kTol);
            transfers += e.kind() == EventKind::Transfer ? 1 : 0;
        }
        EXPECT_EQ(transfers, 1);
    }
}

TEST(Superdense, trace_lines) {
    auto r = everett::run_superdense(0, 1);
    std::vector<std::string> lines;
    for (const auto &e : r.trace) {
        lines.push_back(everett::event_line(e));
    }
    EXPECT_EQ(lines, (std::vector<std::string>{
                         "0 init c@Alice d@Alice a@Alice b@Bob E1@Bob E2@Bob norm2=2.000000000000",
                         "1 gate cu_sigma @Alice c d a norm2=2.000000000000",
                         "2 transfer a Alice->Bob norm2=2.000000000000",
                         "3 gate cu_meas @Bob E1 E2 a b norm2=2.000000000000",
                         "4 decompose E1 E2 : 10 raw=2.000000000000 weight=1.000000000000 norm2=2.000000000000",
                     }));
}

TEST(Superdense, trace_json_keys_and_order) {
    auto r = everett::run_superdense(1, 1);
    auto gate = nlohmann::ordered_json::parse(everett::event_json(r.trace[1]));
    std::vector<std::string> keys;
    for (auto it = gate.begin(); it != gate.end(); ++it) {
        keys.push_back(it.key());
    }
    ASSERT_GE(keys.size(), 3U);
    EXPECT_EQ(keys.front(), "event");
    EXPECT_EQ(keys[1], "seq");
    EXPECT_EQ(keys.back(), "norm2");
    EXPECT_EQ(gate["event"], "gate");
    EXPECT_EQ(gate["gate"], "cu_sigma");
    EXPECT_EQ(gate["norm2"].get<double>(), 2.0);
    auto dec = nlohmann::json::parse(everett::event_json(r.trace.back()));
    EXPECT_EQ(dec["event"], "decompose");
    EXPECT_EQ(dec["branches"][0]["label"], "11");
}

TEST(DecodeTable, bijection_derived_from_expansion) {
    auto table = everett::derive_decode_table();
    EXPECT_TRUE(table.bijective);
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            EXPECT_EQ(table.pointer_for.at(bits(p, q)), pointer_by_projection(p, q));
        }
    }
    // The off-diagonal inputs swap labels; the diagonal ones are fixed.
    EXPECT_EQ(table.pointer_for.at("01"), "10");
    EXPECT_EQ(table.pointer_for.at("10"), "01");
    EXPECT_FALSE(table.is_identity);
}

TEST(Teleport, post_measure_state_matches_hand_expansion) {
    const Amplitude alpha(0.6, 0);
    const Amplitude beta(0, 0.8);
    const std::vector<std::pair<Amplitude, Amplitude>> bob = {
        {alpha, beta}, {-beta, alpha}, {beta, alpha}, {-alpha, beta}};
    PureState want = PureState::zero({"E1", "E2", "u", "a", "b"});
    for (int k = 0; k < 4; ++k) {
        want = want + everett::tensor(PureState::basis({"E1", "E2"}, static_cast<std::uint64_t>(k)),
                                      oracle::bell_by_hand(k / 2, k % 2, "u", "a"),
                                      oracle::terms({"b"}, {{"0", bob[static_cast<std::size_t>(k)].first},
                                                            {"1", bob[static_cast<std::size_t>(k)].second}}));
    }
    auto r = everett::run_teleport(alpha, beta);
    // The pure-unitary evolution carries an overall factor 1/2 relative
    // to the unnormalized four-branch expression.
    EXPECT_LT(oracle::max_abs_diff(oracle::amps_of(r.post_measure_state), oracle::amps_of(0.5 * want)), kTol);
    EXPECT_TRUE(everett::equal_up_to_phase(everett::teleport_expected_post_measure(alpha, beta), want));
}

TEST(Teleport, basis_inputs) {
    for (auto [alpha, beta] : {std::pair<Amplitude, Amplitude>{1, 0}, {0, 1}}) {
        auto r = everett::run_teleport(alpha, beta);
        EXPECT_NEAR(r.fidelity, 1.0, kTol);
        EXPECT_EQ(r.schmidt_rank_b_cut, 1U);
        EXPECT_LT(oracle::max_abs_diff(oracle::amps_of(r.bob_qubit), {alpha, beta}), kTol);
    }
}

TEST(Teleport, random_inputs_arrive_intact) {
    std::mt19937_64 rng(20061017);
    for (int trial = 0; trial < 200; ++trial) {
        PureState in = oracle::random_state({"u"}, rng, true);
        auto r = everett::run_teleport(in.amplitude(0), in.amplitude(1));
        EXPECT_GE(r.fidelity, 1 - 1e-10);
        EXPECT_EQ(r.schmidt_rank_b_cut, 1U);
        EXPECT_TRUE(oracle::rank_one_by_minors(r.final_state, {0, 1, 2, 3}, 1e-10));
        EXPECT_TRUE(everett::equal_up_to_phase(r.pointer_side, everett::teleport_expected_pointer_side()));
        EXPECT_TRUE(everett::audit_locality(r.trace).ok);
    }
}

TEST(Teleport, unnormalized_input_is_accepted) {
    auto r = everett::run_teleport({3, 0}, {0, 4});
    EXPECT_NEAR(r.fidelity, 1.0, kTol);
    EXPECT_LT(oracle::max_abs_diff(oracle::amps_of(r.bob_qubit), {0.6, Amplitude(0, 0.8)}), kTol);
}

TEST(Teleport, zero_input_rejected) {
    EXPECT_EVERETT_ERROR(everett::run_teleport(0, 0), ErrorCode::ZeroState);
}

TEST(Teleport, trace_has_two_transfers_and_constant_norm) {
    auto r = everett::run_teleport({0.6, 0}, {0, 0.8});
    std::vector<std::string> kinds;
    for (const auto &e : r.trace) {
        kinds.push_back(everett::event_kind_name(e.kind()));
        EXPECT_NEAR(e.norm_squared, 2.0, kTol);
    }
    EXPECT_EQ(kinds, (std::vector<std::string>{"init", "gate", "transfer", "transfer", "gate"}));
    EXPECT_EQ(everett::event_line(r.trace[4]), "4 gate u_b @Bob E1 E2 b norm2=2.000000000000");
}
