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

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "statevector.hpp"
#include "unitary.hpp"

namespace everett {

enum class Agent { Alice, Bob };

const char *agent_name(Agent agent);
std::optional<Agent> parse_agent(std::string_view name);

/// Wire names used by the built-in protocols.
namespace wire {
inline const WireLabel c = "c";
inline const WireLabel d = "d";
inline const WireLabel a = "a";
inline const WireLabel b = "b";
inline const WireLabel u = "u";
inline const WireLabel E1 = "E1";
inline const WireLabel E2 = "E2";
}  // namespace wire

enum class EventKind { Init, Gate, Transfer, Decompose };

const char *event_kind_name(EventKind kind);

struct InitEvent {
    std::vector<std::pair<WireLabel, Agent>> locations;  // state wire order
};

struct GateEvent {
    std::string gate;
    Agent actor;
    std::vector<WireLabel> wires;
};

struct TransferEvent {
    WireLabel wire;
    Agent from;
    Agent to;
};

struct BranchSummary {
    std::string label;
    double raw_weight;
    double weight;
};

struct DecomposeEvent {
    std::vector<WireLabel> pointer;
    std::vector<BranchSummary> branches;
};

struct Event {
    std::size_t seq = 0;
    std::variant<InitEvent, GateEvent, TransferEvent, DecomposeEvent> payload;
    double norm_squared = 0;  // of the global state after the event

    EventKind kind() const noexcept { return static_cast<EventKind>(payload.index()); }
};

using Trace = std::vector<Event>;

/// `<seq> <kind> <payload...> norm2=<value>`; see README for each payload.
std::string event_line(const Event &event);
/// One JSON object, keys in the order event, seq, payload fields, norm2.
std::string event_json(const Event &event);

/// A global pure state, the agent holding each wire, and the append-only
/// event trace. Evolved functionally: every operation returns a new world.
class ProtocolWorld {
  public:
    static ProtocolWorld init(PureState state, const std::map<WireLabel, Agent> &locations);

    const PureState &state() const noexcept { return state_; }
    const Trace &trace() const noexcept { return trace_; }
    Agent location(std::string_view wire) const;

    friend ProtocolWorld transfer(const ProtocolWorld &w, const WireLabel &wire, Agent to);
    friend ProtocolWorld apply_local(const ProtocolWorld &w, const UnitaryGate &g,
                                     const std::vector<WireLabel> &targets, Agent actor);
    friend std::pair<ProtocolWorld, BranchDecomposition> decompose(
        const ProtocolWorld &w, const std::vector<WireLabel> &pointer, double tol);

  private:
    ProtocolWorld(PureState state, std::map<WireLabel, Agent> locations)
        : state_(std::move(state)), locations_(std::move(locations)) {}

    void record(decltype(Event::payload) payload);

    PureState state_;
    std::map<WireLabel, Agent> locations_;
    Trace trace_;
};

/// Moves `wire` to `to`. Moving a wire to its current holder is recorded
/// as a no-op transfer.
ProtocolWorld transfer(const ProtocolWorld &w, const WireLabel &wire, Agent to);

/// Applies `g` to `targets`; every target must be held by `actor`.
ProtocolWorld apply_local(const ProtocolWorld &w, const UnitaryGate &g, const std::vector<WireLabel> &targets,
                          Agent actor);

std::pair<ProtocolWorld, BranchDecomposition> decompose(const ProtocolWorld &w, const std::vector<WireLabel> &pointer,
                                                        double tol);

struct LocalityAudit {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Replays locations from Init and Transfer events and checks that every
/// Gate event touched only wires held by its actor.
LocalityAudit audit_locality(const Trace &trace);

/// Presence threshold for pointer branches.
inline constexpr double kBranchTolerance = 1e-10;

struct SuperdenseResult {
    int p;
    int q;
    std::string pointer;
    PureState intermediate_state;  // after cu_sigma
    PureState final_state;
    BranchDecomposition branches;
    std::size_t branch_count;
    Trace trace;
};

/// |p>_c |q>_d (x) {(-1)^p |p+q>_a |0>_b + |p+q+1>_a |1>_b} (x) |00>_E, built
/// term by term.
PureState superdense_expected_intermediate(int p, int q);

SuperdenseResult run_superdense(int p, int q);

/// Pointer label Bob reads for each input (p, q).
struct DecodeTable {
    std::map<std::string, std::string> pointer_for;  // "pq" -> pointer label
    bool bijective = false;
    bool is_identity = false;  // every "pq" maps to "pq"
};

DecodeTable derive_decode_table();

struct TeleportResult {
    Amplitude alpha;
    Amplitude beta;
    PureState post_measure_state;  // after Alice's cu_meas
    PureState final_state;
    /// Bob's factor, normalized and rotated by a global phase to line up
    /// with the normalized input.
    PureState bob_qubit;
    PureState pointer_side;  // the (E1, E2, u, a) factor, unnormalized
    double fidelity;
    std::size_t schmidt_rank_b_cut;
    Trace trace;
};

/// The four-branch state after Alice's Bell measurement, term by term:
/// sum_xy |xy>_E (x) psi_xy(u,a) (x) phi_xy(b).
PureState teleport_expected_post_measure(Amplitude alpha, Amplitude beta);

/// sum_xy |xy>_E (x) psi_xy(u,a).
PureState teleport_expected_pointer_side();

TeleportResult run_teleport(Amplitude alpha, Amplitude beta);

}  // namespace everett
