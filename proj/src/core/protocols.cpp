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

#include <algorithm>
#include <set>
#include <sstream>

#include "format.hpp"
#include "gates.hpp"
#include "json.hpp"

namespace everett {

namespace {

using ordered_json = nlohmann::ordered_json;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

PureState ket(const WireLabel &w, int bit) { return PureState::basis({w}, static_cast<std::uint64_t>(bit)); }

void check_bit(int b, const char *what) {
    if (b != 0 && b != 1) {
        fail(ErrorCode::InvalidArgument, std::string(what) + " must be 0 or 1, got " + std::to_string(b));
    }
}

inline double sign_of(int k) { return (k & 1) != 0 ? -1.0 : 1.0; }

PureState bob_branch_state(int x, int y, Amplitude alpha, Amplitude beta) {
    // The correction Bob still owes in each pointer branch.
    const WireLabel &b = wire::b;
    switch (x * 2 + y) {
        case 0:
            return alpha * ket(b, 0) + beta * ket(b, 1);
        case 1:
            return alpha * ket(b, 1) - beta * ket(b, 0);
        case 2:
            return alpha * ket(b, 1) + beta * ket(b, 0);
        default:
            return (-alpha) * ket(b, 0) + beta * ket(b, 1);
    }
}

}  // namespace

const char *agent_name(Agent agent) { return agent == Agent::Alice ? "Alice" : "Bob"; }

std::optional<Agent> parse_agent(std::string_view name) {
    if (name == "Alice") {
        return Agent::Alice;
    }
    if (name == "Bob") {
        return Agent::Bob;
    }
    return std::nullopt;
}

const char *event_kind_name(EventKind kind) {
    switch (kind) {
        case EventKind::Init:
            return "init";
        case EventKind::Gate:
            return "gate";
        case EventKind::Transfer:
            return "transfer";
        case EventKind::Decompose:
            return "decompose";
    }
    return "unknown";
}

std::string event_line(const Event &event) {
    std::ostringstream out;
    out << event.seq << ' ' << event_kind_name(event.kind());
    std::visit(overloaded{
                   [&](const InitEvent &e) {
                       for (const auto &[w, agent] : e.locations) {
                           out << ' ' << w << '@' << agent_name(agent);
                       }
                   },
                   [&](const GateEvent &e) {
                       out << ' ' << e.gate << " @" << agent_name(e.actor);
                       for (const auto &w : e.wires) {
                           out << ' ' << w;
                       }
                   },
                   [&](const TransferEvent &e) {
                       out << ' ' << e.wire << ' ' << agent_name(e.from) << "->" << agent_name(e.to);
                   },
                   [&](const DecomposeEvent &e) {
                       for (const auto &w : e.pointer) {
                           out << ' ' << w;
                       }
                       out << " :";
                       for (std::size_t k = 0; k < e.branches.size(); ++k) {
                           const auto &br = e.branches[k];
                           out << (k == 0 ? " " : " ; ") << br.label << " raw=" << format_fixed(br.raw_weight)
                               << " weight=" << format_fixed(br.weight);
                       }
                   },
               },
               event.payload);
    out << " norm2=" << format_fixed(event.norm_squared);
    return out.str();
}

std::string event_json(const Event &event) {
    ordered_json j;
    j["event"] = event_kind_name(event.kind());
    j["seq"] = event.seq;
    std::visit(overloaded{
                   [&](const InitEvent &e) {
                       ordered_json locs = ordered_json::array();
                       for (const auto &[w, agent] : e.locations) {
                           locs.push_back({{"wire", w}, {"agent", agent_name(agent)}});
                       }
                       j["locations"] = locs;
                   },
                   [&](const GateEvent &e) {
                       j["gate"] = e.gate;
                       j["actor"] = agent_name(e.actor);
                       j["wires"] = e.wires;
                   },
                   [&](const TransferEvent &e) {
                       j["wire"] = e.wire;
                       j["from"] = agent_name(e.from);
                       j["to"] = agent_name(e.to);
                   },
                   [&](const DecomposeEvent &e) {
                       j["pointer"] = e.pointer;
                       ordered_json brs = ordered_json::array();
                       for (const auto &br : e.branches) {
                           brs.push_back({{"label", br.label},
                                          {"raw_weight", printed_value(br.raw_weight)},
                                          {"weight", printed_value(br.weight)}});
                       }
                       j["branches"] = brs;
                   },
               },
               event.payload);
    j["norm2"] = printed_value(event.norm_squared);
    return j.dump();
}

ProtocolWorld ProtocolWorld::init(PureState state, const std::map<WireLabel, Agent> &locations) {
    if (state.is_zero()) {
        fail(ErrorCode::ZeroState, "protocol world cannot start from the zero state");
    }
    InitEvent init;
    for (const auto &w : state.wires()) {
        auto it = locations.find(w);
        if (it == locations.end()) {
            fail(ErrorCode::Label, "wire '" + w + "' has no location");
        }
        init.locations.emplace_back(w, it->second);
    }
    for (const auto &[w, agent] : locations) {
        if (!state.has_wire(w)) {
            fail(ErrorCode::Label, "location given for unknown wire '" + w + "'");
        }
    }
    ProtocolWorld world(std::move(state), locations);
    world.record(std::move(init));
    return world;
}

Agent ProtocolWorld::location(std::string_view wire) const {
    auto it = locations_.find(std::string(wire));
    if (it == locations_.end()) {
        fail(ErrorCode::Label, "unknown wire '" + std::string(wire) + "'");
    }
    return it->second;
}

void ProtocolWorld::record(decltype(Event::payload) payload) {
    trace_.push_back(Event{trace_.size(), std::move(payload), state_.squared_norm()});
}

ProtocolWorld transfer(const ProtocolWorld &w, const WireLabel &wire, Agent to) {
    Agent from = w.location(wire);
    ProtocolWorld next = w;
    next.locations_[wire] = to;
    next.record(TransferEvent{wire, from, to});
    return next;
}

ProtocolWorld apply_local(const ProtocolWorld &w, const UnitaryGate &g, const std::vector<WireLabel> &targets,
                          Agent actor) {
    for (const auto &t : targets) {
        Agent holder = w.location(t);
        if (holder != actor) {
            fail(ErrorCode::Locality, std::string(agent_name(actor)) + " cannot apply " + g.name() + ": wire '" + t +
                                          "' is held by " + agent_name(holder));
        }
    }
    ProtocolWorld next = w;
    next.state_ = apply(g, targets, w.state_);
    next.record(GateEvent{g.name(), actor, targets});
    return next;
}

std::pair<ProtocolWorld, BranchDecomposition> decompose(const ProtocolWorld &w, const std::vector<WireLabel> &pointer,
                                                        double tol) {
    BranchDecomposition branches = branch_decompose(w.state_, pointer, tol);
    DecomposeEvent e{pointer, {}};
    for (const auto &br : branches.branches) {
        e.branches.push_back(BranchSummary{br.label, br.raw_weight, br.weight});
    }
    ProtocolWorld next = w;
    next.record(std::move(e));
    return {std::move(next), std::move(branches)};
}

LocalityAudit audit_locality(const Trace &trace) {
    LocalityAudit audit;
    std::map<WireLabel, Agent> where;
    auto violation = [&](const Event &e, const std::string &msg) {
        audit.ok = false;
        audit.violations.push_back("event " + std::to_string(e.seq) + ": " + msg);
    };
    bool seen_init = false;
    for (const auto &e : trace) {
        std::visit(overloaded{
                       [&](const InitEvent &init) {
                           seen_init = true;
                           where.clear();
                           for (const auto &[wire, agent] : init.locations) {
                               where[wire] = agent;
                           }
                       },
                       [&](const GateEvent &g) {
                           if (!seen_init) {
                               violation(e, "gate before init");
                               return;
                           }
                           for (const auto &wire : g.wires) {
                               auto it = where.find(wire);
                               if (it == where.end()) {
                                   violation(e, "gate touches undeclared wire '" + wire + "'");
                               } else if (it->second != g.actor) {
                                   violation(e, g.gate + " by " + agent_name(g.actor) + " touches wire '" + wire +
                                                    "' held by " + agent_name(it->second));
                               }
                           }
                       },
                       [&](const TransferEvent &t) {
                           auto it = where.find(t.wire);
                           if (it == where.end()) {
                               violation(e, "transfer of undeclared wire '" + t.wire + "'");
                           } else if (it->second != t.from) {
                               violation(e, "transfer of '" + t.wire + "' from an agent that does not hold it");
                           } else {
                               it->second = t.to;
                           }
                       },
                       [](const DecomposeEvent &) {},
                   },
                   e.payload);
    }
    return audit;
}

PureState superdense_expected_intermediate(int p, int q) {
    check_bit(p, "p");
    check_bit(q, "q");
    PureState ab = sign_of(p) * tensor(ket(wire::a, (p + q) % 2), ket(wire::b, 0)) +
                   tensor(ket(wire::a, (p + q + 1) % 2), ket(wire::b, 1));
    return tensor(ket(wire::c, p), ket(wire::d, q), ab, ket(wire::E1, 0), ket(wire::E2, 0));
}

SuperdenseResult run_superdense(int p, int q) {
    check_bit(p, "p");
    check_bit(q, "q");
    PureState initial = tensor(ket(wire::c, p), ket(wire::d, q), lambda_pair(wire::a, wire::b), ket(wire::E1, 0),
                               ket(wire::E2, 0));
    ProtocolWorld world = ProtocolWorld::init(std::move(initial), {{wire::c, Agent::Alice},
                                                                   {wire::d, Agent::Alice},
                                                                   {wire::a, Agent::Alice},
                                                                   {wire::b, Agent::Bob},
                                                                   {wire::E1, Agent::Bob},
                                                                   {wire::E2, Agent::Bob}});
    world = apply_local(world, cu_sigma(), {wire::c, wire::d, wire::a}, Agent::Alice);
    PureState intermediate = world.state();
    if (!equal_up_to_phase(intermediate, superdense_expected_intermediate(p, q))) {
        fail(ErrorCode::Protocol, "superdense: state after cu_sigma does not match the expected encoding");
    }
    world = transfer(world, wire::a, Agent::Bob);
    world = apply_local(world, cu_meas(), {wire::E1, wire::E2, wire::a, wire::b}, Agent::Bob);
    auto [final_world, branches] = decompose(world, {wire::E1, wire::E2}, kBranchTolerance);
    if (branches.branches.size() != 1) {
        fail(ErrorCode::Protocol,
             "superdense: expected one pointer branch, found " + std::to_string(branches.branches.size()));
    }
    std::string pointer = branches.branches.front().label;
    std::size_t count = branches.branches.size();
    return SuperdenseResult{p,
                            q,
                            std::move(pointer),
                            std::move(intermediate),
                            final_world.state(),
                            std::move(branches),
                            count,
                            final_world.trace()};
}

DecodeTable derive_decode_table() {
    DecodeTable table;
    std::set<std::string> images;
    bool identity = true;
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            std::string input = std::to_string(p) + std::to_string(q);
            std::string pointer = run_superdense(p, q).pointer;
            identity = identity && pointer == input;
            images.insert(pointer);
            table.pointer_for[input] = pointer;
        }
    }
    table.bijective = images.size() == 4;
    if (!table.bijective) {
        fail(ErrorCode::Internal, "superdense decode table is not a bijection");
    }
    table.is_identity = identity;
    return table;
}

PureState teleport_expected_post_measure(Amplitude alpha, Amplitude beta) {
    PureState acc = PureState::zero({wire::E1, wire::E2, wire::u, wire::a, wire::b});
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            acc = acc + tensor(ket(wire::E1, x), ket(wire::E2, y), bell(x, y, wire::u, wire::a),
                               bob_branch_state(x, y, alpha, beta));
        }
    }
    return acc;
}

PureState teleport_expected_pointer_side() {
    PureState acc = PureState::zero({wire::E1, wire::E2, wire::u, wire::a});
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            acc = acc + tensor(ket(wire::E1, x), ket(wire::E2, y), bell(x, y, wire::u, wire::a));
        }
    }
    return acc;
}

TeleportResult run_teleport(Amplitude alpha, Amplitude beta) {
    if (alpha == Amplitude{} && beta == Amplitude{}) {
        fail(ErrorCode::ZeroState, "teleport: the input qubit is the zero vector");
    }
    PureState input({wire::u}, {alpha, beta});
    PureState initial = tensor(ket(wire::E1, 0), ket(wire::E2, 0), input, lambda_pair(wire::a, wire::b));
    ProtocolWorld world = ProtocolWorld::init(std::move(initial), {{wire::E1, Agent::Alice},
                                                                   {wire::E2, Agent::Alice},
                                                                   {wire::u, Agent::Alice},
                                                                   {wire::a, Agent::Alice},
                                                                   {wire::b, Agent::Bob}});
    world = apply_local(world, cu_meas(), {wire::E1, wire::E2, wire::u, wire::a}, Agent::Alice);
    PureState post_measure = world.state();
    if (!equal_up_to_phase(post_measure, teleport_expected_post_measure(alpha, beta))) {
        fail(ErrorCode::Protocol, "teleport: state after Alice's measurement does not match the four-branch form");
    }
    world = transfer(world, wire::E1, Agent::Bob);
    world = transfer(world, wire::E2, Agent::Bob);
    world = apply_local(world, u_b_decoder(), {wire::E1, wire::E2, wire::b}, Agent::Bob);

    SchmidtResult split = schmidt_factor(world.state(), Bipartition{{wire::E1, wire::E2, wire::u, wire::a}, {wire::b}});
    if (split.rank != 1 || !split.factors) {
        fail(ErrorCode::Protocol, "teleport: Bob's qubit is still entangled (Schmidt rank " +
                                      std::to_string(split.rank) + ")");
    }
    PureState target = PureState({wire::b}, {alpha, beta}).normalized();
    PureState bob = split.factors->second.normalized();
    Amplitude overlap = inner_product(bob, target);
    if (std::abs(overlap) > 0) {
        bob = bob.scaled(overlap / std::abs(overlap));
    }
    double f = fidelity(bob, target);
    return TeleportResult{alpha,
                          beta,
                          std::move(post_measure),
                          world.state(),
                          std::move(bob),
                          split.factors->first,
                          f,
                          split.rank,
                          world.trace()};
}

}  // namespace everett
