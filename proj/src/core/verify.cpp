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

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "circuit.hpp"
#include "format.hpp"
#include "gates.hpp"
#include "protocols.hpp"

namespace everett {

namespace {

constexpr double kExact = 1e-14;
constexpr double kTol = 1e-12;
constexpr double kFidelityFloor = 1 - 1e-10;
constexpr int kTeleportTrials = 1000;

struct Check {
    bool ok = true;
    std::ostringstream note;

    void require(bool cond, const std::string &what) {
        if (!cond && ok) {
            note << what;
        }
        ok = ok && cond;
    }
};

CheckResult finish(int id, std::string name, Check &c, const std::string &summary) {
    return CheckResult{id, std::move(name), c.ok, c.ok ? summary : c.note.str()};
}

PureState ket1(const WireLabel &w, int bit) { return PureState::basis({w}, static_cast<std::uint64_t>(bit)); }

CheckResult sigma_identities() {
    Check c;
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            UnitaryGate s = sigma(p, q);
            PureState out0 = apply(s, {"x"}, ket1("x", 0));
            PureState out1 = apply(s, {"x"}, ket1("x", 1));
            PureState want0 = ket1("x", (p + q) % 2).scaled(p ? -1.0 : 1.0);
            PureState want1 = ket1("x", (p + q + 1) % 2);
            for (std::size_t k = 0; k < 2; ++k) {
                c.require(std::abs(out0.amplitude(k) - want0.amplitude(k)) < kExact &&
                              std::abs(out1.amplitude(k) - want1.amplitude(k)) < kExact,
                          "sigma" + std::to_string(p) + std::to_string(q) + " violates its action rule");
            }
        }
    }
    // Displayed matrices, written for column vectors |0> = (0,1)^T, |1> = (1,0)^T.
    const std::vector<std::vector<Amplitude>> displayed = {
        {1, 0, 0, 1}, {0, 1, 1, 0}, {0, -1, 1, 0}, {1, 0, 0, -1}};
    for (int k = 0; k < 4; ++k) {
        UnitaryGate translated = in_swapped_ket_convention(sigma(k / 2, k % 2));
        c.require(translated.matrix() == displayed[static_cast<std::size_t>(k)],
                  "sigma" + std::to_string(k / 2) + std::to_string(k % 2) +
                      " does not match its displayed matrix in the swapped ket convention");
    }
    return finish(1, "sigma identities", c, "8 action rules exact; 4 displayed matrices match");
}

CheckResult bell_gram() {
    Check c;
    double worst = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            Amplitude g = inner_product(bell(i / 2, i % 2, "m1", "m2"), bell(j / 2, j % 2, "m1", "m2"));
            worst = std::max(worst, std::abs(g - Amplitude(i == j ? 2.0 : 0.0)));
        }
    }
    c.require(worst <= kTol, "Gram matrix deviates from 2*I by " + format_fixed(worst));
    return finish(2, "bell gram matrix", c, "Gram = 2*I over 16 pairs");
}

CheckResult gate_unitarity() {
    Check c;
    for (const UnitaryGate &g : {cu_sigma(), cu_meas(), u_b_decoder()}) {
        c.require(g.is_unitary(kTol), g.name() + " is not unitary");
    }
    const UnitaryGate meas = cu_meas();
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            PureState psi = bell(x, y, "m1", "m2");
            PureState in = tensor(ket1("E1", 0), ket1("E2", 0), psi);
            PureState want = tensor(ket1("E1", x), ket1("E2", y), psi);
            PureState got = apply(meas, {"E1", "E2", "m1", "m2"}, in);
            double dev = 0;
            for (std::size_t k = 0; k < got.dimension(); ++k) {
                dev = std::max(dev, std::abs(got.amplitude(k) - want.amplitude(k)));
            }
            c.require(dev <= kTol, "cu_meas moves the pointer wrongly on psi" + std::to_string(x) + std::to_string(y));
        }
    }
    return finish(3, "gate unitarity", c, "cu_sigma, cu_meas, u_b unitary; cu_meas reads all four Bell states");
}

CheckResult superdense_intermediate() {
    Check c;
    double worst = 0;
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            SuperdenseResult r = run_superdense(p, q);
            double d = phase_distance(r.intermediate_state, superdense_expected_intermediate(p, q));
            worst = std::max(worst, d);
        }
    }
    c.require(worst < kTol, "intermediate state off by phase distance " + format_fixed(worst));
    return finish(4, "superdense intermediate state", c, "all four encodings match up to phase");
}

CheckResult superdense_end_to_end() {
    Check c;
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            SuperdenseResult r = run_superdense(p, q);
            const std::string tag = " for (" + std::to_string(p) + "," + std::to_string(q) + ")";
            c.require(r.branch_count == 1 && std::abs(r.branches.branches.front().weight - 1) <= kTol,
                      "pointer is not a single branch of weight 1" + tag);
            const PureState &residual = r.branches.branches.front().residual;
            SchmidtResult split = schmidt_factor(residual, Bipartition{{wire::c, wire::d}, {wire::a, wire::b}});
            PureState want_cd = tensor(ket1(wire::c, p), ket1(wire::d, q));
            c.require(split.rank == 1 && split.factors && equal_up_to_phase(split.factors->first, want_cd, kTol),
                      "Alice's bits are disturbed" + tag);
            int transfers_of_a = 0;
            int transfers = 0;
            for (const auto &e : r.trace) {
                if (const auto *t = std::get_if<TransferEvent>(&e.payload)) {
                    ++transfers;
                    transfers_of_a += t->wire == wire::a ? 1 : 0;
                }
            }
            c.require(transfers == 1 && transfers_of_a == 1, "trace must hold exactly one transfer, of wire a" + tag);
        }
    }
    DecodeTable table = derive_decode_table();
    c.require(table.bijective, "decode table is not a bijection");
    std::string summary = "one branch each; decode table " + describe_decode_table() + " (bijection; " +
                          (table.is_identity ? "matches" : "differs from") + " the pq -> pq identity)";
    return finish(5, "superdense end-to-end", c, summary);
}

CheckResult teleportation() {
    Check c;
    std::mt19937_64 rng(20061017);
    std::normal_distribution<double> normal;
    const PureState pointer_side = teleport_expected_pointer_side();
    double min_fidelity = 1;
    for (int trial = 0; trial < kTeleportTrials && c.ok; ++trial) {
        Amplitude alpha(normal(rng), normal(rng));
        Amplitude beta(normal(rng), normal(rng));
        double n = std::sqrt(std::norm(alpha) + std::norm(beta));
        alpha /= n;
        beta /= n;
        TeleportResult r = run_teleport(alpha, beta);
        c.require(phase_distance(r.post_measure_state, teleport_expected_post_measure(alpha, beta)) < kTol,
                  "post-measurement state mismatch at trial " + std::to_string(trial));
        c.require(r.schmidt_rank_b_cut == 1, "Bob's qubit is entangled at trial " + std::to_string(trial));
        c.require(phase_distance(r.pointer_side, pointer_side) < kTol,
                  "pointer-side factor mismatch at trial " + std::to_string(trial));
        min_fidelity = std::min(min_fidelity, r.fidelity);
    }
    c.require(min_fidelity >= kFidelityFloor, "fidelity fell to " + format_fixed(min_fidelity));
    return finish(6, "teleportation", c,
                  std::to_string(kTeleportTrials) + " random inputs; min fidelity " + format_fixed(min_fidelity));
}

std::vector<std::string> shipped_fixtures() {
    DecodeTable table = derive_decode_table();
    std::vector<std::string> out;
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            out.push_back(superdense_fixture(p, q, table.pointer_for.at(std::to_string(p) + std::to_string(q))));
        }
    }
    out.push_back(teleport_fixture());
    return out;
}

CheckResult locality() {
    Check c;
    try {
        PureState initial = tensor(ket1(wire::c, 0), ket1(wire::d, 1), lambda_pair(wire::a, wire::b),
                                   ket1(wire::E1, 0), ket1(wire::E2, 0));
        ProtocolWorld w = ProtocolWorld::init(initial, {{wire::c, Agent::Alice},
                                                        {wire::d, Agent::Alice},
                                                        {wire::a, Agent::Alice},
                                                        {wire::b, Agent::Bob},
                                                        {wire::E1, Agent::Bob},
                                                        {wire::E2, Agent::Bob}});
        w = apply_local(w, cu_sigma(), {wire::c, wire::d, wire::a}, Agent::Alice);
        w = apply_local(w, cu_meas(), {wire::E1, wire::E2, wire::a, wire::b}, Agent::Bob);
        c.require(false, "measuring before the transfer was accepted");
    } catch (const Error &e) {
        c.require(e.code() == ErrorCode::Locality, std::string("wrong error for early measurement: ") + e.what());
    }
    for (const auto &src : shipped_fixtures()) {
        ParseResult parsed = parse_circuit(src);
        if (const auto *err = std::get_if<ParseError>(&parsed)) {
            c.require(false, "shipped fixture does not parse: " + err->str());
            continue;
        }
        Execution ex = exec_circuit(std::get<CircuitProgram>(parsed));
        LocalityAudit audit = audit_locality(ex.world.trace());
        c.require(audit.ok, "fixture trace fails the locality audit");
        c.require(ex.all_passed(), "fixture assertion failed");
    }
    return finish(7, "locality", c, "early measurement rejected; 5 fixture traces audited");
}

const std::vector<std::string> &malformed_sources() {
    static const std::vector<std::string> cases = {
        "transfer a ->",
        "wire a @ Alice\nwire a @ Bob",
        "wire a @ Carol",
        "wire a Alice",
        "wire init @ Alice",
        "wire a @ Alice\ninit a = |2>",
        "wire a @ Alice\ninit a = |0",
        "wire a @ Alice\ninit b = |0>",
        "wire a @ Alice\ninit a = |0>\ninit a = |1>",
        "wire a @ Alice\nwire b @ Bob\ninit pair a b = bell 0 2",
        "wire a @ Alice\nwire b @ Bob\ninit pair a a = bell 0 0",
        "wire a @ Alice\ninit a = (1,0) |0> + (0,0)",
        "wire a @ Alice\ninit a = (0,0) |0> + (0,0) |1>",
        "wire a @ Alice\ninit a = |0>\ngate hadamard a @ Alice",
        "wire a @ Alice\ninit a = |0>\ngate cu_sigma a @ Alice",
        "wire a @ Alice\nwire b @ Alice\ninit a = |0>\ninit b = |0>\ngate cu_meas a a b b @ Alice",
        "wire a @ Alice\ninit a = |0>\ngate sigma01 a",
        "wire a @ Alice\nwire b @ Alice\ninit a = |0>\ninit b = |0>\nassert pointer a b = 012",
        "wire a @ Alice\ninit a = |0>\ntransfer a -> Bob\ninit a = |1>",
        "wire a @ Alice\n$",
    };
    return cases;
}

CheckResult dsl_round_trip() {
    Check c;
    auto same_amplitudes = [](const PureState &x, const PureState &y) {
        if (x.wires() != y.wires()) {
            return false;
        }
        auto a = x.amplitudes();
        auto b = y.amplitudes();
        return std::equal(a.begin(), a.end(), b.begin());
    };
    DecodeTable table = derive_decode_table();
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            std::string src = superdense_fixture(p, q, table.pointer_for.at(std::to_string(p) + std::to_string(q)));
            auto parsed = parse_circuit(src);
            if (!std::holds_alternative<CircuitProgram>(parsed)) {
                c.require(false, "superdense fixture does not parse");
                continue;
            }
            Execution ex = exec_circuit(std::get<CircuitProgram>(parsed));
            c.require(same_amplitudes(ex.world.state(), run_superdense(p, q).final_state),
                      "superdense fixture diverges from the programmatic run");
        }
    }
    auto parsed = parse_circuit(teleport_fixture());
    if (std::holds_alternative<CircuitProgram>(parsed)) {
        Execution ex = exec_circuit(std::get<CircuitProgram>(parsed));
        c.require(same_amplitudes(ex.world.state(), run_teleport({0.6, 0}, {0, 0.8}).final_state),
                  "teleport fixture diverges from the programmatic run");
    } else {
        c.require(false, "teleport fixture does not parse");
    }
    int positioned = 0;
    for (const auto &src : malformed_sources()) {
        auto r = parse_circuit(src);
        if (const auto *err = std::get_if<ParseError>(&r)) {
            positioned += (err->line >= 1 && err->column >= 1) ? 1 : 0;
        }
    }
    c.require(positioned == static_cast<int>(malformed_sources().size()),
              "only " + std::to_string(positioned) + " malformed sources produced a positioned error");
    return finish(8, "dsl round trip", c,
                  "5 fixtures bit-identical to the runners; " + std::to_string(positioned) +
                      " malformed sources rejected with a position");
}

CheckResult determinism() {
    Check c;
    std::vector<std::string> sources = shipped_fixtures();
    for (const auto &src : sources) {
        const auto &prog = std::get<CircuitProgram>(parse_circuit(src));
        c.require(render_ascii(prog) == render_ascii(std::get<CircuitProgram>(parse_circuit(src))),
                  "render output differs between runs");
    }
    auto json_of = [](const Trace &t) {
        std::string out;
        for (const auto &e : t) {
            out += event_json(e) + "\n";
        }
        return out;
    };
    c.require(json_of(run_superdense(0, 1).trace) == json_of(run_superdense(0, 1).trace),
              "superdense JSON trace differs between runs");
    c.require(json_of(run_teleport({0.6, 0}, {0, 0.8}).trace) == json_of(run_teleport({0.6, 0}, {0, 0.8}).trace),
              "teleport JSON trace differs between runs");
    return finish(9, "determinism", c, "render and JSON output identical across runs");
}

}  // namespace

std::string describe_decode_table() {
    DecodeTable table = derive_decode_table();
    std::string out;
    for (const auto &[in, ptr] : table.pointer_for) {
        out += (out.empty() ? "" : " ") + in + "->" + ptr;
    }
    return out;
}

std::vector<CheckResult> run_verification() {
    const std::vector<std::pair<const char *, std::function<CheckResult()>>> checks = {
        {"sigma identities", sigma_identities},
        {"bell gram matrix", bell_gram},
        {"gate unitarity", gate_unitarity},
        {"superdense intermediate state", superdense_intermediate},
        {"superdense end-to-end", superdense_end_to_end},
        {"teleportation", teleportation},
        {"locality", locality},
        {"dsl round trip", dsl_round_trip},
        {"determinism", determinism},
    };
    std::vector<CheckResult> out;
    for (const auto &[name, check] : checks) {
        const int id = static_cast<int>(out.size()) + 1;
        try {
            out.push_back(check());
        } catch (const std::exception &e) {
            out.push_back(CheckResult{id, name, false, std::string("raised: ") + e.what()});
        }
    }
    return out;
}

}  // namespace everett
