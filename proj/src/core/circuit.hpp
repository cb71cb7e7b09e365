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

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "protocols.hpp"
#include "statevector.hpp"

namespace everett {

/// Circuit description language (`.ecirc`), one statement per line:
///
///   wire <label> @ <Alice|Bob>
///   init <label> = |0>  |  |1>  |  (<re>,<im>) |0> + (<re>,<im>) |1>
///   init pair <label> <label> = bell <x> <y>
///   gate <name> <label>... @ <agent>
///   transfer <label> -> <agent>
///   assert pointer <label>... = <bits>
///   assert factor <label> ~ <qubit expression>
///
/// `#` starts a comment. Gate names are sigma00 .. sigma11, cu_sigma,
/// cu_meas, u_b, and ctrl(<sigma>,...) for an inline control-unitary over
/// the sigma family with 2^k branches (k control wires, then one target).

/// Single-qubit amplitudes as written in the source.
struct QubitExpr {
    Amplitude zero;
    Amplitude one;
    std::string text;  // source spelling, normalized spacing
};

struct BellExpr {
    int x;
    int y;
};

struct InitStmt {
    std::vector<WireLabel> wires;  // one wire, or two for a Bell pair
    std::variant<QubitExpr, BellExpr> value;
};

struct GateStmt {
    std::string gate;                   // as written, e.g. "cu_sigma"
    std::vector<std::string> branches;  // ctrl(...) branch names, else empty
    std::vector<WireLabel> wires;
    Agent actor;
};

struct TransferStmt {
    WireLabel wire;
    Agent to;
};

struct AssertPointerStmt {
    std::vector<WireLabel> pointer;
    std::string bits;
};

struct AssertFactorStmt {
    WireLabel wire;
    QubitExpr expected;
};

enum class StatementKind { Init, Gate, Transfer, AssertPointer, AssertFactor };

struct Statement {
    int line = 0;
    int column = 0;
    std::variant<InitStmt, GateStmt, TransferStmt, AssertPointerStmt, AssertFactorStmt> body;

    StatementKind kind() const noexcept { return static_cast<StatementKind>(body.index()); }
};

struct Register {
    WireLabel label;
    Agent agent;
    int line = 0;
};

struct CircuitProgram {
    std::vector<Register> registers;
    std::vector<Statement> statements;
};

struct ParseError {
    int line = 0;
    int column = 0;
    std::string message;
    std::string expected;

    /// "<line>:<column>: <message> (expected <expected>)"
    std::string str() const;
};

using ParseResult = std::variant<CircuitProgram, ParseError>;

/// Deterministic single pass; the first error wins.
ParseResult parse_circuit(std::string_view source);

/// The gate a parsed Gate statement names.
UnitaryGate resolve_gate(const GateStmt &stmt);

/// Tolerance for `assert` statements.
inline constexpr double kAssertionTolerance = 1e-10;

struct AssertionOutcome {
    int line = 0;
    StatementKind kind = StatementKind::AssertPointer;
    bool passed = false;
    std::string detail;
};

struct Execution {
    ProtocolWorld world;
    std::vector<AssertionOutcome> assertions;

    bool all_passed() const;
};

/// Runs statements in order. Initial state is the tensor product of the
/// init values (|0> for wires without one), arranged in wire declaration
/// order. Throws Error (Locality) on the first non-local gate; failed
/// assertions are recorded and execution continues.
Execution exec_circuit(const CircuitProgram &prog);

/// Monospace diagram: one lane per (wire, agent) pair, Alice lanes above the
/// separator, time left to right.
std::string render_ascii(const CircuitProgram &prog);

/// Replaces each `@name@` for the given names.
std::string instantiate_template(std::string_view source, const std::map<std::string, std::string> &values);

/// Committed fixtures, embedded at build time.
const std::string &superdense_template();
const std::string &teleport_fixture();

/// superdense_template() with p, q and the asserted pointer label filled in.
std::string superdense_fixture(int p, int q, const std::string &pointer);

}  // namespace everett
