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


#include "circuit.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>

#include "format.hpp"
#include "gates.hpp"

namespace everett {

namespace {

enum class Tok { Ident, Number, Ket, Arrow, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    int column;
};

const std::set<std::string, std::less<>> kKeywords = {"wire",   "init",   "pair",    "bell",   "gate",
                                                      "transfer", "assert", "pointer", "factor"};

// Thrown inside the parser only; parse_circuit converts it to a value.
struct ParseFailure {
    ParseError error;
};

[[noreturn]] void parse_fail(int line, int column, std::string message, std::string expected) {
    throw ParseFailure{ParseError{line, column, std::move(message), std::move(expected)}};
}

bool is_ident_start(char ch) { return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '_'; }
bool is_ident_char(char ch) { return is_ident_start(ch) || (ch >= '0' && ch <= '9'); }
bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

std::vector<Token> lex_line(std::string_view text, int line) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < text.size()) {
        char ch = text[k];
        int col = static_cast<int>(k) + 1;
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++k;
        } else if (ch == '#') {
            break;
        } else if (is_ident_start(ch)) {
            std::size_t start = k;
            while (k < text.size() && is_ident_char(text[k])) {
                ++k;
            }
            out.push_back({Tok::Ident, std::string(text.substr(start, k - start)), col});
        } else if (is_digit(ch) || ch == '.' ||
                   (ch == '-' && k + 1 < text.size() && (is_digit(text[k + 1]) || text[k + 1] == '.'))) {
            double value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + k, text.data() + text.size(), value);
            if (ec != std::errc{}) {
                parse_fail(line, col, "malformed number", "a decimal number");
            }
            std::size_t len = static_cast<std::size_t>(ptr - (text.data() + k));
            out.push_back({Tok::Number, std::string(text.substr(k, len)), col});
            k += len;
        } else if (ch == '|') {
            if (k + 2 < text.size() && (text[k + 1] == '0' || text[k + 1] == '1') && text[k + 2] == '>') {
                out.push_back({Tok::Ket, std::string(text.substr(k, 3)), col});
                k += 3;
            } else {
                parse_fail(line, col, "malformed ket", "|0> or |1>");
            }
        } else if (ch == '-' && k + 1 < text.size() && text[k + 1] == '>') {
            out.push_back({Tok::Arrow, "->", col});
            k += 2;
        } else if (ch == '@' || ch == '=' || ch == '(' || ch == ')' || ch == ',' || ch == '+' || ch == '~') {
            out.push_back({Tok::Punct, std::string(1, ch), col});
            ++k;
        } else {
            std::string shown = (static_cast<unsigned char>(ch) < 0x80) ? std::string(1, ch) : "non-ASCII byte";
            parse_fail(line, col, "unexpected character '" + shown + "'", "a statement token");
        }
    }
    out.push_back({Tok::End, "", static_cast<int>(text.size()) + 1});
    return out;
}

struct GateInfo {
    std::size_t arity;
};

std::optional<GateInfo> fixed_gate(std::string_view name) {
    if (name == "sigma00" || name == "sigma01" || name == "sigma10" || name == "sigma11") {
        return GateInfo{1};
    }
    if (name == "cu_sigma" || name == "u_b") {
        return GateInfo{3};
    }
    if (name == "cu_meas") {
        return GateInfo{4};
    }
    return std::nullopt;
}

bool is_sigma_name(std::string_view name) { return name.size() == 7 && name.substr(0, 5) == "sigma" && fixed_gate(name); }

class LineParser {
  public:
    LineParser(std::vector<Token> tokens, int line) : toks_(std::move(tokens)), line_(line) {}

    const Token &peek() const { return toks_[pos_]; }
    bool at_end() const { return peek().kind == Tok::End; }
    int line() const { return line_; }

    const Token &next() {
        const Token &t = toks_[pos_];
        if (t.kind != Tok::End) {
            ++pos_;
        }
        return t;
    }

    [[noreturn]] void error_here(const std::string &message, const std::string &expected) const {
        parse_fail(line_, peek().column, message, expected);
    }

    [[noreturn]] void unexpected(const std::string &expected) const {
        const Token &t = peek();
        if (t.kind == Tok::End) {
            parse_fail(line_, t.column, "unexpected end of line", expected);
        }
        parse_fail(line_, t.column, "unexpected '" + t.text + "'", expected);
    }

    const Token &ident(const std::string &expected) {
        if (peek().kind != Tok::Ident) {
            unexpected(expected);
        }
        return next();
    }

    void keyword(std::string_view word) {
        if (peek().kind != Tok::Ident || peek().text != word) {
            unexpected("'" + std::string(word) + "'");
        }
        next();
    }

    void punct(char ch) {
        if (peek().kind != Tok::Punct || peek().text[0] != ch) {
            unexpected("'" + std::string(1, ch) + "'");
        }
        next();
    }

    bool accept_punct(char ch) {
        if (peek().kind == Tok::Punct && peek().text[0] == ch) {
            next();
            return true;
        }
        return false;
    }

    void arrow() {
        if (peek().kind != Tok::Arrow) {
            unexpected("'->'");
        }
        next();
    }

    const Token &number(const std::string &expected) {
        if (peek().kind != Tok::Number) {
            unexpected(expected);
        }
        return next();
    }

    int bit(const std::string &what) {
        const Token &t = number(what + " (0 or 1)");
        if (t.text != "0" && t.text != "1") {
            parse_fail(line_, t.column, what + " must be 0 or 1", "0 or 1");
        }
        return t.text[0] - '0';
    }

    double real(const std::string &expected) {
        const Token &t = number(expected);
        double v = 0;
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        return v;
    }

    Agent agent() {
        const Token &t = ident("agent name (Alice or Bob)");
        auto a = parse_agent(t.text);
        if (!a) {
            parse_fail(line_, t.column, "unknown agent '" + t.text + "'", "agent name (Alice or Bob)");
        }
        return *a;
    }

    void end() {
        if (!at_end()) {
            unexpected("end of line");
        }
    }

  private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int line_;
};

class ProgramParser {
  public:
    CircuitProgram run(std::string_view source) {
        int line_no = 0;
        std::size_t start = 0;
        while (start <= source.size()) {
            std::size_t nl = source.find('\n', start);
            std::string_view text = source.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
            ++line_no;
            statement(LineParser(lex_line(text, line_no), line_no));
            if (nl == std::string_view::npos) {
                break;
            }
            start = nl + 1;
        }
        return std::move(prog_);
    }

  private:
    void statement(LineParser p) {
        if (p.at_end()) {
            return;
        }
        const Token &head = p.ident("a statement keyword (wire, init, gate, transfer, assert)");
        Statement st;
        st.line = p.line();
        st.column = head.column;
        if (head.text == "wire") {
            wire_decl(p, head);
            return;
        }
        if (head.text == "init") {
            if (started_) {
                parse_fail(p.line(), head.column, "init after the circuit has started",
                           "init statements before the first gate, transfer or assert");
            }
            st.body = init_stmt(p);
        } else if (head.text == "gate") {
            started_ = true;
            st.body = gate_stmt(p);
        } else if (head.text == "transfer") {
            started_ = true;
            TransferStmt t;
            t.wire = declared_label(p);
            p.arrow();
            t.to = p.agent();
            st.body = std::move(t);
        } else if (head.text == "assert") {
            started_ = true;
            st.body = assert_stmt(p);
        } else {
            parse_fail(p.line(), head.column, "unknown statement '" + head.text + "'",
                       "a statement keyword (wire, init, gate, transfer, assert)");
        }
        p.end();
        prog_.statements.push_back(std::move(st));
    }

    void wire_decl(LineParser &p, const Token &head) {
        if (started_) {
            parse_fail(p.line(), head.column, "wire declared after the circuit has started",
                       "wire declarations before the first gate, transfer or assert");
        }
        const Token &label = new_label(p);
        if (label_columns_.count(label.text)) {
            parse_fail(p.line(), label.column, "wire '" + label.text + "' is already declared", "a fresh wire label");
        }
        p.punct('@');
        Agent agent = p.agent();
        p.end();
        label_columns_[label.text] = label.column;
        prog_.registers.push_back(Register{label.text, agent, p.line()});
    }

    InitStmt init_stmt(LineParser &p) {
        InitStmt init;
        std::vector<int> columns;
        auto target = [&] {
            columns.push_back(p.peek().column);
            init.wires.push_back(declared_label(p));
        };
        if (p.peek().kind == Tok::Ident && p.peek().text == "pair") {
            p.next();
            target();
            target();
            if (init.wires[0] == init.wires[1]) {
                parse_fail(p.line(), columns[1], "a pair needs two distinct wires", "a second wire label");
            }
            p.punct('=');
            p.keyword("bell");
            int x = p.bit("bell index x");
            int y = p.bit("bell index y");
            init.value = BellExpr{x, y};
        } else {
            target();
            p.punct('=');
            init.value = qubit_expr(p);
        }
        for (std::size_t k = 0; k < init.wires.size(); ++k) {
            if (!initialized_.insert(init.wires[k]).second) {
                parse_fail(p.line(), columns[k], "wire '" + init.wires[k] + "' is initialized twice",
                           "one init per wire");
            }
        }
        return init;
    }

    QubitExpr qubit_expr(LineParser &p) {
        const int col = p.peek().column;
        if (p.peek().kind == Tok::Ket) {
            const Token &k = p.next();
            bool one = k.text == "|1>";
            return QubitExpr{one ? 0.0 : 1.0, one ? 1.0 : 0.0, k.text};
        }
        if (p.peek().kind != Tok::Punct || p.peek().text != "(") {
            p.unexpected("|0>, |1> or (<re>,<im>) |0> + (<re>,<im>) |1>");
        }
        auto term = [&](const char *ket) {
            p.punct('(');
            const Token &re_tok = p.peek();
            double re = p.real("real part");
            std::string re_text = re_tok.text;
            p.punct(',');
            const Token &im_tok = p.peek();
            double im = p.real("imaginary part");
            std::string im_text = im_tok.text;
            p.punct(')');
            if (p.peek().kind != Tok::Ket || p.peek().text != ket) {
                p.unexpected(ket);
            }
            p.next();
            return std::pair{Amplitude{re, im}, "(" + re_text + "," + im_text + ")" + ket};
        };
        auto [zero, zero_text] = term("|0>");
        p.punct('+');
        auto [one, one_text] = term("|1>");
        if (zero == Amplitude{} && one == Amplitude{}) {
            parse_fail(p.line(), col, "qubit expression is the zero vector", "at least one nonzero amplitude");
        }
        return QubitExpr{zero, one, zero_text + " + " + one_text};
    }

    GateStmt gate_stmt(LineParser &p) {
        GateStmt g;
        const Token &name = p.ident("gate name (sigma00, sigma01, sigma10, sigma11, cu_sigma, cu_meas, u_b, ctrl)");
        const int name_col = name.column;
        g.gate = name.text;
        std::size_t arity = 0;
        if (g.gate == "ctrl") {
            p.punct('(');
            do {
                const Token &b = p.ident("sigma gate name");
                if (!is_sigma_name(b.text)) {
                    parse_fail(p.line(), b.column, "ctrl branches must be sigma gates, got '" + b.text + "'",
                               "sigma00, sigma01, sigma10 or sigma11");
                }
                g.branches.push_back(b.text);
            } while (p.accept_punct(','));
            p.punct(')');
            std::size_t n = g.branches.size();
            if (n < 2 || (n & (n - 1)) != 0) {
                parse_fail(p.line(), name_col, "ctrl needs a power-of-two number of branches (at least 2), got " +
                                                   std::to_string(n),
                           "2, 4, 8, ... branch gates");
            }
            std::size_t controls = 0;
            while ((std::size_t{1} << controls) < n) {
                ++controls;
            }
            arity = controls + 1;
            g.gate = "ctrl(";
            for (std::size_t k = 0; k < n; ++k) {
                g.gate += (k ? "," : "") + g.branches[k];
            }
            g.gate += ")";
        } else if (auto info = fixed_gate(g.gate)) {
            arity = info->arity;
        } else {
            parse_fail(p.line(), name_col, "unknown gate '" + g.gate + "'",
                       "gate name (sigma00, sigma01, sigma10, sigma11, cu_sigma, cu_meas, u_b, ctrl)");
        }
        std::set<std::string> seen;
        while (!(p.peek().kind == Tok::Punct && p.peek().text == "@")) {
            if (p.at_end()) {
                p.unexpected("'@' followed by the acting agent");
            }
            const int col = p.peek().column;
            WireLabel w = declared_label(p);
            if (!seen.insert(w).second) {
                parse_fail(p.line(), col, "wire '" + w + "' appears twice in one gate", "distinct wire labels");
            }
            g.wires.push_back(std::move(w));
        }
        if (g.wires.size() != arity) {
            parse_fail(p.line(), name_col,
                       "gate " + g.gate + " acts on " + std::to_string(arity) + " wires, got " +
                           std::to_string(g.wires.size()),
                       std::to_string(arity) + " wire labels");
        }
        p.punct('@');
        g.actor = p.agent();
        return g;
    }

    decltype(Statement::body) assert_stmt(LineParser &p) {
        const Token &what = p.ident("'pointer' or 'factor'");
        if (what.text == "pointer") {
            AssertPointerStmt a;
            std::set<std::string> seen;
            while (!(p.peek().kind == Tok::Punct && p.peek().text == "=")) {
                if (p.at_end()) {
                    p.unexpected("'=' followed by the expected pointer bits");
                }
                const int col = p.peek().column;
                WireLabel w = declared_label(p);
                if (!seen.insert(w).second) {
                    parse_fail(p.line(), col, "pointer wire '" + w + "' repeated", "distinct wire labels");
                }
                a.pointer.push_back(std::move(w));
            }
            if (a.pointer.empty()) {
                p.unexpected("pointer wire label");
            }
            p.punct('=');
            const Token &bits = p.number("pointer bits");
            bool binary = std::all_of(bits.text.begin(), bits.text.end(), [](char ch) { return ch == '0' || ch == '1'; });
            if (!binary || bits.text.size() != a.pointer.size()) {
                parse_fail(p.line(), bits.column,
                           "pointer value '" + bits.text + "' must be " + std::to_string(a.pointer.size()) + " bits",
                           std::to_string(a.pointer.size()) + " binary digits");
            }
            a.bits = bits.text;
            return a;
        }
        if (what.text == "factor") {
            AssertFactorStmt a;
            a.wire = declared_label(p);
            p.punct('~');
            a.expected = qubit_expr(p);
            return a;
        }
        parse_fail(p.line(), what.column, "unknown assertion '" + what.text + "'", "'pointer' or 'factor'");
    }

    const Token &new_label(LineParser &p) {
        const Token &t = p.ident("wire label");
        if (kKeywords.count(t.text)) {
            parse_fail(p.line(), t.column, "'" + t.text + "' is a keyword", "wire label");
        }
        return t;
    }

    WireLabel declared_label(LineParser &p) {
        const Token &t = p.ident("wire label");
        if (!label_columns_.count(t.text)) {
            parse_fail(p.line(), t.column, "undeclared wire '" + t.text + "'", "a declared wire label");
        }
        return t.text;
    }

    CircuitProgram prog_;
    std::map<std::string, int> label_columns_;
    std::set<std::string> initialized_;
    bool started_ = false;
};

}  // namespace

std::string ParseError::str() const {
    std::string out = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    if (!expected.empty()) {
        out += " (expected " + expected + ")";
    }
    return out;
}

ParseResult parse_circuit(std::string_view source) {
    try {
        return ProgramParser().run(source);
    } catch (const ParseFailure &f) {
        return f.error;
    }
}

UnitaryGate resolve_gate(const GateStmt &stmt) {
    auto sigma_of = [](std::string_view name) { return sigma(name[5] - '0', name[6] - '0'); };
    if (!stmt.branches.empty()) {
        ControlSpec spec;
        while ((std::size_t{1} << spec.control_arity) < stmt.branches.size()) {
            ++spec.control_arity;
        }
        for (std::size_t k = 0; k < stmt.branches.size(); ++k) {
            spec.branch_gates.emplace(bit_string(k, spec.control_arity), sigma_of(stmt.branches[k]));
        }
        return control_unitary(spec, stmt.gate);
    }
    if (is_sigma_name(stmt.gate)) {
        return sigma_of(stmt.gate);
    }
    if (stmt.gate == "cu_sigma") {
        return cu_sigma();
    }
    if (stmt.gate == "cu_meas") {
        return cu_meas();
    }
    if (stmt.gate == "u_b") {
        return u_b_decoder();
    }
    fail(ErrorCode::InvalidArgument, "unknown gate '" + stmt.gate + "'");
}

bool Execution::all_passed() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const AssertionOutcome &a) { return a.passed; });
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

PureState initial_state(const CircuitProgram &prog) {
    std::optional<PureState> state;
    for (const auto &st : prog.statements) {
        const auto *init = std::get_if<InitStmt>(&st.body);
        if (!init) {
            continue;
        }
        PureState factor = std::visit(overloaded{
                                          [&](const QubitExpr &q) { return PureState({init->wires[0]}, {q.zero, q.one}); },
                                          [&](const BellExpr &b) { return bell(b.x, b.y, init->wires[0], init->wires[1]); },
                                      },
                                      init->value);
        state = state ? tensor(*state, factor) : std::move(factor);
    }
    std::vector<WireLabel> order;
    for (const auto &reg : prog.registers) {
        order.push_back(reg.label);
        // Wires without an init start in |0>.
        if (!state || !state->has_wire(reg.label)) {
            PureState zero = PureState::basis({reg.label}, 0);
            state = state ? tensor(*state, zero) : std::move(zero);
        }
    }
    if (!state) {
        return PureState({}, {1.0});
    }
    return state->wires() == order ? *state : state->permuted(order);
}

AssertionOutcome check_pointer(ProtocolWorld &world, const Statement &st, const AssertPointerStmt &a) {
    auto [next, branches] = decompose(world, a.pointer, kBranchTolerance);
    world = std::move(next);
    AssertionOutcome out{st.line, StatementKind::AssertPointer, false, ""};
    std::ostringstream detail;
    detail << "pointer";
    for (const auto &w : a.pointer) {
        detail << ' ' << w;
    }
    detail << " expected " << a.bits << ", found";
    for (const auto &br : branches.branches) {
        detail << ' ' << br.label << " (weight " << format_fixed(br.weight) << ")";
    }
    out.passed = branches.branches.size() == 1 && branches.branches.front().label == a.bits;
    out.detail = detail.str();
    return out;
}

AssertionOutcome check_factor(const ProtocolWorld &world, const Statement &st, const AssertFactorStmt &a) {
    AssertionOutcome out{st.line, StatementKind::AssertFactor, false, ""};
    const PureState &s = world.state();
    Bipartition cut;
    for (const auto &w : s.wires()) {
        if (w != a.wire) {
            cut.left.push_back(w);
        }
    }
    cut.right.push_back(a.wire);
    SchmidtResult split = schmidt_factor(s, cut, kAssertionTolerance);
    std::ostringstream detail;
    detail << "factor " << a.wire << " ~ " << a.expected.text << ": schmidt rank " << split.rank;
    if (split.factors) {
        PureState expected({a.wire}, {a.expected.zero, a.expected.one});
        double f = fidelity(split.factors->second, expected);
        detail << ", fidelity " << format_fixed(f);
        out.passed = equal_up_to_phase(split.factors->second, expected, kAssertionTolerance);
    }
    out.detail = detail.str();
    return out;
}

}  // namespace

Execution exec_circuit(const CircuitProgram &prog) {
    std::map<WireLabel, Agent> locations;
    for (const auto &reg : prog.registers) {
        locations[reg.label] = reg.agent;
    }
    ProtocolWorld world = ProtocolWorld::init(initial_state(prog), locations);
    std::vector<AssertionOutcome> outcomes;
    for (const auto &st : prog.statements) {
        std::visit(overloaded{
                       [](const InitStmt &) {},
                       [&](const GateStmt &g) { world = apply_local(world, resolve_gate(g), g.wires, g.actor); },
                       [&](const TransferStmt &t) { world = transfer(world, t.wire, t.to); },
                       [&](const AssertPointerStmt &a) { outcomes.push_back(check_pointer(world, st, a)); },
                       [&](const AssertFactorStmt &a) { outcomes.push_back(check_factor(world, st, a)); },
                   },
                   st.body);
    }
    return Execution{std::move(world), std::move(outcomes)};
}

std::string instantiate_template(std::string_view source, const std::map<std::string, std::string> &values) {
    std::string out(source);
    for (const auto &[name, value] : values) {
        const std::string key = "@" + name + "@";
        for (std::size_t at = out.find(key); at != std::string::npos; at = out.find(key, at + value.size())) {
            out.replace(at, key.size(), value);
        }
    }
    return out;
}

std::string superdense_fixture(int p, int q, const std::string &pointer) {
    if ((p != 0 && p != 1) || (q != 0 && q != 1)) {
        fail(ErrorCode::InvalidArgument, "p and q must be bits");
    }
    return instantiate_template(superdense_template(),
                                {{"p", std::to_string(p)}, {"q", std::to_string(q)}, {"pointer", pointer}});
}

}  // namespace everett
