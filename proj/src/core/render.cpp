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


#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "circuit.hpp"

namespace everett {

namespace {

// Every cell is kCellWidth glyphs wide; the vertical stroke sits in the
// middle glyph.
constexpr std::size_t kCellWidth = 7;

std::size_t glyph_count(std::string_view s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char ch) { return (static_cast<unsigned char>(ch) & 0xC0) != 0x80; }));
}

std::string repeat(std::string_view glyph, std::size_t n) {
    std::string out;
    for (std::size_t k = 0; k < n; ++k) {
        out += glyph;
    }
    return out;
}

std::string pad_right(const std::string &s, std::size_t width) {
    std::size_t n = glyph_count(s);
    return n >= width ? s : s + std::string(width - n, ' ');
}

const std::string kWire = repeat("─", kCellWidth);
const std::string kBlank(kCellWidth, ' ');
const std::string kRule = repeat("═", kCellWidth);
const std::string kControl = "───●───";
const std::string kCrossWire = "───┼───";
const std::string kCrossBlank = "   │   ";
const std::string kCrossRule = "═══╪═══";

std::string box(const std::string &label) {
    return "─[" + label + "]" + repeat("─", kCellWidth - 3 - glyph_count(label));
}

enum class Role { Control, Target };

struct GateLayout {
    std::string label;
    std::vector<Role> roles;  // parallel to the statement's wires
};

GateLayout layout_of(const GateStmt &g) {
    const std::size_t n = g.wires.size();
    if (g.gate == "cu_sigma") {
        return {"Uσ", {Role::Control, Role::Control, Role::Target}};
    }
    if (g.gate == "cu_meas") {
        return {"UM", {Role::Target, Role::Target, Role::Control, Role::Control}};
    }
    if (g.gate == "u_b") {
        return {"UB", {Role::Control, Role::Control, Role::Target}};
    }
    if (!g.branches.empty()) {
        GateLayout out{"Uc", std::vector<Role>(n, Role::Control)};
        out.roles.back() = Role::Target;
        return out;
    }
    // sigmaPQ
    return {"σ" + g.gate.substr(5), std::vector<Role>(n, Role::Target)};
}

std::string init_text(const InitStmt &init) {
    if (const auto *q = std::get_if<QubitExpr>(&init.value)) {
        return (q->text == "|0>" || q->text == "|1>") ? q->text : "φ";
    }
    const auto &b = std::get<BellExpr>(init.value);
    if (b.x == 0 && b.y == 0) {
        return "Λ";
    }
    return "ψ" + std::to_string(b.x) + std::to_string(b.y);
}

struct Lane {
    WireLabel wire;
    Agent agent;
};

}  // namespace

std::string render_ascii(const CircuitProgram &prog) {
    std::map<WireLabel, Agent> where;
    std::map<WireLabel, std::string> inits;
    std::map<WireLabel, std::vector<bool>> visits;  // [Alice, Bob]
    for (const auto &reg : prog.registers) {
        where[reg.label] = reg.agent;
        visits[reg.label] = {reg.agent == Agent::Alice, reg.agent == Agent::Bob};
    }
    for (const auto &st : prog.statements) {
        if (const auto *init = std::get_if<InitStmt>(&st.body)) {
            for (const auto &w : init->wires) {
                inits[w] = init_text(*init);
            }
        } else if (const auto *t = std::get_if<TransferStmt>(&st.body)) {
            if (visits.count(t->wire)) {
                visits[t->wire][t->to == Agent::Alice ? 0 : 1] = true;
            }
        }
    }

    // Lanes, then the separator at index `rule`.
    std::vector<Lane> lanes;
    for (const Agent agent : {Agent::Alice, Agent::Bob}) {
        for (const auto &reg : prog.registers) {
            if (visits[reg.label][agent == Agent::Alice ? 0 : 1]) {
                lanes.push_back({reg.label, agent});
            }
        }
    }
    const std::size_t rule = static_cast<std::size_t>(
        std::count_if(lanes.begin(), lanes.end(), [](const Lane &l) { return l.agent == Agent::Alice; }));
    const std::size_t rows = lanes.size() + 1;
    auto lane_row = [&](std::size_t k) { return k < rule ? k : k + 1; };
    auto row_of = [&](const WireLabel &w, Agent agent) -> std::size_t {
        for (std::size_t k = 0; k < lanes.size(); ++k) {
            if (lanes[k].wire == w && lanes[k].agent == agent) {
                return lane_row(k);
            }
        }
        return rows;  // not drawn
    };

    std::vector<std::string> grid(rows);
    auto active = [&](std::size_t row) {
        if (row == rule) {
            return false;
        }
        const Lane &l = lanes[row < rule ? row : row - 1];
        return where[l.wire] == l.agent;
    };
    auto plain_column = [&] {
        std::vector<std::string> col(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            col[r] = r == rule ? kRule : (active(r) ? kWire : kBlank);
        }
        return col;
    };
    auto cross = [&](std::size_t r) { return r == rule ? kCrossRule : (active(r) ? kCrossWire : kCrossBlank); };
    auto emit = [&](const std::vector<std::string> &col) {
        for (std::size_t r = 0; r < rows; ++r) {
            grid[r] += col[r];
        }
    };

    emit(plain_column());
    for (const auto &st : prog.statements) {
        if (const auto *g = std::get_if<GateStmt>(&st.body)) {
            GateLayout layout = layout_of(*g);
            std::vector<std::string> col = plain_column();
            std::size_t lo = rows;
            std::size_t hi = 0;
            std::map<std::size_t, Role> involved;
            for (std::size_t k = 0; k < g->wires.size(); ++k) {
                std::size_t r = row_of(g->wires[k], where[g->wires[k]]);
                if (r >= rows) {
                    continue;
                }
                involved[r] = layout.roles[k];
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
            for (std::size_t r = lo; r <= hi && r < rows; ++r) {
                auto it = involved.find(r);
                if (it == involved.end()) {
                    col[r] = cross(r);
                } else {
                    col[r] = it->second == Role::Control ? kControl : box(layout.label);
                }
            }
            emit(col);
        } else if (const auto *t = std::get_if<TransferStmt>(&st.body)) {
            std::vector<std::string> col = plain_column();
            auto it = where.find(t->wire);
            if (it != where.end() && it->second != t->to) {
                std::size_t from = row_of(t->wire, it->second);
                std::size_t to = row_of(t->wire, t->to);
                bool down = to > from;
                for (std::size_t r = std::min(from, to) + 1; r < std::max(from, to); ++r) {
                    col[r] = cross(r);
                }
                col[from] = down ? "───┐   " : "───┘   ";
                col[to] = down ? "   └───" : "   ┌───";
                it->second = t->to;
            }
            emit(col);
        }
    }
    emit(plain_column());

    std::size_t label_width = 0;
    std::size_t init_width = 0;
    for (const auto &l : lanes) {
        label_width = std::max(label_width, glyph_count(l.wire));
        init_width = std::max(init_width, glyph_count(inits[l.wire]));
    }
    const std::size_t prefix_width = std::max(label_width + init_width + 2, std::size_t{6});
    std::ostringstream out;
    out << "[Alice]\n";
    for (std::size_t r = 0; r < rows; ++r) {
        if (r == rule) {
            out << "[Bob]" << repeat("═", prefix_width - 5) << grid[r] << '\n';
            continue;
        }
        const Lane &l = lanes[r < rule ? r : r - 1];
        // The init label goes on the lane where the wire starts.
        auto reg = std::find_if(prog.registers.begin(), prog.registers.end(),
                                [&](const Register &x) { return x.label == l.wire; });
        std::string init = reg != prog.registers.end() && reg->agent == l.agent ? inits[l.wire] : "";
        std::string line = pad_right(pad_right(l.wire, label_width) + " " + init, prefix_width) + grid[r];
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        out << line << '\n';
    }
    return out.str();
}

}  // namespace everett
