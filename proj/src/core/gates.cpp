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


#include "gates.hpp"

#include <cmath>

#include "error.hpp"

namespace everett {

namespace {

void check_bit(int b, const char *what) {
    if (b != 0 && b != 1) {
        fail(ErrorCode::InvalidArgument, std::string(what) + " must be 0 or 1, got " + std::to_string(b));
    }
}

// Sign (-1)^k for a small non-negative k.
inline double parity_sign(int k) { return (k & 1) != 0 ? -1.0 : 1.0; }

UnitaryGate single_qubit_rule(std::string name, int zero_to, double zero_sign, int one_to, double one_sign) {
    std::vector<Amplitude> m(4, 0);
    // Column = input basis state, row = output basis state.
    m[static_cast<std::size_t>(zero_to) * 2 + 0] = zero_sign;
    m[static_cast<std::size_t>(one_to) * 2 + 1] = one_sign;
    return UnitaryGate(std::move(name), 1, std::move(m));
}

}  // namespace

UnitaryGate sigma(int p, int q) {
    check_bit(p, "p");
    check_bit(q, "q");
    return single_qubit_rule("sigma" + std::to_string(p) + std::to_string(q),
                             (p + q) % 2, parity_sign(p), (p + q + 1) % 2, 1.0);
}

PureState bell(int x, int y, const WireLabel &first, const WireLabel &second) {
    check_bit(x, "x");
    check_bit(y, "y");
    std::vector<Amplitude> amps(4, 0);
    amps[static_cast<std::size_t>(x * 2 + y)] += 1.0;
    amps[static_cast<std::size_t>(((x + 1) % 2) * 2 + (y + 1) % 2)] += parity_sign(y);
    return PureState({first, second}, std::move(amps));
}

UnitaryGate control_unitary(const ControlSpec &spec, std::string name, double tol) {
    const std::size_t controls = spec.control_arity;
    if (controls > 8) {
        fail(ErrorCode::Arity, "too many control wires");
    }
    const std::size_t branches = std::size_t{1} << controls;
    if (spec.branch_gates.size() != branches) {
        fail(ErrorCode::InvalidArgument, "control mapping must cover all " + std::to_string(branches) +
                                             " control strings, got " + std::to_string(spec.branch_gates.size()));
    }
    std::size_t target_arity = 0;
    bool first = true;
    for (std::size_t c = 0; c < branches; ++c) {
        std::string key = bit_string(c, controls);
        auto it = spec.branch_gates.find(key);
        if (it == spec.branch_gates.end()) {
            fail(ErrorCode::InvalidArgument, "control mapping has no gate for control string '" + key + "'");
        }
        const UnitaryGate &g = it->second;
        if (first) {
            target_arity = g.arity();
            first = false;
        } else if (g.arity() != target_arity) {
            fail(ErrorCode::Arity, "branch gates must share one target arity");
        }
        if (!g.is_unitary(tol)) {
            fail(ErrorCode::InvalidArgument, "branch gate '" + g.name() + "' for control '" + key + "' is not unitary");
        }
    }
    const std::size_t tdim = std::size_t{1} << target_arity;
    const std::size_t dim = branches * tdim;
    std::vector<Amplitude> m(dim * dim, 0);
    for (std::size_t c = 0; c < branches; ++c) {
        const UnitaryGate &g = spec.branch_gates.at(bit_string(c, controls));
        for (std::size_t r = 0; r < tdim; ++r) {
            for (std::size_t k = 0; k < tdim; ++k) {
                m[(c * tdim + r) * dim + c * tdim + k] = g.at(r, k);
            }
        }
    }
    return UnitaryGate(std::move(name), controls + target_arity, std::move(m));
}

UnitaryGate cu_sigma() {
    ControlSpec spec{2, {}};
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            spec.branch_gates.emplace(bit_string(static_cast<std::uint64_t>(p * 2 + q), 2), sigma(p, q));
        }
    }
    return control_unitary(spec, "cu_sigma");
}

UnitaryGate cu_meas() {
    // U = sum_{mn,xy} |m^x n^y><mn| (x) |psi_xy><psi_xy| / 2
    constexpr std::size_t dim = 16;
    std::vector<Amplitude> m(dim * dim, 0);
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            PureState psi = bell(x, y, "m1", "m2");
            auto v = psi.amplitudes();
            for (std::size_t pointer = 0; pointer < 4; ++pointer) {
                std::size_t shifted = pointer ^ static_cast<std::size_t>(x * 2 + y);
                for (std::size_t i = 0; i < 4; ++i) {
                    for (std::size_t j = 0; j < 4; ++j) {
                        m[(shifted * 4 + i) * dim + pointer * 4 + j] += v[i] * std::conj(v[j]) * 0.5;
                    }
                }
            }
        }
    }
    return UnitaryGate("cu_meas", 4, std::move(m));
}

UnitaryGate u_b_decoder() {
    ControlSpec spec{2, {}};
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            // z -> (-1)^{y(z+1)} |z+x+y>
            UnitaryGate fix = single_qubit_rule("fix", (0 + x + y) % 2, parity_sign(y * 1), (1 + x + y) % 2,
                                                parity_sign(y * 2));
            spec.branch_gates.emplace(bit_string(static_cast<std::uint64_t>(x * 2 + y), 2), fix);
        }
    }
    return control_unitary(spec, "u_b");
}

UnitaryGate in_swapped_ket_convention(const UnitaryGate &gate) {
    // Swapping |0> and |1> on every qubit maps basis index k to ~k.
    const std::size_t dim = gate.dimension();
    const std::size_t mask = dim - 1;
    std::vector<Amplitude> m(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m[r * dim + c] = gate.at(r ^ mask, c ^ mask);
        }
    }
    return UnitaryGate(gate.name(), gate.arity(), std::move(m));
}

}  // namespace everett
