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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "unitary.hpp"

namespace everett {

using WireLabel = std::string;

/// An unnormalized pure state over an ordered list of labeled qubit wires.
///
/// The basis index of an assignment is the integer whose bits are the wire
/// values in wire-list order, first wire most significant. Amplitudes are
/// always finite; nothing here normalizes implicitly.
class PureState {
  public:
    PureState(std::vector<WireLabel> wires, std::vector<Amplitude> amps);

    static PureState basis(std::vector<WireLabel> wires, std::uint64_t index);
    static PureState basis(std::vector<WireLabel> wires, std::string_view bits);
    static PureState zero(std::vector<WireLabel> wires);

    const std::vector<WireLabel> &wires() const noexcept { return wires_; }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    std::size_t num_wires() const noexcept { return wires_.size(); }
    std::size_t dimension() const noexcept { return amps_.size(); }

    Amplitude amplitude(std::size_t index) const { return amps_.at(index); }
    Amplitude amplitude(std::string_view bits) const;

    bool has_wire(std::string_view label) const noexcept;
    std::size_t wire_position(std::string_view label) const;

    double squared_norm() const noexcept;
    bool is_zero() const noexcept;

    PureState scaled(Amplitude factor) const;
    PureState normalized() const;
    /// Same state with the wires listed in `order` (a permutation of wires()).
    PureState permuted(const std::vector<WireLabel> &order) const;

    friend PureState operator+(const PureState &a, const PureState &b);
    friend PureState operator-(const PureState &a, const PureState &b);
    friend PureState operator*(Amplitude factor, const PureState &s) { return s.scaled(factor); }

    /// Exact equality of wire lists and amplitudes.
    friend bool operator==(const PureState &a, const PureState &b) = default;

  private:
    std::vector<WireLabel> wires_;
    std::vector<Amplitude> amps_;
};

/// Both sides hold wire labels; together they must cover a state's wires
/// exactly once.
struct Bipartition {
    std::vector<WireLabel> left;
    std::vector<WireLabel> right;
};

PureState tensor(const PureState &s1, const PureState &s2);

template <typename... Rest>
PureState tensor(const PureState &s1, const PureState &s2, const Rest &...rest) {
    return tensor(tensor(s1, s2), rest...);
}

/// Applies `gate` to `targets` (first target = most significant gate index),
/// identity elsewhere.
PureState apply(const UnitaryGate &gate, std::span<const WireLabel> targets, const PureState &s);
PureState apply(const UnitaryGate &gate, std::initializer_list<WireLabel> targets, const PureState &s);

/// <s1|s2>, conjugate-linear in the first argument.
Amplitude inner_product(const PureState &s1, const PureState &s2);

/// 1 - |<s1,s2>|^2 / (<s1,s1><s2,s2>), clamped at zero. Zero iff s1 is a
/// nonzero multiple of s2.
double phase_distance(const PureState &s1, const PureState &s2);
bool equal_up_to_phase(const PureState &s1, const PureState &s2, double tol = default_tolerance());

/// Overlap of the normalized states, in [0, 1].
double fidelity(const PureState &s1, const PureState &s2);

struct SchmidtResult {
    std::size_t rank = 0;
    std::vector<double> singular_values;
    /// Present iff rank == 1. Each factor keeps its wires in the order they
    /// have in the source state.
    std::optional<std::pair<PureState, PureState>> factors;
};

SchmidtResult schmidt_factor(const PureState &s, const Bipartition &cut, double tol = default_tolerance());

struct Branch {
    std::string label;   // pointer bit-string, pointer-list order
    std::uint64_t value = 0;
    PureState residual;  // remaining wires, state order
    double raw_weight = 0;  // squared norm of the residual
    double weight = 0;      // raw_weight / squared norm of the whole state
};

struct BranchDecomposition {
    std::vector<WireLabel> pointer;
    std::vector<Branch> branches;

    const Branch *find(std::string_view label) const;
};

/// Projects onto each pointer basis value; branches with weight <= tol are
/// omitted.
BranchDecomposition branch_decompose(
    const PureState &s, const std::vector<WireLabel> &pointer, double tol = default_tolerance());

/// Bit string of `index` over `width` wires, most significant first.
std::string bit_string(std::uint64_t index, std::size_t width);

/// Text dump: a `wires:` header, then `<bits> <re> <im>` for each amplitude
/// that is nonzero at 12 decimals, in basis-index order.
std::string dump_state(const PureState &s);

}  // namespace everett
