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

#include <cstddef>
#include <map>
#include <string>

#include "statevector.hpp"
#include "unitary.hpp"

namespace everett {

/// sigma_pq, defined by its action on the basis:
///   sigma_pq |0> = (-1)^p |p+q>,   sigma_pq |1> = |p+q+1>   (mod 2).
UnitaryGate sigma(int p, int q);

/// Unnormalized Bell state |x>|y> + (-1)^y |x+1>|y+1> on (first, second).
PureState bell(int x, int y, const WireLabel &first, const WireLabel &second);

/// The shared pair |00> + |11>, i.e. bell(0, 0).
inline PureState lambda_pair(const WireLabel &first, const WireLabel &second) {
    return bell(0, 0, first, second);
}

/// Target gate per control bit-string. Must be total over all
/// 2^control_arity strings, with every branch unitary and of one arity.
struct ControlSpec {
    std::size_t control_arity = 0;
    std::map<std::string, UnitaryGate> branch_gates;
};

/// Block-diagonal |c>|t> -> |c> (branch_gates[c] |t>), controls first.
UnitaryGate control_unitary(const ControlSpec &spec, std::string name = "c-U", double tol = default_tolerance());

/// Wires (c, d, x): |p>|q>|x> -> |p>|q> sigma_pq |x>.
UnitaryGate cu_sigma();

/// Bell-basis measurement with a two-wire pointer, wires (E1, E2, m1, m2):
///   |mn>_E (x) psi_xy -> |m^x, n^y>_E (x) psi_xy.
/// On pointer value 00 this is the von Neumann measurement; the other three
/// pointer values are completed by the same XOR shift, which keeps the
/// operator unitary.
UnitaryGate cu_meas();

/// Teleportation correction on wires (E1, E2, b):
///   |xy>_E |z>_b -> (-1)^{y(z+1)} |xy>_E |z+x+y>_b.
UnitaryGate u_b_decoder();

/// Rewrites `gate` in the basis where every qubit has |0> and |1> swapped
/// (column vectors |0> = (0,1)^T, |1> = (1,0)^T).
UnitaryGate in_swapped_ket_convention(const UnitaryGate &gate);

}  // namespace everett
