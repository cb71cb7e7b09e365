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
#include <string>
#include <vector>

namespace everett {

using Amplitude = std::complex<double>;

/// Dense square matrix acting on `arity` qubit wires.
///
/// Storage is row-major; row and column indices are basis indices of the
/// targeted wires with the first target as the most significant bit.
/// Construction only checks the shape. Unitarity is a property that callers
/// query with `is_unitary`, because intermediate builders (control_unitary)
/// must be able to reject non-unitary inputs with a precise error.
class UnitaryGate {
  public:
    UnitaryGate(std::string name, std::size_t arity, std::vector<Amplitude> matrix);

    static UnitaryGate identity(std::size_t arity, std::string name = "id");

    const std::string &name() const noexcept { return name_; }
    std::size_t arity() const noexcept { return arity_; }
    std::size_t dimension() const noexcept { return std::size_t{1} << arity_; }
    const std::vector<Amplitude> &matrix() const noexcept { return matrix_; }

    Amplitude at(std::size_t row, std::size_t col) const { return matrix_[row * dimension() + col]; }

    /// Largest entry-wise deviation of U^dagger U from the identity.
    double unitarity_error() const;
    bool is_unitary(double tol) const { return unitarity_error() <= tol; }

    UnitaryGate adjoint() const;
    UnitaryGate renamed(std::string name) const;

    /// Exact integer/half-integer rendering, one row per line.
    std::string str() const;

    friend bool operator==(const UnitaryGate &a, const UnitaryGate &b) {
        return a.arity_ == b.arity_ && a.matrix_ == b.matrix_;
    }

  private:
    std::string name_;
    std::size_t arity_;
    std::vector<Amplitude> matrix_;
};

}  // namespace everett
