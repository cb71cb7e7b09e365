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


#include "unitary.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "error.hpp"
#include "format.hpp"

namespace everett {

namespace {

// Dyadic rationals with denominator up to 16 print exactly; anything else
// falls back to fixed-point.
std::string exact_real(double v) {
    if (std::abs(v) > 1e9) {
        return format_fixed(v);
    }
    for (long den = 1; den <= 16; den *= 2) {
        double num = v * static_cast<double>(den);
        if (num == std::round(num)) {
            auto n = static_cast<long>(num);
            if (den == 1) {
                return std::to_string(n);
            }
            return std::to_string(n) + "/" + std::to_string(den);
        }
    }
    return format_fixed(v);
}

std::string exact_entry(Amplitude z) {
    if (z.imag() == 0) {
        return exact_real(z.real());
    }
    std::string im = z.imag() == 1 ? "i" : z.imag() == -1 ? "-i" : exact_real(z.imag()) + "i";
    if (z.real() == 0) {
        return im;
    }
    return exact_real(z.real()) + (z.imag() > 0 ? "+" : "") + im;
}

}  // namespace

UnitaryGate::UnitaryGate(std::string name, std::size_t arity, std::vector<Amplitude> matrix)
    : name_(std::move(name)), arity_(arity), matrix_(std::move(matrix)) {
    if (arity_ > 16) {
        fail(ErrorCode::Arity, "gate arity " + std::to_string(arity_) + " is too large");
    }
    if (matrix_.size() != dimension() * dimension()) {
        fail(ErrorCode::Arity, "gate '" + name_ + "' matrix has " + std::to_string(matrix_.size()) +
                                   " entries, expected " + std::to_string(dimension() * dimension()));
    }
    for (const auto &z : matrix_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            fail(ErrorCode::InvalidArgument, "gate '" + name_ + "' has a non-finite entry");
        }
    }
}

UnitaryGate UnitaryGate::identity(std::size_t arity, std::string name) {
    if (arity > 16) {
        fail(ErrorCode::Arity, "gate arity " + std::to_string(arity) + " is too large");
    }
    std::size_t dim = std::size_t{1} << arity;
    std::vector<Amplitude> m(dim * dim);
    for (std::size_t k = 0; k < dim; ++k) {
        m[k * dim + k] = 1;
    }
    return UnitaryGate(std::move(name), arity, std::move(m));
}

double UnitaryGate::unitarity_error() const {
    const std::size_t dim = dimension();
    double worst = 0;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            Amplitude acc = 0;
            for (std::size_t k = 0; k < dim; ++k) {
                acc += std::conj(at(k, r)) * at(k, c);
            }
            if (r == c) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

UnitaryGate UnitaryGate::adjoint() const {
    const std::size_t dim = dimension();
    std::vector<Amplitude> m(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m[c * dim + r] = std::conj(at(r, c));
        }
    }
    return UnitaryGate(name_ + "^dag", arity_, std::move(m));
}

UnitaryGate UnitaryGate::renamed(std::string name) const {
    UnitaryGate g = *this;
    g.name_ = std::move(name);
    return g;
}

std::string UnitaryGate::str() const {
    const std::size_t dim = dimension();
    std::vector<std::string> cells(matrix_.size());
    std::size_t width = 1;
    for (std::size_t k = 0; k < matrix_.size(); ++k) {
        cells[k] = exact_entry(matrix_[k]);
        width = std::max(width, cells[k].size());
    }
    std::ostringstream out;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            const auto &cell = cells[r * dim + c];
            if (c > 0) {
                out << ' ';
            }
            out << std::string(width - cell.size(), ' ') << cell;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace everett
