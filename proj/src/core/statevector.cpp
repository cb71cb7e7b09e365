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


#include "statevector.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include "format.hpp"

namespace everett {

namespace {

constexpr std::size_t kMaxWires = 24;

void check_unique(const std::vector<WireLabel> &wires) {
    std::unordered_set<std::string_view> seen;
    for (const auto &w : wires) {
        if (w.empty()) {
            fail(ErrorCode::Label, "empty wire label");
        }
        if (!seen.insert(w).second) {
            fail(ErrorCode::Label, "duplicate wire label '" + w + "'");
        }
    }
}

void check_same_wires(const PureState &s1, const PureState &s2, const char *op) {
    if (s1.wires() != s2.wires()) {
        fail(ErrorCode::Label, std::string(op) + ": states are defined over different wire lists");
    }
}

void check_nonzero(const PureState &s, const char *op) {
    if (s.is_zero()) {
        fail(ErrorCode::ZeroState, std::string(op) + ": zero state");
    }
}

// Bit shift of wire position `pos` in a state of `n` wires.
inline std::size_t shift_of(std::size_t pos, std::size_t n) { return n - 1 - pos; }

// For each subset index j over `positions` (first position = most
// significant bit of j), the offset it contributes to a full basis index.
std::vector<std::size_t> subset_offsets(const std::vector<std::size_t> &positions, std::size_t n) {
    const std::size_t k = positions.size();
    std::vector<std::size_t> offsets(std::size_t{1} << k, 0);
    for (std::size_t j = 0; j < offsets.size(); ++j) {
        std::size_t off = 0;
        for (std::size_t t = 0; t < k; ++t) {
            if ((j >> (k - 1 - t)) & 1U) {
                off |= std::size_t{1} << shift_of(positions[t], n);
            }
        }
        offsets[j] = off;
    }
    return offsets;
}

std::vector<std::size_t> positions_of(const PureState &s, std::span<const WireLabel> labels) {
    std::vector<std::size_t> out;
    out.reserve(labels.size());
    for (const auto &l : labels) {
        out.push_back(s.wire_position(l));
    }
    return out;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t> &positions) {
    std::vector<bool> used(n, false);
    for (auto p : positions) {
        used[p] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < n; ++p) {
        if (!used[p]) {
            out.push_back(p);
        }
    }
    return out;
}

std::vector<WireLabel> labels_at(const PureState &s, const std::vector<std::size_t> &positions) {
    std::vector<WireLabel> out;
    out.reserve(positions.size());
    for (auto p : positions) {
        out.push_back(s.wires()[p]);
    }
    return out;
}

}  // namespace

PureState::PureState(std::vector<WireLabel> wires, std::vector<Amplitude> amps)
    : wires_(std::move(wires)), amps_(std::move(amps)) {
    check_unique(wires_);
    if (wires_.size() > kMaxWires) {
        fail(ErrorCode::InvalidArgument, "too many wires: " + std::to_string(wires_.size()));
    }
    if (amps_.size() != (std::size_t{1} << wires_.size())) {
        fail(ErrorCode::Arity, "amplitude vector of length " + std::to_string(amps_.size()) +
                                   " does not match " + std::to_string(wires_.size()) + " wires");
    }
    for (const auto &a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            fail(ErrorCode::InvalidArgument, "non-finite amplitude");
        }
    }
}

PureState PureState::basis(std::vector<WireLabel> wires, std::uint64_t index) {
    std::vector<Amplitude> amps(std::size_t{1} << std::min(wires.size(), kMaxWires + 1), 0);
    if (index >= amps.size()) {
        fail(ErrorCode::InvalidArgument, "basis index out of range");
    }
    amps[index] = 1;
    return PureState(std::move(wires), std::move(amps));
}

PureState PureState::basis(std::vector<WireLabel> wires, std::string_view bits) {
    if (bits.size() != wires.size()) {
        fail(ErrorCode::Arity, "bit string '" + std::string(bits) + "' does not match wire count");
    }
    std::uint64_t index = 0;
    for (char b : bits) {
        if (b != '0' && b != '1') {
            fail(ErrorCode::InvalidArgument, "bit string '" + std::string(bits) + "' is not binary");
        }
        index = (index << 1U) | static_cast<std::uint64_t>(b - '0');
    }
    return basis(std::move(wires), index);
}

PureState PureState::zero(std::vector<WireLabel> wires) {
    std::vector<Amplitude> amps(std::size_t{1} << std::min(wires.size(), kMaxWires + 1), 0);
    return PureState(std::move(wires), std::move(amps));
}

Amplitude PureState::amplitude(std::string_view bits) const {
    if (bits.size() != wires_.size()) {
        fail(ErrorCode::Arity, "bit string '" + std::string(bits) + "' does not match wire count");
    }
    std::size_t index = 0;
    for (char b : bits) {
        if (b != '0' && b != '1') {
            fail(ErrorCode::InvalidArgument, "bit string '" + std::string(bits) + "' is not binary");
        }
        index = (index << 1U) | static_cast<std::size_t>(b - '0');
    }
    return amps_[index];
}

bool PureState::has_wire(std::string_view label) const noexcept {
    return std::find(wires_.begin(), wires_.end(), label) != wires_.end();
}

std::size_t PureState::wire_position(std::string_view label) const {
    auto it = std::find(wires_.begin(), wires_.end(), label);
    if (it == wires_.end()) {
        fail(ErrorCode::Label, "unknown wire '" + std::string(label) + "'");
    }
    return static_cast<std::size_t>(it - wires_.begin());
}

double PureState::squared_norm() const noexcept {
    double acc = 0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

bool PureState::is_zero() const noexcept {
    return std::all_of(amps_.begin(), amps_.end(), [](const Amplitude &a) { return a == Amplitude{}; });
}

PureState PureState::scaled(Amplitude factor) const {
    PureState out = *this;
    for (auto &a : out.amps_) {
        a *= factor;
    }
    return out;
}

PureState PureState::normalized() const {
    check_nonzero(*this, "normalized");
    return scaled(1.0 / std::sqrt(squared_norm()));
}

PureState PureState::permuted(const std::vector<WireLabel> &order) const {
    if (order.size() != wires_.size()) {
        fail(ErrorCode::Label, "permutation must list every wire exactly once");
    }
    check_unique(order);
    std::vector<std::size_t> positions = positions_of(*this, order);
    std::vector<std::size_t> offsets = subset_offsets(positions, wires_.size());
    std::vector<Amplitude> amps(amps_.size());
    for (std::size_t j = 0; j < amps.size(); ++j) {
        amps[j] = amps_[offsets[j]];
    }
    return PureState(order, std::move(amps));
}

PureState operator+(const PureState &a, const PureState &b) {
    check_same_wires(a, b, "add");
    PureState out = a;
    for (std::size_t k = 0; k < out.amps_.size(); ++k) {
        out.amps_[k] += b.amps_[k];
    }
    return out;
}

PureState operator-(const PureState &a, const PureState &b) { return a + b.scaled(-1.0); }

PureState tensor(const PureState &s1, const PureState &s2) {
    std::vector<WireLabel> wires = s1.wires();
    wires.insert(wires.end(), s2.wires().begin(), s2.wires().end());
    check_unique(wires);
    if (wires.size() > kMaxWires) {
        fail(ErrorCode::InvalidArgument, "too many wires: " + std::to_string(wires.size()));
    }
    auto a = s1.amplitudes();
    auto b = s2.amplitudes();
    std::vector<Amplitude> amps;
    amps.reserve(a.size() * b.size());
    for (const auto &x : a) {
        for (const auto &y : b) {
            amps.push_back(x * y);
        }
    }
    return PureState(std::move(wires), std::move(amps));
}

PureState apply(const UnitaryGate &gate, std::span<const WireLabel> targets, const PureState &s) {
    if (targets.size() != gate.arity()) {
        fail(ErrorCode::Arity, "gate '" + gate.name() + "' acts on " + std::to_string(gate.arity()) +
                                   " wires but " + std::to_string(targets.size()) + " were given");
    }
    std::vector<WireLabel> target_list(targets.begin(), targets.end());
    {
        std::unordered_set<std::string_view> seen;
        for (const auto &t : target_list) {
            if (!seen.insert(t).second) {
                fail(ErrorCode::Label, "repeated target wire '" + t + "'");
            }
        }
    }
    const std::size_t n = s.num_wires();
    const std::vector<std::size_t> tpos = positions_of(s, target_list);
    const std::vector<std::size_t> rest = complement(n, tpos);
    const std::vector<std::size_t> local = subset_offsets(tpos, n);
    const std::vector<std::size_t> outer = subset_offsets(rest, n);
    const std::size_t dim = gate.dimension();

    auto in = s.amplitudes();
    std::vector<Amplitude> out(in.size());
    std::vector<Amplitude> buf(dim);
    for (std::size_t base : outer) {
        for (std::size_t j = 0; j < dim; ++j) {
            buf[j] = in[base + local[j]];
        }
        for (std::size_t r = 0; r < dim; ++r) {
            Amplitude acc = 0;
            for (std::size_t c = 0; c < dim; ++c) {
                acc += gate.at(r, c) * buf[c];
            }
            out[base + local[r]] = acc;
        }
    }
    return PureState(s.wires(), std::move(out));
}

PureState apply(const UnitaryGate &gate, std::initializer_list<WireLabel> targets, const PureState &s) {
    return apply(gate, std::span<const WireLabel>(targets.begin(), targets.size()), s);
}

Amplitude inner_product(const PureState &s1, const PureState &s2) {
    check_same_wires(s1, s2, "inner_product");
    auto a = s1.amplitudes();
    auto b = s2.amplitudes();
    Amplitude acc = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

double fidelity(const PureState &s1, const PureState &s2) {
    check_nonzero(s1, "fidelity");
    check_nonzero(s2, "fidelity");
    double f = std::norm(inner_product(s1, s2)) / (s1.squared_norm() * s2.squared_norm());
    return std::clamp(f, 0.0, 1.0);
}

double phase_distance(const PureState &s1, const PureState &s2) { return 1.0 - fidelity(s1, s2); }

bool equal_up_to_phase(const PureState &s1, const PureState &s2, double tol) {
    return phase_distance(s1, s2) <= tol;
}

SchmidtResult schmidt_factor(const PureState &s, const Bipartition &cut, double tol) {
    check_nonzero(s, "schmidt_factor");
    const std::size_t n = s.num_wires();
    std::vector<std::size_t> left = positions_of(s, cut.left);
    std::vector<std::size_t> right = positions_of(s, cut.right);
    {
        std::vector<std::size_t> all = left;
        all.insert(all.end(), right.begin(), right.end());
        std::sort(all.begin(), all.end());
        if (all.size() != n || std::adjacent_find(all.begin(), all.end()) != all.end()) {
            fail(ErrorCode::Label, "bipartition must cover every wire exactly once");
        }
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    const std::vector<std::size_t> loff = subset_offsets(left, n);
    const std::vector<std::size_t> roff = subset_offsets(right, n);

    auto amps = s.amplitudes();
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(loff.size()), static_cast<Eigen::Index>(roff.size()));
    for (std::size_t i = 0; i < loff.size(); ++i) {
        for (std::size_t j = 0; j < roff.size(); ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = amps[loff[i] + roff[j]];
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto &sv = svd.singularValues();

    SchmidtResult result;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        result.singular_values.push_back(sv(k));
    }
    const double largest = sv(0);
    for (double v : result.singular_values) {
        if (v > tol * largest) {
            ++result.rank;
        }
    }
    if (result.rank == 1) {
        std::vector<Amplitude> la(loff.size());
        std::vector<Amplitude> ra(roff.size());
        for (std::size_t i = 0; i < la.size(); ++i) {
            la[i] = svd.matrixU()(static_cast<Eigen::Index>(i), 0) * largest;
        }
        for (std::size_t j = 0; j < ra.size(); ++j) {
            ra[j] = std::conj(svd.matrixV()(static_cast<Eigen::Index>(j), 0));
        }
        result.factors.emplace(PureState(labels_at(s, left), std::move(la)),
                               PureState(labels_at(s, right), std::move(ra)));
    }
    return result;
}

const Branch *BranchDecomposition::find(std::string_view label) const {
    for (const auto &b : branches) {
        if (b.label == label) {
            return &b;
        }
    }
    return nullptr;
}

BranchDecomposition branch_decompose(const PureState &s, const std::vector<WireLabel> &pointer, double tol) {
    if (pointer.empty()) {
        fail(ErrorCode::InvalidArgument, "branch_decompose: empty pointer list");
    }
    check_nonzero(s, "branch_decompose");
    {
        std::unordered_set<std::string_view> seen;
        for (const auto &p : pointer) {
            if (!seen.insert(p).second) {
                fail(ErrorCode::Label, "repeated pointer wire '" + p + "'");
            }
        }
    }
    const std::size_t n = s.num_wires();
    const std::vector<std::size_t> ppos = positions_of(s, pointer);
    const std::vector<std::size_t> rest = complement(n, ppos);
    const std::vector<std::size_t> poff = subset_offsets(ppos, n);
    const std::vector<std::size_t> roff = subset_offsets(rest, n);
    const std::vector<WireLabel> rest_labels = labels_at(s, rest);
    const double total = s.squared_norm();

    BranchDecomposition out;
    out.pointer = pointer;
    auto amps = s.amplitudes();
    for (std::size_t v = 0; v < poff.size(); ++v) {
        std::vector<Amplitude> residual(roff.size());
        for (std::size_t j = 0; j < roff.size(); ++j) {
            residual[j] = amps[poff[v] + roff[j]];
        }
        PureState r(rest_labels, std::move(residual));
        double raw = r.squared_norm();
        double weight = raw / total;
        if (weight <= tol) {
            continue;
        }
        out.branches.push_back(Branch{bit_string(v, pointer.size()), v, std::move(r), raw, weight});
    }
    return out;
}

std::string bit_string(std::uint64_t index, std::size_t width) {
    std::string out(width, '0');
    for (std::size_t k = 0; k < width; ++k) {
        if ((index >> (width - 1 - k)) & 1U) {
            out[k] = '1';
        }
    }
    return out;
}

std::string dump_state(const PureState &s) {
    std::ostringstream out;
    out << "wires:";
    for (const auto &w : s.wires()) {
        out << ' ' << w;
    }
    out << '\n';
    const std::string zero = format_fixed(0.0);
    auto amps = s.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) {
        std::string re = format_fixed(amps[k].real());
        std::string im = format_fixed(amps[k].imag());
        if (re == zero && im == zero) {
            continue;
        }
        out << bit_string(k, s.num_wires()) << ' ' << re << ' ' << im << '\n';
    }
    return out.str();
}

}  // namespace everett
