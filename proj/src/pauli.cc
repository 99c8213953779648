// Copyright 2026 The cmap Authors
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

#include "cmap/pauli.h"

#include <bit>
#include <ostream>

#include "cmap/errors.h"

namespace cmap {

namespace {

std::uint64_t low_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_same_size(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError(
            "Pauli strings act on different qubit counts: " + std::to_string(a.num_qubits()) + " vs " +
            std::to_string(b.num_qubits()));
    }
}

}  // namespace

char letter_char(PauliLetter p) {
    return "IXYZ"[static_cast<int>(p)];
}

PauliLetter letter_from_char(char c) {
    switch (c) {
        case 'I':
            return PauliLetter::I;
        case 'X':
            return PauliLetter::X;
        case 'Y':
            return PauliLetter::Y;
        case 'Z':
            return PauliLetter::Z;
        default:
            throw ParseError(std::string("not a Pauli letter: '") + c + "'");
    }
}

PauliString::PauliString(std::size_t num_qubits) : PauliString(num_qubits, 0, 0, 0) {
}

PauliString::PauliString(std::size_t num_qubits, std::uint64_t xs, std::uint64_t zs, std::uint8_t phase)
    : xs_(xs), zs_(zs), num_qubits_(static_cast<std::uint32_t>(num_qubits)), phase_(phase & 3) {
    if (num_qubits > kMaxQubits) {
        throw CapabilityError("Pauli strings support at most 64 qubits");
    }
    if (((xs | zs) & ~low_mask(num_qubits)) != 0) {
        throw DimensionError("Pauli string bits set beyond the qubit count");
    }
}

PauliString PauliString::from_str(std::string_view text) {
    std::uint8_t phase = 0;
    if (text.starts_with('+')) {
        text.remove_prefix(1);
    } else if (text.starts_with('-')) {
        phase = 2;
        text.remove_prefix(1);
    }
    if (text.starts_with('i')) {
        phase = static_cast<std::uint8_t>(phase + 1);
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw ParseError("empty Pauli string");
    }
    if (text.size() > kMaxQubits) {
        throw CapabilityError("Pauli strings support at most 64 qubits");
    }
    std::uint64_t xs = 0;
    std::uint64_t zs = 0;
    for (std::size_t q = 0; q < text.size(); q++) {
        auto v = static_cast<unsigned>(letter_from_char(text[q]));
        // I=00, X=10, Y=11, Z=01 as (x, z).
        xs |= std::uint64_t{v == 1 || v == 2} << q;
        zs |= std::uint64_t{v == 2 || v == 3} << q;
    }
    return PauliString(text.size(), xs, zs, phase);
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t qubit, PauliLetter letter) {
    if (qubit >= num_qubits) {
        throw DimensionError("qubit index out of range");
    }
    auto v = static_cast<unsigned>(letter);
    return PauliString(
        num_qubits, std::uint64_t{v == 1 || v == 2} << qubit, std::uint64_t{v == 2 || v == 3} << qubit, 0);
}

PauliLetter PauliString::operator[](std::size_t qubit) const {
    bool x = (xs_ >> qubit) & 1;
    bool z = (zs_ >> qubit) & 1;
    if (x) {
        return z ? PauliLetter::Y : PauliLetter::X;
    }
    return z ? PauliLetter::Z : PauliLetter::I;
}

std::size_t PauliString::weight() const {
    return static_cast<std::size_t>(std::popcount(xs_ | zs_));
}

std::size_t PauliString::weight(PauliLetter letter) const {
    switch (letter) {
        case PauliLetter::I:
            return num_qubits_ - weight();
        case PauliLetter::X:
            return static_cast<std::size_t>(std::popcount(xs_ & ~zs_));
        case PauliLetter::Y:
            return static_cast<std::size_t>(std::popcount(xs_ & zs_));
        case PauliLetter::Z:
            return static_cast<std::size_t>(std::popcount(~xs_ & zs_));
    }
    return 0;
}

PauliString PauliString::operator*(const PauliString &other) const {
    check_same_size(*this, other);
    std::uint64_t ax = xs_ & ~zs_, ay = xs_ & zs_, az = ~xs_ & zs_;
    std::uint64_t bx = other.xs_ & ~other.zs_, by = other.xs_ & other.zs_, bz = ~other.xs_ & other.zs_;
    // XY = iZ, YZ = iX, ZX = iY and the reversed orders pick up -i.
    std::uint64_t plus = (ax & by) | (ay & bz) | (az & bx);
    std::uint64_t minus = (ay & bx) | (az & by) | (ax & bz);
    int k = phase_ + other.phase_ + std::popcount(plus) - std::popcount(minus);
    return PauliString(num_qubits_, xs_ ^ other.xs_, zs_ ^ other.zs_, static_cast<std::uint8_t>(k & 3));
}

bool PauliString::letters_less(const PauliString &other) const {
    for (std::size_t q = 0; q < num_qubits_; q++) {
        auto a = (*this)[q];
        auto b = other[q];
        if (a != b) {
            return a < b;
        }
    }
    return false;
}

std::string PauliString::str() const {
    static constexpr const char *kPrefix[4] = {"", "i", "-", "-i"};
    std::string out = kPrefix[phase_];
    for (std::size_t q = 0; q < num_qubits_; q++) {
        out.push_back(letter_char((*this)[q]));
    }
    return out;
}

PauliString multiply(const PauliString &a, const PauliString &b) {
    return a * b;
}

int eta(const PauliString &a, const PauliString &b) {
    check_same_size(a, b);
    int anti = std::popcount((a.xs() & b.zs()) ^ (a.zs() & b.xs()));
    return (anti & 1) ? -1 : +1;
}

std::size_t weight(const PauliString &p, PauliLetter letter) {
    return p.weight(letter);
}

PauliString strip_phase(const PauliString &p) {
    return p.stripped();
}

std::ostream &operator<<(std::ostream &out, const PauliString &p) {
    return out << p.str();
}

}  // namespace cmap
