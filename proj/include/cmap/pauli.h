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

#ifndef CMAP_PAULI_H
#define CMAP_PAULI_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cmap {

/// Single-qubit Pauli letter. The numeric value doubles as the Stokes-matrix
/// row/column index (I=0, X=1, Y=2, Z=3).
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<PauliLetter, 4> kAllLetters{PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z};

char letter_char(PauliLetter p);
PauliLetter letter_from_char(char c);

/// An n-qubit Pauli operator i^phase * P_0 ⊗ ... ⊗ P_{n-1}, stored in
/// symplectic form. Bit q of `xs` / `zs` is the (x, z) pair of qubit q, with
/// (1,1) denoting the letter Y itself (the Pauli matrix, not XZ).
///
/// Supports up to 64 qubits.
class PauliString {
   public:
    static constexpr std::size_t kMaxQubits = 64;

    PauliString() = default;
    /// The identity on `num_qubits` qubits.
    explicit PauliString(std::size_t num_qubits);
    PauliString(std::size_t num_qubits, std::uint64_t xs, std::uint64_t zs, std::uint8_t phase = 0);

    /// Parses an optional sign prefix ("+", "-", "i", "+i", "-i") followed by
    /// letters from {I, X, Y, Z}.
    static PauliString from_str(std::string_view text);
    /// A string with a single non-identity letter.
    static PauliString single(std::size_t num_qubits, std::size_t qubit, PauliLetter letter);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::uint64_t xs() const {
        return xs_;
    }
    std::uint64_t zs() const {
        return zs_;
    }
    /// Exponent k of the global factor i^k, in [0, 4).
    std::uint8_t phase() const {
        return phase_;
    }
    bool is_hermitian() const {
        return (phase_ & 1) == 0;
    }
    /// +1 or -1 for hermitian strings. Undefined otherwise.
    int sign() const {
        return phase_ == 0 ? +1 : -1;
    }

    PauliLetter operator[](std::size_t qubit) const;
    std::size_t weight() const;
    std::size_t weight(PauliLetter letter) const;
    bool is_identity_letters() const {
        return xs_ == 0 && zs_ == 0;
    }

    PauliString stripped() const {
        return PauliString(num_qubits_, xs_, zs_, 0);
    }
    PauliString with_phase(std::uint8_t phase) const {
        return PauliString(num_qubits_, xs_, zs_, phase);
    }

    /// Group product with exact phase. Throws DimensionError on size mismatch.
    PauliString operator*(const PauliString &other) const;
    bool operator==(const PauliString &other) const = default;

    /// Letters only, lexicographic with I<X<Y<Z from qubit 0.
    bool letters_less(const PauliString &other) const;

    std::string str() const;

   private:
    std::uint64_t xs_ = 0;
    std::uint64_t zs_ = 0;
    std::uint32_t num_qubits_ = 0;
    std::uint8_t phase_ = 0;
};

PauliString multiply(const PauliString &a, const PauliString &b);

/// +1 if `a` and `b` commute, -1 if they anticommute.
int eta(const PauliString &a, const PauliString &b);

std::size_t weight(const PauliString &p, PauliLetter letter);

PauliString strip_phase(const PauliString &p);

std::ostream &operator<<(std::ostream &out, const PauliString &p);

}  // namespace cmap

template <>
struct std::hash<cmap::PauliString> {
    std::size_t operator()(const cmap::PauliString &p) const noexcept {
        std::uint64_t h = p.xs() * 0x9E3779B97F4A7C15ull;
        h ^= p.zs() + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
        h ^= (std::uint64_t{p.phase()} << 8) | p.num_qubits();
        return static_cast<std::size_t>(h);
    }
};

#endif
