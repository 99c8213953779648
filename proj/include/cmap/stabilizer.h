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

#ifndef CMAP_STABILIZER_H
#define CMAP_STABILIZER_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmap/pauli.h"
#include "cmap/rational.h"

namespace cmap {

/// Largest n for which the 4^n brute-force searches are permitted.
inline constexpr std::size_t kMaxBruteForceQubits = 12;

/// Bit i is set iff the operator anticommutes with generator i (listing order).
struct SyndromeIndex {
    std::uint64_t bits = 0;

    bool bit(std::size_t i) const {
        return (bits >> i) & 1;
    }
    bool operator==(const SyndromeIndex &) const = default;
};

/// Raw description of an [n,1] stabilizer code, as read from a spec file.
/// An empty `recovery` requests automatic minimum-weight recovery operators.
struct CodeDefinition {
    std::string name;
    std::size_t num_qubits = 0;
    std::vector<PauliString> generators;
    PauliString logical_x;
    PauliString logical_z;
    std::vector<PauliString> recovery;
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const {
        return violations.empty();
    }
};

/// Checks every structural invariant of a k = 1 stabilizer code: generator
/// count, hermiticity, commutation, independence, -I not in the group,
/// logical operators, and that the recovery operators hit every syndrome once.
/// An empty recovery list is accepted (it will be generated).
ValidationReport validate(const CodeDefinition &def);

class StabilizerCode;

/// f[i][sigma]: stabilizer index i (subset bitmask), sigma in I, X, Y, Z.
using FMatrix = std::vector<std::array<std::int64_t, 4>>;

struct CoefficientEntry {
    PauliString product;  // |S_i sigma_bar|, phase stripped
    int alpha = 1;        // sign of S_i sigma_bar
    Rational beta;        // f_{i sigma} * alpha / 2^m
};

/// Per sigma in I, X, Y, Z: one entry per stabilizer, indexed like enumerate_group.
using DecodingCoefficients = std::array<std::vector<CoefficientEntry>, 4>;

/// A validated [n, 1, d, w] stabilizer code. Immutable once built.
class StabilizerCode {
   public:
    /// Validates `def`, fills in automatic recovery operators when none are
    /// given, and re-indexes the recovery list by syndrome. Throws
    /// InvalidCodeError listing the violations.
    static StabilizerCode build(CodeDefinition def);

    const std::string &name() const {
        return name_;
    }
    std::size_t num_qubits() const {
        return n_;
    }
    std::size_t num_generators() const {
        return generators_.size();
    }
    std::size_t group_size() const {
        return std::size_t{1} << generators_.size();
    }
    const std::vector<PauliString> &generators() const {
        return generators_;
    }
    const PauliString &logical_x() const {
        return logical_x_;
    }
    const PauliString &logical_z() const {
        return logical_z_;
    }
    /// i * X_bar * Z_bar, hermitian since the two anticommute.
    const PauliString &logical_y() const {
        return logical_y_;
    }
    /// The logical counterpart of a single-qubit Pauli; identity for I.
    const PauliString &logical(PauliLetter sigma) const;
    /// recovery()[s] corrects syndrome s.
    const std::vector<PauliString> &recovery() const {
        return recovery_;
    }
    /// All 2^m group elements; index = subset bitmask over generators.
    const std::vector<PauliString> &group() const {
        return group_;
    }
    /// Cached brute-force distance; empty when n exceeds the brute-force bound.
    std::optional<std::size_t> distance() const {
        return distance_;
    }
    std::optional<std::size_t> min_stabilizer_weight() const {
        return w_;
    }

   private:
    StabilizerCode() = default;

    std::string name_;
    std::size_t n_ = 0;
    std::vector<PauliString> generators_;
    PauliString logical_x_, logical_z_, logical_y_, identity_;
    std::vector<PauliString> recovery_;
    std::vector<PauliString> group_;
    std::optional<std::size_t> distance_, w_;
};

/// Subset products of the generators. Throws InvalidCodeError if a product is
/// proportional to the identity or is not hermitian.
std::vector<PauliString> enumerate_group(std::size_t num_qubits, const std::vector<PauliString> &generators);
std::vector<PauliString> enumerate_group(const StabilizerCode &code);

SyndromeIndex syndrome(const PauliString &p, const std::vector<PauliString> &generators);
SyndromeIndex syndrome(const PauliString &p, const StabilizerCode &code);

/// f_{i sigma} = sum_j eta(R_j, S_i) eta(R_j, sigma_bar).
FMatrix f_function(const StabilizerCode &code);

DecodingCoefficients decoding_coefficients(const StabilizerCode &code);

struct DistanceAndW {
    std::size_t distance = 0;
    std::size_t w = 0;
};

/// Brute force over all 4^n phase-free strings (OpenMP-parallel).
/// Throws CapabilityError for n > kMaxBruteForceQubits.
DistanceAndW distance_and_w(std::size_t num_qubits, const std::vector<PauliString> &generators);
DistanceAndW distance_and_w(const StabilizerCode &code);
/// Single-threaded twin of distance_and_w.
DistanceAndW distance_and_w_reference(std::size_t num_qubits, const std::vector<PauliString> &generators);

/// One minimum-weight representative per syndrome, ties broken by the
/// lexicographically smallest letter string (I<X<Y<Z, qubit 0 first).
/// Result is indexed by syndrome. Throws InvalidCodeError if some syndrome is
/// unreachable, CapabilityError for n > kMaxBruteForceQubits.
std::vector<PauliString> auto_recovery(std::size_t num_qubits, const std::vector<PauliString> &generators);
std::vector<PauliString> auto_recovery_reference(std::size_t num_qubits, const std::vector<PauliString> &generators);

/// Parses the line-oriented code spec format:
///   n <int> / generator <pauli> / logicalX <pauli> / logicalZ <pauli> /
///   recovery <pauli> | recovery auto, with '#' comments.
/// Throws ParseError with the offending line number.
CodeDefinition parse_code_spec(std::string_view text, std::string name = "custom");
CodeDefinition load_code_spec(const std::filesystem::path &path);
std::string format_code_spec(const StabilizerCode &code);

/// "five-qubit", "steane", "shor", "bitflip3".
const std::vector<std::string> &builtin_code_names();
CodeDefinition builtin_code_definition(std::string_view name);
const StabilizerCode &builtin_code(std::string_view name);

/// A built-in name or a path to a spec file.
StabilizerCode resolve_code(std::string_view source);

}  // namespace cmap

#endif
