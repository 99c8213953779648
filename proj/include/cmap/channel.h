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

#ifndef CMAP_CHANNEL_H
#define CMAP_CHANNEL_H

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "cmap/pauli.h"

namespace cmap {

/// Diagonal of a trace-preserving Pauli-diagonal superoperator, [T_XX, T_YY, T_ZZ].
struct DiagonalChannel {
    double x = 1;
    double y = 1;
    double z = 1;

    double operator[](std::size_t i) const {
        return i == 0 ? x : (i == 1 ? y : z);
    }
    bool operator==(const DiagonalChannel &) const = default;
};

/// Single-qubit superoperator in Stokes (Pauli transfer) form:
/// entry(s, t) = tr(s T(t / 2)) with rows/columns ordered I, X, Y, Z.
/// Any real 4x4 matrix is allowed; physicality is a query.
class StokesChannel {
   public:
    StokesChannel() = default;
    explicit StokesChannel(const std::array<double, 16> &row_major) : m_(row_major) {
    }
    StokesChannel(const DiagonalChannel &d);  // NOLINT: implicit by intent

    static StokesChannel identity() {
        return StokesChannel(DiagonalChannel{});
    }

    double operator()(std::size_t row, std::size_t col) const {
        return m_[4 * row + col];
    }
    double &operator()(std::size_t row, std::size_t col) {
        return m_[4 * row + col];
    }
    double operator()(PauliLetter row, PauliLetter col) const {
        return m_[4 * static_cast<int>(row) + static_cast<int>(col)];
    }
    const std::array<double, 16> &entries() const {
        return m_;
    }

    bool is_trace_preserving(double tol = 1e-10) const;
    /// All off-diagonal entries within `tol` of zero.
    bool is_diagonal(double tol = 0) const;
    DiagonalChannel diagonal() const {
        return {m_[5], m_[10], m_[15]};
    }

    bool operator==(const StokesChannel &) const = default;

   private:
    std::array<double, 16> m_{};
};

/// Matrix product of the Stokes forms, i.e. the channel `outer` after `inner`.
StokesChannel compose(const StokesChannel &outer, const StokesChannel &inner);
StokesChannel operator-(const StokesChannel &a, const StokesChannel &b);

DiagonalChannel depolarizing(double eps);
DiagonalChannel dephasing(double eps);
/// Throws std::invalid_argument unless each p is in [0, 1] and their sum is at most 1.
DiagonalChannel from_pauli_probs(double px, double py, double pz);
/// (p_I, p_X, p_Y, p_Z) reconstructed from the diagonal; negative outside the tetrahedron.
std::array<double, 4> pauli_probs(const DiagonalChannel &d);
bool in_tetrahedron(const DiagonalChannel &d, double tol = 1e-12);

/// (T ⊗ Id) applied to sum_ab |a><b| ⊗ |a><b|, index (out, in) -> 2 * out + in.
Eigen::Matrix4cd choi_matrix(const StokesChannel &t);
/// Choi PSD within 1e-10 and first row (1, 0, 0, 0).
bool is_valid_channel(const StokesChannel &t);

/// Action on an arbitrary 2x2 operator.
Eigen::Matrix2cd apply_channel(const StokesChannel &t, const Eigen::Matrix2cd &op);

/// Kraus operators from the Choi eigendecomposition, eigenvalues below 1e-12
/// dropped. Throws std::invalid_argument if the map is not completely positive.
std::vector<Eigen::Matrix2cd> kraus_operators(const StokesChannel &t);
StokesChannel stokes_from_kraus(const std::vector<Eigen::Matrix2cd> &kraus);

/// Haar-like random CPTP map built from `num_kraus` Gaussian operators.
StokesChannel random_cptp(std::mt19937_64 &rng, int num_kraus = 4);

/// max |(T - Id)_{s t}| over all 16 entries.
double max_entry_distance(const StokesChannel &t);

/// Lower-bound estimate of ||T - Id||_diamond: the trace norm of
/// ((T - Id) ⊗ Id)(|psi><psi|) maximized over pure two-qubit states by
/// local ascent from `restarts` seeded random starts (plus the maximally
/// entangled state). Deterministic for a fixed seed.
double diamond_distance_estimate(const StokesChannel &t, std::uint64_t seed = 0, int restarts = 200);

/// Same estimator for T ⊗ T - Id ⊗ Id on two system qubits and two ancillas.
double two_copy_diamond_estimate(const StokesChannel &t, std::uint64_t seed = 0, int restarts = 50);

/// Channel literals: depol:<e>, deph:<e>, pauli:<px>,<py>,<pz>, diag:<x>,<y>,<z>,
/// stokes:<16 row-major reals>. Throws ParseError.
StokesChannel parse_channel(std::string_view literal);
std::string format_channel(const StokesChannel &t);

}  // namespace cmap

#endif
