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

// Dense density-matrix simulation of encode -> product noise -> recovery ->
// decode. It shares nothing with the coding-map algebra beyond turning a
// PauliString into its matrix, so it serves as an independent check.

#ifndef CMAP_ORACLE_H
#define CMAP_ORACLE_H

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "cmap/channel.h"
#include "cmap/stabilizer.h"

namespace cmap {

inline constexpr std::size_t kMaxOracleQubits = 7;

using DenseOperator = Eigen::MatrixXcd;

/// Matrix of a Pauli string in the computational basis, qubit 0 most significant.
DenseOperator dense_pauli(const PauliString &p);

struct LogicalBasis {
    Eigen::VectorXcd ket0;
    Eigen::VectorXcd ket1;
};

class DenseCode {
   public:
    /// Throws CapabilityError for n > kMaxOracleQubits and InvalidCodeError if
    /// the codespace projector vanishes.
    explicit DenseCode(const StabilizerCode &code);

    std::size_t num_qubits() const {
        return n_;
    }
    std::size_t dim() const {
        return std::size_t{1} << n_;
    }
    const DenseOperator &codespace_projector() const {
        return code_proj_;
    }
    const LogicalBasis &basis() const {
        return basis_;
    }
    /// P_j = R_j P_C R_j^dagger, indexed like the recovery list.
    std::vector<DenseOperator> syndrome_projectors() const;

    /// V rho0 V^dagger with V = |0_L><0| + |1_L><1|.
    DenseOperator encode(const Eigen::Matrix2cd &rho0) const;
    /// T applied to every physical qubit in turn through its Kraus operators.
    /// Throws std::invalid_argument if T is not completely positive.
    DenseOperator apply_noise(const StokesChannel &t, const DenseOperator &rho) const;
    /// sum_j R_j P_j rho P_j R_j^dagger.
    DenseOperator recover(const DenseOperator &rho) const;
    /// rho_f(a, b) = <a_L| rho |b_L>.
    Eigen::Matrix2cd decode(const DenseOperator &rho) const;

    /// Full pipeline; recovery and decoding are fused into one contraction.
    Eigen::Matrix2cd simulate(const StokesChannel &t, const Eigen::Matrix2cd &rho0) const;
    /// out(s, t) = tr(s * simulate(T, t / 2)).
    StokesChannel extract_stokes(const StokesChannel &t) const;

   private:
    std::size_t n_;
    DenseOperator code_proj_;
    LogicalBasis basis_;
    std::vector<DenseOperator> recovery_;
    /// Columns (2j + a) hold P_j R_j^dagger |a_L>.
    DenseOperator fused_;
};

LogicalBasis build_logical_basis(const StabilizerCode &code);
Eigen::Matrix2cd simulate(const StabilizerCode &code, const StokesChannel &t, const Eigen::Matrix2cd &rho0);
StokesChannel extract_stokes(const StabilizerCode &code, const StokesChannel &t);

}  // namespace cmap

#endif
