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

#include "cmap/oracle.h"

#include <array>
#include <complex>

#include "cmap/errors.h"

namespace cmap {

using cd = std::complex<double>;

DenseOperator dense_pauli(const PauliString &p) {
    const std::size_t n = p.num_qubits();
    const std::size_t dim = std::size_t{1} << n;
    static constexpr std::array<cd, 4> kPhase{cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    DenseOperator out = DenseOperator::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t col = 0; col < dim; col++) {
        std::size_t row = col;
        cd v = kPhase[p.phase()];
        for (std::size_t q = 0; q < n; q++) {
            const std::size_t bit = std::size_t{1} << (n - 1 - q);
            const bool in = (col & bit) != 0;
            switch (p[q]) {
                case PauliLetter::X:
                    row ^= bit;
                    break;
                case PauliLetter::Y:
                    // Y|0> = i|1>, Y|1> = -i|0>.
                    row ^= bit;
                    v *= in ? cd(0, -1) : cd(0, 1);
                    break;
                case PauliLetter::Z:
                    v *= in ? -1.0 : 1.0;
                    break;
                default:
                    break;
            }
        }
        out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = v;
    }
    return out;
}

DenseCode::DenseCode(const StabilizerCode &code) : n_(code.num_qubits()) {
    if (n_ > kMaxOracleQubits) {
        throw CapabilityError(
            "dense oracle supports at most " + std::to_string(kMaxOracleQubits) + " qubits; '" + code.name() +
            "' has " + std::to_string(n_));
    }
    const auto d = static_cast<Eigen::Index>(dim());
    const DenseOperator id = DenseOperator::Identity(d, d);

    code_proj_ = id;
    for (const auto &g : code.generators()) {
        code_proj_ = code_proj_ * (0.5 * (id + dense_pauli(g)));
    }

    DenseOperator zero_proj = 0.5 * (id + dense_pauli(code.logical_z())) * code_proj_;
    Eigen::Index pick = -1;
    for (Eigen::Index c = 0; c < d; c++) {
        if (zero_proj.col(c).norm() > 1e-8) {
            pick = c;
            break;
        }
    }
    if (pick < 0) {
        throw InvalidCodeError("codespace projector vanishes for '" + code.name() + "'");
    }
    basis_.ket0 = zero_proj.col(pick).normalized();
    basis_.ket1 = dense_pauli(code.logical_x()) * basis_.ket0;

    for (const auto &r : code.recovery()) {
        recovery_.push_back(dense_pauli(r));
    }
    const auto syndromes = static_cast<Eigen::Index>(recovery_.size());
    fused_ = DenseOperator::Zero(d, 2 * syndromes);
    for (Eigen::Index j = 0; j < syndromes; j++) {
        const auto &r = recovery_[static_cast<std::size_t>(j)];
        DenseOperator proj = r * code_proj_ * r.adjoint();
        fused_.col(2 * j) = proj * (r.adjoint() * basis_.ket0);
        fused_.col(2 * j + 1) = proj * (r.adjoint() * basis_.ket1);
    }
}

std::vector<DenseOperator> DenseCode::syndrome_projectors() const {
    std::vector<DenseOperator> out;
    for (const auto &r : recovery_) {
        out.push_back(r * code_proj_ * r.adjoint());
    }
    return out;
}

DenseOperator DenseCode::encode(const Eigen::Matrix2cd &rho0) const {
    DenseOperator v(static_cast<Eigen::Index>(dim()), 2);
    v.col(0) = basis_.ket0;
    v.col(1) = basis_.ket1;
    return v * rho0 * v.adjoint();
}

DenseOperator DenseCode::apply_noise(const StokesChannel &t, const DenseOperator &rho) const {
    auto kraus = kraus_operators(t);
    const auto d = static_cast<Eigen::Index>(dim());
    DenseOperator cur = rho;
    for (std::size_t q = 0; q < n_; q++) {
        const Eigen::Index bit = Eigen::Index{1} << (n_ - 1 - q);
        DenseOperator next = DenseOperator::Zero(d, d);
        DenseOperator left(d, d);
        for (const auto &k : kraus) {
            // left = K_q * cur
            for (Eigen::Index r0 = 0; r0 < d; r0++) {
                if (r0 & bit) {
                    continue;
                }
                const Eigen::Index r1 = r0 | bit;
                left.row(r0) = k(0, 0) * cur.row(r0) + k(0, 1) * cur.row(r1);
                left.row(r1) = k(1, 0) * cur.row(r0) + k(1, 1) * cur.row(r1);
            }
            // next += left * K_q^dagger
            for (Eigen::Index c0 = 0; c0 < d; c0++) {
                if (c0 & bit) {
                    continue;
                }
                const Eigen::Index c1 = c0 | bit;
                next.col(c0) += std::conj(k(0, 0)) * left.col(c0) + std::conj(k(0, 1)) * left.col(c1);
                next.col(c1) += std::conj(k(1, 0)) * left.col(c0) + std::conj(k(1, 1)) * left.col(c1);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

DenseOperator DenseCode::recover(const DenseOperator &rho) const {
    const auto d = static_cast<Eigen::Index>(dim());
    DenseOperator out = DenseOperator::Zero(d, d);
    for (const auto &r : recovery_) {
        DenseOperator proj = r * code_proj_ * r.adjoint();
        DenseOperator op = r * proj;
        out += op * rho * op.adjoint();
    }
    return out;
}

Eigen::Matrix2cd DenseCode::decode(const DenseOperator &rho) const {
    Eigen::Matrix2cd out;
    const Eigen::VectorXcd *kets[2] = {&basis_.ket0, &basis_.ket1};
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            out(a, b) = kets[a]->dot(rho * *kets[b]);
        }
    }
    return out;
}

Eigen::Matrix2cd DenseCode::simulate(const StokesChannel &t, const Eigen::Matrix2cd &rho0) const {
    DenseOperator noisy = apply_noise(t, encode(rho0));
    DenseOperator contracted = fused_.adjoint() * noisy * fused_;
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    for (Eigen::Index j = 0; j < contracted.rows() / 2; j++) {
        out += contracted.block(2 * j, 2 * j, 2, 2);
    }
    return out;
}

StokesChannel DenseCode::extract_stokes(const StokesChannel &t) const {
    std::array<Eigen::Matrix2cd, 4> paulis;
    for (int s = 0; s < 4; s++) {
        paulis[s] = dense_pauli(PauliString::single(1, 0, static_cast<PauliLetter>(s)));
    }
    StokesChannel out;
#pragma omp parallel for schedule(static)
    for (int c = 0; c < 4; c++) {
        Eigen::Matrix2cd rho_f = simulate(t, 0.5 * paulis[c]);
        for (int s = 0; s < 4; s++) {
            out(static_cast<std::size_t>(s), static_cast<std::size_t>(c)) = (paulis[s] * rho_f).trace().real();
        }
    }
    return out;
}

LogicalBasis build_logical_basis(const StabilizerCode &code) {
    return DenseCode(code).basis();
}

Eigen::Matrix2cd simulate(const StabilizerCode &code, const StokesChannel &t, const Eigen::Matrix2cd &rho0) {
    return DenseCode(code).simulate(t, rho0);
}

StokesChannel extract_stokes(const StabilizerCode &code, const StokesChannel &t) {
    return DenseCode(code).extract_stokes(t);
}

}  // namespace cmap
