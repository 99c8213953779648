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


#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "cmap/codingmap.h"
#include "cmap/errors.h"
#include "cmap/oracle.h"
#include "test_oracles.h"

namespace cmap {
namespace {

using testing::letter_matrix;
using testing::max_abs_diff;

Eigen::Matrix2cd ground_state() {
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    rho(0, 0) = 1;
    return rho;
}

TEST(LogicalBasis, BitflipComputationalStates) {
    DenseCode dense(builtin_code("bitflip3"));
    const auto &b = dense.basis();
    EXPECT_NEAR(std::abs(b.ket0(0)), 1, 1e-12);
    EXPECT_NEAR(std::abs(b.ket1(7)), 1, 1e-12);
    EXPECT_NEAR(b.ket0.norm(), 1, 1e-12);
    EXPECT_NEAR(b.ket1.norm(), 1, 1e-12);
}

TEST(LogicalBasis, OrthonormalAndStabilized) {
    for (const char *name : {"bitflip3", "five-qubit", "steane"}) {
        const auto &code = builtin_code(name);
        DenseCode dense(code);
        const auto &b = dense.basis();
        EXPECT_NEAR(std::abs(b.ket0.dot(b.ket1)), 0, 1e-12) << name;
        EXPECT_NEAR(b.ket0.norm(), 1, 1e-12) << name;
        EXPECT_NEAR(b.ket1.norm(), 1, 1e-12) << name;
        for (const auto &s : code.generators()) {
            auto m = dense_pauli(s);
            EXPECT_NEAR(std::abs(b.ket0.dot(m * b.ket0) - 1.0), 0, 1e-12) << name;
            EXPECT_NEAR(std::abs(b.ket1.dot(m * b.ket1) - 1.0), 0, 1e-12) << name;
        }
        // Logical Z is diagonal on the basis, logical X swaps it.
        auto zl = dense_pauli(code.logical_z());
        auto xl = dense_pauli(code.logical_x());
        EXPECT_NEAR(std::abs(b.ket0.dot(zl * b.ket0) - 1.0), 0, 1e-12) << name;
        EXPECT_NEAR(std::abs(b.ket1.dot(zl * b.ket1) + 1.0), 0, 1e-12) << name;
        EXPECT_NEAR(std::abs(b.ket1.dot(xl * b.ket0) - 1.0), 0, 1e-12) << name;
    }
}

TEST(Simulate, IdentityChannelIsTransparent) {
    for (const char *name : {"bitflip3", "five-qubit", "steane"}) {
        DenseCode dense(builtin_code(name));
        EXPECT_LT((dense.simulate(StokesChannel::identity(), ground_state()) - ground_state()).norm(), 1e-12);
        EXPECT_LT(max_abs_diff(dense.extract_stokes(StokesChannel::identity()), StokesChannel::identity()), 1e-12)
            << name;
    }
}

TEST(Simulate, BitflipHandFormula) {
    DenseCode dense(builtin_code("bitflip3"));
    for (double z : {0.9, 0.5, -0.3}) {
        auto out = dense.extract_stokes(DiagonalChannel{1, z, z});
        EXPECT_NEAR(out(3, 3), (3 * z - z * z * z) / 2, 1e-12);
    }
}

TEST(Simulate, FiveQubitDepolarizingMatchesPolynomial) {
    const auto &code = builtin_code("five-qubit");
    auto out = extract_stokes(code, depolarizing(0.1));
    auto expected = apply_diagonal(diagonal_map(code), depolarizing(0.1));
    EXPECT_LT(max_abs_diff(out, expected), 1e-10);
}

TEST(Simulate, SteaneDephasingStaysDiagonal) {
    auto out = extract_stokes(builtin_code("steane"), dephasing(0.2));
    EXPECT_TRUE(out.is_diagonal(1e-12));
}

TEST(Simulate, PhysicalOutputs) {
    std::mt19937_64 rng(52);
    for (const char *name : {"bitflip3", "five-qubit"}) {
        DenseCode dense(builtin_code(name));
        for (int trial = 0; trial < 10; trial++) {
            auto t = random_cptp(rng);
            auto rho0 = dense.encode(ground_state());
            auto noisy = dense.apply_noise(t, rho0);
            EXPECT_NEAR(std::abs(noisy.trace() - 1.0), 0, 1e-12) << name;
            Eigen::SelfAdjointEigenSolver<DenseOperator> eig(noisy);
            EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-10) << name;
            auto out = dense.simulate(t, ground_state());
            EXPECT_NEAR(std::abs(out.trace() - 1.0), 0, 1e-12) << name;
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig2(out);
            EXPECT_GE(eig2.eigenvalues().minCoeff(), -1e-10) << name;
        }
    }
}

TEST(Simulate, SyndromeProjectorsResolveIdentity) {
    for (const char *name : {"bitflip3", "five-qubit", "steane"}) {
        DenseCode dense(builtin_code(name));
        auto projectors = dense.syndrome_projectors();
        DenseOperator sum = DenseOperator::Zero(dense.dim(), dense.dim());
        for (const auto &p : projectors) {
            sum += p;
            EXPECT_LT((p * p - p).norm(), 1e-10) << name;
        }
        EXPECT_LT((sum - DenseOperator::Identity(dense.dim(), dense.dim())).norm(), 1e-10) << name;
    }
}

TEST(Simulate, FusedPipelineMatchesLiteralSteps) {
    std::mt19937_64 rng(53);
    for (const char *name : {"bitflip3", "five-qubit"}) {
        DenseCode dense(builtin_code(name));
        for (int trial = 0; trial < 5; trial++) {
            auto t = random_cptp(rng);
            auto literal = dense.decode(dense.recover(dense.apply_noise(t, dense.encode(ground_state()))));
            EXPECT_LT((literal - dense.simulate(t, ground_state())).norm(), 1e-12) << name;
        }
    }
}

TEST(Simulate, CapabilityLimit) {
    EXPECT_THROW(DenseCode(builtin_code("shor")), CapabilityError);
    EXPECT_THROW(DenseCode(builtin_code("five-qubit")).apply_noise(DiagonalChannel{1, 1, -1},
                                                                   DenseOperator::Identity(32, 32)),
                 std::invalid_argument);
}

TEST(Simulate, GeneralMapAgreesOnRandomChannels) {
    std::mt19937_64 rng(54);
    for (const char *name : {"bitflip3", "five-qubit", "steane"}) {
        const auto &code = builtin_code(name);
        DenseCode dense(code);
        auto tables = make_tables(code);
        for (int trial = 0; trial < 5; trial++) {
            auto t = random_cptp(rng);
            EXPECT_LT(max_abs_diff(dense.extract_stokes(t), general_map(tables, t)), 1e-10) << name;
        }
    }
}

}  // namespace
}  // namespace cmap
