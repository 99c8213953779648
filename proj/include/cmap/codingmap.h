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

#ifndef CMAP_CODINGMAP_H
#define CMAP_CODINGMAP_H

#include <array>
#include <cstdint>
#include <vector>

#include "cmap/channel.h"
#include "cmap/polynomial.h"
#include "cmap/stabilizer.h"

namespace cmap {

/// Exact polynomial form of the diagonal-reduced coding map: one trivariate
/// polynomial in (x, y, z) = (T_XX, T_YY, T_ZZ) per output component.
struct DiagonalMapPolynomial {
    std::array<Polynomial3, 3> components;
    /// Total degree bound (the physical qubit count).
    std::size_t degree_bound = 0;

    /// Component for X, Y or Z.
    const Polynomial3 &operator[](PauliLetter sigma) const {
        return components[static_cast<int>(sigma) - 1];
    }
};

/// Component sigma collects f_{i sigma} / 2^m * x^wX y^wY z^wZ over the
/// stabilizers S_i, with weights taken from |S_i sigma_bar|.
DiagonalMapPolynomial diagonal_map(const StabilizerCode &code);

DiagonalChannel apply_diagonal(const DiagonalMapPolynomial &poly, const DiagonalChannel &t);
std::array<Rational, 3> apply_diagonal(const DiagonalMapPolynomial &poly, const std::array<Rational, 3> &xyz);

/// Flattened decoding/encoding tables consumed by the general-map kernels.
struct CodingTables {
    std::size_t num_qubits = 0;
    std::size_t group_size = 0;
    /// letters[s][i * n + k]: letter of |S_i sigma_bar| on qubit k, sigma = s.
    std::array<std::vector<std::uint8_t>, 4> letters;
    std::array<std::vector<double>, 4> alpha;
    std::array<std::vector<double>, 4> beta;
};

CodingTables make_tables(const StabilizerCode &code);

/// Full coding map on an arbitrary 4x4 Stokes matrix:
///   out(s, t) = sum_{i,j} beta^s_j alpha^t_i prod_k T(nu_jk, mu_ik)
/// with nu_j = |S_j s_bar| and mu_i = |S_i t_bar|. OpenMP-parallel over
/// (entry, j); partial sums are reduced in ascending j, so the result does
/// not depend on the thread count.
StokesChannel general_map(const CodingTables &tables, const StokesChannel &t);
StokesChannel general_map(const StabilizerCode &code, const StokesChannel &t);

/// Straight serial evaluation of the same double sum.
StokesChannel general_map_reference(const CodingTables &tables, const StokesChannel &t);

struct CConstants {
    /// 2^m max_sigma sum_i |beta^sigma_i|.
    Rational c_n;
    /// Smallest c with |Omega_d(D)_ss - 1| <= c eps^2 over the sampling grid.
    double c_m = 0;
    /// Set when d < 3 or w < 2; the scaling bounds are not guaranteed then.
    bool warning = false;
};

/// c_M grid: eps = k / 1000 for k = 1..1000, deficit directions = the three
/// axes plus 20 seeded random patterns in [0, 1]^3 rescaled to max entry 1.
CConstants c_constants(const StabilizerCode &code, std::uint64_t seed = 0);
Rational c_n_constant(const StabilizerCode &code);

}  // namespace cmap

#endif
