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

#include "cmap/codingmap.h"

#include <algorithm>
#include <cmath>
#include <random>

namespace cmap {

DiagonalMapPolynomial diagonal_map(const StabilizerCode &code) {
    auto f = f_function(code);
    const auto &group = code.group();
    const auto size = static_cast<std::int64_t>(group.size());
    DiagonalMapPolynomial out;
    out.degree_bound = code.num_qubits();
    for (auto sigma : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
        auto &poly = out.components[static_cast<int>(sigma) - 1];
        const auto &bar = code.logical(sigma);
        for (std::size_t i = 0; i < group.size(); i++) {
            auto p = group[i] * bar;
            Exponents e{
                static_cast<unsigned>(p.weight(PauliLetter::X)),
                static_cast<unsigned>(p.weight(PauliLetter::Y)),
                static_cast<unsigned>(p.weight(PauliLetter::Z)),
            };
            poly.add_term(e, Rational(f[i][static_cast<int>(sigma)], size));
        }
    }
    return out;
}

DiagonalChannel apply_diagonal(const DiagonalMapPolynomial &poly, const DiagonalChannel &t) {
    return {
        poly.components[0](t.x, t.y, t.z),
        poly.components[1](t.x, t.y, t.z),
        poly.components[2](t.x, t.y, t.z),
    };
}

std::array<Rational, 3> apply_diagonal(const DiagonalMapPolynomial &poly, const std::array<Rational, 3> &xyz) {
    return {
        poly.components[0](xyz[0], xyz[1], xyz[2]),
        poly.components[1](xyz[0], xyz[1], xyz[2]),
        poly.components[2](xyz[0], xyz[1], xyz[2]),
    };
}

CodingTables make_tables(const StabilizerCode &code) {
    auto coeffs = decoding_coefficients(code);
    CodingTables tables;
    tables.num_qubits = code.num_qubits();
    tables.group_size = code.group_size();
    const auto n = tables.num_qubits;
    for (int s = 0; s < 4; s++) {
        auto &letters = tables.letters[s];
        letters.resize(tables.group_size * n);
        for (std::size_t i = 0; i < tables.group_size; i++) {
            const auto &entry = coeffs[s][i];
            for (std::size_t k = 0; k < n; k++) {
                letters[i * n + k] = static_cast<std::uint8_t>(entry.product[k]);
            }
            tables.alpha[s].push_back(entry.alpha);
            tables.beta[s].push_back(to_double(entry.beta));
        }
    }
    return tables;
}

StokesChannel general_map(const CodingTables &tables, const StokesChannel &t) {
    const auto n = tables.num_qubits;
    const auto size = static_cast<std::int64_t>(tables.group_size);
    const auto &m = t.entries();
    std::vector<double> partial(static_cast<std::size_t>(16 * size), 0.0);

#pragma omp parallel for collapse(2) schedule(static)
    for (int entry = 0; entry < 16; entry++) {
        for (std::int64_t j = 0; j < size; j++) {
            const int s = entry / 4, c = entry % 4;
            const double beta = tables.beta[s][static_cast<std::size_t>(j)];
            if (beta == 0) {
                continue;
            }
            const std::uint8_t *nu = &tables.letters[s][static_cast<std::size_t>(j) * n];
            const std::uint8_t *mu = tables.letters[c].data();
            const double *alpha = tables.alpha[c].data();
            double acc = 0;
            for (std::int64_t i = 0; i < size; i++, mu += n) {
                double prod = alpha[i];
                for (std::size_t k = 0; k < n && prod != 0; k++) {
                    prod *= m[4 * nu[k] + mu[k]];
                }
                acc += prod;
            }
            partial[static_cast<std::size_t>(entry * size + j)] = beta * acc;
        }
    }

    StokesChannel out;
    for (int entry = 0; entry < 16; entry++) {
        double acc = 0;
        for (std::int64_t j = 0; j < size; j++) {
            acc += partial[static_cast<std::size_t>(entry * size + j)];
        }
        out(static_cast<std::size_t>(entry / 4), static_cast<std::size_t>(entry % 4)) = acc;
    }
    return out;
}

StokesChannel general_map(const StabilizerCode &code, const StokesChannel &t) {
    return general_map(make_tables(code), t);
}

StokesChannel general_map_reference(const CodingTables &tables, const StokesChannel &t) {
    const auto n = tables.num_qubits;
    StokesChannel out;
    for (int s = 0; s < 4; s++) {
        for (int c = 0; c < 4; c++) {
            // Same grouping as the parallel kernel: beta_j times an inner sum over i.
            double acc = 0;
            for (std::size_t j = 0; j < tables.group_size; j++) {
                double inner = 0;
                for (std::size_t i = 0; i < tables.group_size; i++) {
                    double prod = tables.alpha[c][i];
                    for (std::size_t k = 0; k < n; k++) {
                        prod *= t(tables.letters[s][j * n + k], tables.letters[c][i * n + k]);
                    }
                    inner += prod;
                }
                acc += tables.beta[s][j] * inner;
            }
            out(static_cast<std::size_t>(s), static_cast<std::size_t>(c)) = acc;
        }
    }
    return out;
}

Rational c_n_constant(const StabilizerCode &code) {
    auto coeffs = decoding_coefficients(code);
    Rational best(0);
    for (const auto &entries : coeffs) {
        Rational sum(0);
        for (const auto &e : entries) {
            sum += abs(e.beta);
        }
        best = std::max(best, sum);
    }
    return best * Rational(static_cast<std::int64_t>(code.group_size()));
}

CConstants c_constants(const StabilizerCode &code, std::uint64_t seed) {
    CConstants out;
    out.c_n = c_n_constant(code);
    auto d = code.distance();
    auto w = code.min_stabilizer_weight();
    out.warning = !d || !w || *d < 3 || *w < 2;

    std::vector<std::array<double, 3>> directions{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < 20; k++) {
        std::array<double, 3> u{unit(rng), unit(rng), unit(rng)};
        double top = std::max({u[0], u[1], u[2]});
        for (auto &v : u) {
            v /= top;
        }
        directions.push_back(u);
    }

    auto poly = diagonal_map(code);
    double worst = 0;
    for (const auto &u : directions) {
        for (int k = 1; k <= 1000; k++) {
            double eps = k / 1000.0;
            DiagonalChannel dch{1 - eps * u[0], 1 - eps * u[1], 1 - eps * u[2]};
            auto img = apply_diagonal(poly, dch);
            for (int s = 0; s < 3; s++) {
                worst = std::max(worst, std::abs(img[static_cast<std::size_t>(s)] - 1) / (eps * eps));
            }
        }
    }
    out.c_m = worst;
    return out;
}

}  // namespace cmap
