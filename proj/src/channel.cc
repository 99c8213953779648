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

#include "cmap/channel.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "cmap/errors.h"

namespace cmap {

using cd = std::complex<double>;

namespace {

const std::array<Eigen::Matrix2cd, 4> &pauli_matrices() {
    static const std::array<Eigen::Matrix2cd, 4> mats = [] {
        std::array<Eigen::Matrix2cd, 4> m;
        m[0] << 1, 0, 0, 1;
        m[1] << 0, 1, 1, 0;
        m[2] << 0, cd(0, -1), cd(0, 1), 0;
        m[3] << 1, 0, 0, -1;
        return m;
    }();
    return mats;
}

double trace_norm(const Eigen::MatrixXcd &h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h, Eigen::EigenvaluesOnly);
    return eig.eigenvalues().cwiseAbs().sum();
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// max over unit psi in C^{d*d} of ||(D ⊗ Id)(|psi><psi|)||_1, where
/// units[a * d + b] = D(|a><b|).
double ascend_trace_norm(const std::vector<Eigen::MatrixXcd> &units, int d, std::uint64_t seed, int restarts) {
    const int dim = d * d;
    auto objective = [&](const Eigen::VectorXcd &psi) {
        Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
        for (int a = 0; a < d; a++) {
            for (int b = 0; b < d; b++) {
                const auto &u = units[a * d + b];
                for (int k = 0; k < d; k++) {
                    for (int l = 0; l < d; l++) {
                        cd c = psi[a * d + k] * std::conj(psi[b * d + l]);
                        if (c == cd(0)) {
                            continue;
                        }
                        for (int i = 0; i < d; i++) {
                            for (int j = 0; j < d; j++) {
                                out(i * d + k, j * d + l) += c * u(i, j);
                            }
                        }
                    }
                }
            }
        }
        return trace_norm(out);
    };

    auto climb = [&](Eigen::VectorXcd psi, std::mt19937_64 &rng) {
        std::normal_distribution<double> gauss;
        psi.normalize();
        double best = objective(psi);
        double step = 0.5;
        int failures = 0;
        while (step > 1e-7) {
            Eigen::VectorXcd trial = psi;
            for (int i = 0; i < dim; i++) {
                trial[i] += step * cd(gauss(rng), gauss(rng));
            }
            trial.normalize();
            double v = objective(trial);
            if (v > best) {
                best = v;
                psi = trial;
                failures = 0;
            } else if (++failures >= 12) {
                step *= 0.5;
                failures = 0;
            }
        }
        return best;
    };

    std::vector<double> results(static_cast<std::size_t>(restarts) + 1, 0.0);
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r <= restarts; r++) {
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(r))));
        Eigen::VectorXcd start(dim);
        if (r == 0) {
            start.setZero();
            for (int a = 0; a < d; a++) {
                start[a * d + a] = 1;
            }
        } else {
            std::normal_distribution<double> gauss;
            for (int i = 0; i < dim; i++) {
                start[i] = cd(gauss(rng), gauss(rng));
            }
        }
        results[static_cast<std::size_t>(r)] = climb(start, rng);
    }
    return *std::max_element(results.begin(), results.end());
}

std::vector<double> parse_numbers(std::string_view body, std::string_view literal) {
    std::vector<double> out;
    std::string text(body);
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(token, &used));
            if (used != token.size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            throw ParseError("bad number '" + token + "' in channel literal '" + std::string(literal) + "'");
        }
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

}  // namespace

StokesChannel::StokesChannel(const DiagonalChannel &d) {
    m_[0] = 1;
    m_[5] = d.x;
    m_[10] = d.y;
    m_[15] = d.z;
}

bool StokesChannel::is_trace_preserving(double tol) const {
    return std::abs(m_[0] - 1) <= tol && std::abs(m_[1]) <= tol && std::abs(m_[2]) <= tol && std::abs(m_[3]) <= tol;
}

bool StokesChannel::is_diagonal(double tol) const {
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            if (r != c && std::abs(m_[4 * r + c]) > tol) {
                return false;
            }
        }
    }
    return true;
}

StokesChannel compose(const StokesChannel &outer, const StokesChannel &inner) {
    StokesChannel out;
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            double acc = 0;
            for (int k = 0; k < 4; k++) {
                acc += outer(r, k) * inner(k, c);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

StokesChannel operator-(const StokesChannel &a, const StokesChannel &b) {
    std::array<double, 16> e;
    for (int i = 0; i < 16; i++) {
        e[i] = a.entries()[i] - b.entries()[i];
    }
    return StokesChannel(e);
}

DiagonalChannel depolarizing(double eps) {
    return {1 - eps, 1 - eps, 1 - eps};
}

DiagonalChannel dephasing(double eps) {
    return {1, 1 - eps, 1 - eps};
}

DiagonalChannel from_pauli_probs(double px, double py, double pz) {
    for (double p : {px, py, pz}) {
        if (!(p >= 0 && p <= 1)) {
            throw std::invalid_argument("Pauli probabilities must lie in [0, 1]");
        }
    }
    if (px + py + pz > 1 + 1e-12) {
        throw std::invalid_argument("Pauli probabilities must sum to at most 1");
    }
    return {1 - 2 * (py + pz), 1 - 2 * (px + pz), 1 - 2 * (px + py)};
}

std::array<double, 4> pauli_probs(const DiagonalChannel &d) {
    return {
        (1 + d.x + d.y + d.z) / 4,
        (1 + d.x - d.y - d.z) / 4,
        (1 - d.x + d.y - d.z) / 4,
        (1 - d.x - d.y + d.z) / 4,
    };
}

bool in_tetrahedron(const DiagonalChannel &d, double tol) {
    auto p = pauli_probs(d);
    return std::all_of(p.begin(), p.end(), [&](double v) { return v >= -tol; });
}

Eigen::Matrix2cd apply_channel(const StokesChannel &t, const Eigen::Matrix2cd &op) {
    const auto &paulis = pauli_matrices();
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    for (int tcol = 0; tcol < 4; tcol++) {
        cd coeff = (paulis[tcol] * op).trace();
        if (coeff == cd(0)) {
            continue;
        }
        for (int srow = 0; srow < 4; srow++) {
            out += 0.5 * t(srow, tcol) * coeff * paulis[srow];
        }
    }
    return out;
}

Eigen::Matrix4cd choi_matrix(const StokesChannel &t) {
    Eigen::Matrix4cd choi = Eigen::Matrix4cd::Zero();
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            Eigen::Matrix2cd unit = Eigen::Matrix2cd::Zero();
            unit(a, b) = 1;
            Eigen::Matrix2cd img = apply_channel(t, unit);
            for (int i = 0; i < 2; i++) {
                for (int j = 0; j < 2; j++) {
                    choi(2 * i + a, 2 * j + b) = img(i, j);
                }
            }
        }
    }
    return choi;
}

bool is_valid_channel(const StokesChannel &t) {
    if (!t.is_trace_preserving(1e-10)) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(choi_matrix(t), Eigen::EigenvaluesOnly);
    return eig.eigenvalues().minCoeff() >= -1e-10;
}

std::vector<Eigen::Matrix2cd> kraus_operators(const StokesChannel &t) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(choi_matrix(t));
    if (eig.eigenvalues().minCoeff() < -1e-10) {
        throw std::invalid_argument("superoperator is not completely positive; Kraus form does not exist");
    }
    std::vector<Eigen::Matrix2cd> out;
    for (int k = 0; k < 4; k++) {
        double lambda = eig.eigenvalues()[k];
        if (lambda < 1e-12) {
            continue;
        }
        Eigen::Matrix2cd kraus;
        for (int i = 0; i < 2; i++) {
            for (int a = 0; a < 2; a++) {
                kraus(i, a) = std::sqrt(lambda) * eig.eigenvectors()(2 * i + a, k);
            }
        }
        out.push_back(kraus);
    }
    return out;
}

StokesChannel stokes_from_kraus(const std::vector<Eigen::Matrix2cd> &kraus) {
    const auto &paulis = pauli_matrices();
    StokesChannel out;
    for (int c = 0; c < 4; c++) {
        Eigen::Matrix2cd img = Eigen::Matrix2cd::Zero();
        for (const auto &k : kraus) {
            img += k * (0.5 * paulis[c]) * k.adjoint();
        }
        for (int r = 0; r < 4; r++) {
            out(r, c) = (paulis[r] * img).trace().real();
        }
    }
    return out;
}

StokesChannel random_cptp(std::mt19937_64 &rng, int num_kraus) {
    std::normal_distribution<double> gauss;
    std::vector<Eigen::Matrix2cd> g(static_cast<std::size_t>(num_kraus));
    Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
    for (auto &m : g) {
        for (int i = 0; i < 2; i++) {
            for (int j = 0; j < 2; j++) {
                m(i, j) = cd(gauss(rng), gauss(rng));
            }
        }
        s += m.adjoint() * m;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(s);
    Eigen::Matrix2cd inv_sqrt =
        eig.eigenvectors() * eig.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() * eig.eigenvectors().adjoint();
    for (auto &m : g) {
        m = m * inv_sqrt;
    }
    return stokes_from_kraus(g);
}

double max_entry_distance(const StokesChannel &t) {
    double worst = 0;
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            worst = std::max(worst, std::abs(t(r, c) - (r == c ? 1.0 : 0.0)));
        }
    }
    return worst;
}

double diamond_distance_estimate(const StokesChannel &t, std::uint64_t seed, int restarts) {
    std::vector<Eigen::MatrixXcd> units;
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            Eigen::Matrix2cd unit = Eigen::Matrix2cd::Zero();
            unit(a, b) = 1;
            units.emplace_back(apply_channel(t, unit) - unit);
        }
    }
    return ascend_trace_norm(units, 2, seed, restarts);
}

double two_copy_diamond_estimate(const StokesChannel &t, std::uint64_t seed, int restarts) {
    // Basis index of a two-qubit system state is 2 * first + second.
    std::vector<Eigen::MatrixXcd> units;
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            Eigen::Matrix2cd u1 = Eigen::Matrix2cd::Zero(), u2 = Eigen::Matrix2cd::Zero();
            u1(a / 2, b / 2) = 1;
            u2(a % 2, b % 2) = 1;
            Eigen::Matrix2cd t1 = apply_channel(t, u1), t2 = apply_channel(t, u2);
            Eigen::MatrixXcd img(4, 4);
            for (int i = 0; i < 4; i++) {
                for (int j = 0; j < 4; j++) {
                    img(i, j) = t1(i / 2, j / 2) * t2(i % 2, j % 2) - u1(i / 2, j / 2) * u2(i % 2, j % 2);
                }
            }
            units.push_back(img);
        }
    }
    return ascend_trace_norm(units, 4, seed, restarts);
}

StokesChannel parse_channel(std::string_view literal) {
    auto colon = literal.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError("channel literal '" + std::string(literal) + "' lacks a '<kind>:' prefix");
    }
    auto kind = literal.substr(0, colon);
    auto values = parse_numbers(literal.substr(colon + 1), literal);
    auto expect = [&](std::size_t count) {
        if (values.size() != count) {
            throw ParseError(
                "channel literal '" + std::string(literal) + "' needs " + std::to_string(count) + " value(s)");
        }
    };
    if (kind == "depol") {
        expect(1);
        return depolarizing(values[0]);
    }
    if (kind == "deph") {
        expect(1);
        return dephasing(values[0]);
    }
    if (kind == "pauli") {
        expect(3);
        try {
            return from_pauli_probs(values[0], values[1], values[2]);
        } catch (const std::invalid_argument &e) {
            throw ParseError(std::string(e.what()) + " in '" + std::string(literal) + "'");
        }
    }
    if (kind == "diag") {
        expect(3);
        return DiagonalChannel{values[0], values[1], values[2]};
    }
    if (kind == "stokes") {
        expect(16);
        std::array<double, 16> e{};
        std::copy(values.begin(), values.end(), e.begin());
        return StokesChannel(e);
    }
    throw ParseError("unknown channel kind '" + std::string(kind) + "'");
}

std::string format_channel(const StokesChannel &t) {
    char buf[32];
    std::string out;
    auto add = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        if (!out.empty() && out.back() != ':') {
            out += ',';
        }
        out += buf;
    };
    if (t.is_trace_preserving(0) && t.is_diagonal(0)) {
        out = "diag:";
        auto d = t.diagonal();
        add(d.x);
        add(d.y);
        add(d.z);
    } else {
        out = "stokes:";
        for (double v : t.entries()) {
            add(v);
        }
    }
    return out;
}

}  // namespace cmap
