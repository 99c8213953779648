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

#include "cmap/dynamics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cmap {

namespace {

bool finite_channel(const StokesChannel &t) {
    return std::all_of(t.entries().begin(), t.entries().end(), [](double v) { return std::isfinite(v); });
}

bool depends_only_on(const Polynomial3 &p, std::size_t var) {
    for (const auto &[e, c] : p.terms()) {
        for (std::size_t v = 0; v < 3; v++) {
            if (v != var && e[v] != 0) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

OrbitRecord iterate_diagonal(const DiagonalMapPolynomial &poly, const DiagonalChannel &t0, int k_max, double tol) {
    OrbitRecord rec;
    rec.diagonal = true;
    DiagonalChannel cur = t0;
    for (int k = 0;; k++) {
        StokesChannel s(cur);
        double dist = max_entry_distance(s);
        rec.levels.push_back({k, s, dist});
        if (dist < tol) {
            rec.converged = true;
            break;
        }
        if (k == k_max || !std::isfinite(dist)) {
            break;
        }
        cur = apply_diagonal(poly, cur);
        rec.iterations_used = k + 1;
    }
    return rec;
}

OrbitRecord iterate(const StabilizerCode &code, const StokesChannel &t0, int k_max, double tol) {
    if (t0.is_trace_preserving(0) && t0.is_diagonal(0)) {
        return iterate_diagonal(diagonal_map(code), t0.diagonal(), k_max, tol);
    }
    OrbitRecord rec;
    auto tables = make_tables(code);
    StokesChannel cur = t0;
    for (int k = 0;; k++) {
        double dist = max_entry_distance(cur);
        rec.levels.push_back({k, cur, dist});
        if (dist < tol) {
            rec.converged = true;
            break;
        }
        if (k == k_max || !finite_channel(cur)) {
            break;
        }
        cur = general_map(tables, cur);
        rec.iterations_used = k + 1;
    }
    return rec;
}

RaySpec RaySpec::depolarizing() {
    return RaySpec(Family::kDepolarizing, {1, 1, 1});
}

RaySpec RaySpec::dephasing() {
    return RaySpec(Family::kDephasing, {0, 1, 1});
}

RaySpec RaySpec::custom(const std::array<double, 3> &direction) {
    if (direction[0] == 0 && direction[1] == 0 && direction[2] == 0) {
        throw std::invalid_argument("ray direction must be nonzero");
    }
    for (double v : direction) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("ray direction must be finite");
        }
    }
    return RaySpec(Family::kCustom, direction);
}

RaySpec RaySpec::parse(const std::string &text) {
    if (text == "depol") {
        return depolarizing();
    }
    if (text == "deph") {
        return dephasing();
    }
    std::array<double, 3> d{};
    std::istringstream in(text);
    char c1 = 0, c2 = 0;
    if (!(in >> d[0] >> c1 >> d[1] >> c2 >> d[2]) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof()) {
        throw std::invalid_argument("ray must be 'depol', 'deph' or 'x,y,z', got '" + text + "'");
    }
    return custom(d);
}

std::string RaySpec::name() const {
    switch (family_) {
        case Family::kDepolarizing:
            return "depol";
        case Family::kDephasing:
            return "deph";
        default: {
            std::ostringstream out;
            out << direction_[0] << "," << direction_[1] << "," << direction_[2];
            return out.str();
        }
    }
}

std::optional<double> FixedPoints::next_below(double below) const {
    std::optional<double> out;
    for (double r : roots) {
        if (r < below - 1e-9) {
            out = r;
        }
    }
    return out;
}

FixedPoints fixed_points_1d(const UniPolynomial &poly, double lo, double hi, double tol, double step) {
    FixedPoints out;
    auto g = poly - UniPolynomial::identity();
    if (g.is_zero()) {
        out.degenerate = true;
        return out;
    }
    const auto cells = static_cast<long>(std::ceil((hi - lo) / step));
    auto grid = [&](long k) { return k == cells ? hi : lo + (hi - lo) * static_cast<double>(k) / cells; };
    double prev_x = grid(0);
    double prev_g = g(prev_x);
    if (prev_g == 0) {
        out.roots.push_back(prev_x);
    }
    for (long k = 1; k <= cells; k++) {
        double x = grid(k);
        double gx = g(x);
        if (gx == 0) {
            out.roots.push_back(x);
        } else if (prev_g != 0 && (prev_g < 0) != (gx < 0)) {
            double a = prev_x, b = x, ga = prev_g;
            while (b - a > tol) {
                double mid = 0.5 * (a + b);
                double gm = g(mid);
                if (gm == 0) {
                    a = b = mid;
                    break;
                }
                if ((gm < 0) == (ga < 0)) {
                    a = mid;
                    ga = gm;
                } else {
                    b = mid;
                }
            }
            out.roots.push_back(0.5 * (a + b));
        }
        prev_x = x;
        prev_g = gx;
    }
    return out;
}

double threshold(const DiagonalMapPolynomial &poly, const RaySpec &ray, const ThresholdOptions &opts) {
    auto converges = [&](double eps) {
        return iterate_diagonal(poly, ray.at(eps), opts.k_max, opts.tol_conv).converged;
    };
    if (converges(1.0)) {
        return 1.0;
    }
    double lo = 0, hi = 1;
    while (hi - lo > opts.tol_eps) {
        double mid = 0.5 * (lo + hi);
        (converges(mid) ? lo : hi) = mid;
    }
    return lo;
}

double threshold(const StabilizerCode &code, const RaySpec &ray, const ThresholdOptions &opts) {
    return threshold(diagonal_map(code), ray, opts);
}

std::optional<RayReduction> reduce_along_ray(const DiagonalMapPolynomial &poly, const RaySpec &ray) {
    const auto &d = ray.direction();
    if (d[0] == d[1] && d[1] == d[2]) {
        auto first = poly.components[0].on_diagonal();
        if (first == poly.components[1].on_diagonal() && first == poly.components[2].on_diagonal()) {
            return RayReduction{first, 0, d[0]};
        }
    }
    for (std::size_t s = 0; s < 3; s++) {
        if (d[s] != 0 && depends_only_on(poly.components[s], s)) {
            return RayReduction{poly.components[s].restrict_to(s), s, d[s]};
        }
    }
    return std::nullopt;
}

Matrix3 jacobian_fd(const DiagonalMapPolynomial &poly, const DiagonalChannel &at, double h) {
    Matrix3 j{};
    for (std::size_t v = 0; v < 3; v++) {
        std::array<double, 3> plus{at.x, at.y, at.z}, minus{at.x, at.y, at.z};
        plus[v] += h;
        minus[v] -= h;
        auto fp = apply_diagonal(poly, DiagonalChannel{plus[0], plus[1], plus[2]});
        auto fm = apply_diagonal(poly, DiagonalChannel{minus[0], minus[1], minus[2]});
        for (std::size_t s = 0; s < 3; s++) {
            j[s][v] = (fp[s] - fm[s]) / (2 * h);
        }
    }
    return j;
}

Matrix3 jacobian_fd(const StabilizerCode &code, const DiagonalChannel &at, double h) {
    return jacobian_fd(diagonal_map(code), at, h);
}

Matrix3 jacobian_analytic(const DiagonalMapPolynomial &poly, const DiagonalChannel &at) {
    Matrix3 j{};
    for (std::size_t s = 0; s < 3; s++) {
        for (std::size_t v = 0; v < 3; v++) {
            j[s][v] = poly.components[s].derivative(v)(at.x, at.y, at.z);
        }
    }
    return j;
}

std::array<std::array<double, 16>, 16> jacobian_fd_full(const StabilizerCode &code, const StokesChannel &at,
                                                        double h) {
    auto tables = make_tables(code);
    std::array<std::array<double, 16>, 16> j{};
    for (std::size_t v = 0; v < 16; v++) {
        auto plus = at.entries(), minus = at.entries();
        plus[v] += h;
        minus[v] -= h;
        auto fp = general_map(tables, StokesChannel(plus));
        auto fm = general_map(tables, StokesChannel(minus));
        for (std::size_t s = 0; s < 16; s++) {
            j[s][v] = (fp.entries()[s] - fm.entries()[s]) / (2 * h);
        }
    }
    return j;
}

double error_series(double alpha, double eps0, int k) {
    if (k <= 0) {
        return eps0;
    }
    if (alpha == 0) {
        return 0;
    }
    double v = std::pow(alpha * eps0, std::ldexp(1.0, k)) / alpha;
    if (std::isinf(v) || std::isnan(v)) {
        return std::numeric_limits<double>::infinity();
    }
    return v;
}

double five_qubit_closed_form_c_m() {
    return 1.0 / (1.0 - std::sqrt(2.0 / 3.0));
}

BoundReport general_bound_check(const StabilizerCode &code, std::uint64_t seed) {
    BoundReport r;
    auto c = c_constants(code, seed);
    r.c_n = c.c_n;
    r.warning = c.warning;
    r.c_m_operational = c.c_m;
    if (code.name() == "five-qubit") {
        r.c_m = five_qubit_closed_form_c_m();
        r.c_m_closed_form = true;
    } else {
        r.c_m = c.c_m;
    }
    r.bound = 1.0 / (to_double(r.c_n) + r.c_m);
    r.meets_0_014 = r.bound >= 0.014;
    return r;
}

}  // namespace cmap
