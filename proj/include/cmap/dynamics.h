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

#ifndef CMAP_DYNAMICS_H
#define CMAP_DYNAMICS_H

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cmap/channel.h"
#include "cmap/codingmap.h"
#include "cmap/polynomial.h"
#include "cmap/stabilizer.h"

namespace cmap {

inline constexpr int kDefaultMaxLevels = 60;
inline constexpr double kDefaultConvergenceTol = 1e-9;

struct OrbitLevel {
    int k = 0;
    StokesChannel state;
    double distance = 0;  // max_entry_distance to the identity
};

struct OrbitRecord {
    std::vector<OrbitLevel> levels;  // levels[0] is the input
    bool converged = false;
    /// Number of coding levels applied.
    int iterations_used = 0;
    /// True when the orbit was computed through the diagonal polynomial map.
    bool diagonal = false;
};

/// Applies the coding map up to `k_max` times, stopping early once the
/// distance to the identity drops below `tol`. Trace-preserving diagonal
/// inputs use the exact polynomial map; anything else the general map.
/// Divergence is recorded, not thrown.
OrbitRecord iterate(const StabilizerCode &code, const StokesChannel &t0, int k_max = kDefaultMaxLevels,
                    double tol = kDefaultConvergenceTol);
OrbitRecord iterate_diagonal(const DiagonalMapPolynomial &poly, const DiagonalChannel &t0,
                             int k_max = kDefaultMaxLevels, double tol = kDefaultConvergenceTol);

/// A straight line of diagonal channels 1 - eps * direction, anchored at the identity.
class RaySpec {
   public:
    enum class Family { kDepolarizing, kDephasing, kCustom };

    static RaySpec depolarizing();
    static RaySpec dephasing();
    /// Throws std::invalid_argument for a zero direction.
    static RaySpec custom(const std::array<double, 3> &direction);
    /// "depol", "deph", or "x,y,z" for a custom direction.
    static RaySpec parse(const std::string &text);

    Family family() const {
        return family_;
    }
    const std::array<double, 3> &direction() const {
        return direction_;
    }
    DiagonalChannel at(double eps) const {
        return {1 - eps * direction_[0], 1 - eps * direction_[1], 1 - eps * direction_[2]};
    }
    std::string name() const;

   private:
    RaySpec(Family f, const std::array<double, 3> &d) : family_(f), direction_(d) {
    }
    Family family_;
    std::array<double, 3> direction_;
};

struct FixedPoints {
    std::vector<double> roots;  // ascending
    /// poly(t) == t identically; every point is fixed.
    bool degenerate = false;

    /// Largest root strictly below `below` (by more than 1e-9).
    std::optional<double> next_below(double below = 1.0) const;
};

/// Real roots of poly(t) - t in [lo, hi]: sign-change scan with `step`, then
/// bisection down to an interval of width `tol`. Grid points where the
/// difference is exactly zero are reported as roots.
FixedPoints fixed_points_1d(const UniPolynomial &poly, double lo = -1, double hi = 1, double tol = 1e-12,
                            double step = 1e-3);

struct ThresholdOptions {
    double tol_eps = 1e-6;
    double tol_conv = kDefaultConvergenceTol;
    int k_max = kDefaultMaxLevels;
};

/// Largest eps in [0, 1] (to tol_eps, never overstated) whose orbit along
/// `ray` reaches the identity.
double threshold(const StabilizerCode &code, const RaySpec &ray, const ThresholdOptions &opts = {});
double threshold(const DiagonalMapPolynomial &poly, const RaySpec &ray, const ThresholdOptions &opts = {});

/// One-variable reduction of the map along `ray`, when one exists: the common
/// diagonal restriction when all three components agree on x = y = z
/// (depolarizing ray), otherwise a component depending only on its own
/// variable that the ray moves. `scale` is the direction entry of that variable.
struct RayReduction {
    UniPolynomial poly;
    std::size_t component = 0;
    double scale = 1;
};
std::optional<RayReduction> reduce_along_ray(const DiagonalMapPolynomial &poly, const RaySpec &ray);

using Matrix3 = std::array<std::array<double, 3>, 3>;

/// Central-difference Jacobian J[s][v] = d(out_s)/d(in_v) of the diagonal-reduced map.
Matrix3 jacobian_fd(const StabilizerCode &code, const DiagonalChannel &at, double h = 1e-5);
Matrix3 jacobian_fd(const DiagonalMapPolynomial &poly, const DiagonalChannel &at, double h = 1e-5);
/// Exact gradient of the polynomial components, evaluated in double.
Matrix3 jacobian_analytic(const DiagonalMapPolynomial &poly, const DiagonalChannel &at);

/// Central-difference Jacobian of the full 16-entry coding map, row-major over
/// output entries. Exposed for experiments; nothing is asserted about it.
std::array<std::array<double, 16>, 16> jacobian_fd_full(const StabilizerCode &code, const StokesChannel &at,
                                                        double h = 1e-5);

/// Closed form (1/alpha) (alpha eps0)^(2^k) of eps_{k+1} = alpha eps_k^2.
/// Overflow yields +infinity.
double error_series(double alpha, double eps0, int k);

/// (1 - sqrt(2/3))^-1: the five-qubit diagonal constant used with c_N = 64.
double five_qubit_closed_form_c_m();

struct BoundReport {
    Rational c_n;
    double c_m = 0;
    /// Grid constant from c_constants, reported even when c_m is the closed form.
    double c_m_operational = 0;
    /// c_m is the five-qubit closed form rather than the grid constant.
    bool c_m_closed_form = false;
    double bound = 0;  // (c_N + c_M)^-1
    /// bound >= 0.014; only asserted for the five-qubit code.
    bool meets_0_014 = false;
    /// d < 3 or w < 2.
    bool warning = false;
};

BoundReport general_bound_check(const StabilizerCode &code, std::uint64_t seed = 0);

}  // namespace cmap

#endif
