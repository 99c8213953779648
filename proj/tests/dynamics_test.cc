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

#include "cmap/dynamics.h"
#include "test_oracles.h"

namespace cmap {
namespace {

const double kSqrt23 = std::sqrt(2.0 / 3.0);

UniPolynomial f_1d() {
    return UniPolynomial({Rational(0), Rational(0), Rational(0), Rational(5, 2), Rational(0), Rational(-3, 2)});
}

TEST(Iterate, FiveQubitDepolarizingConverges) {
    const auto &code = builtin_code("five-qubit");
    auto orbit = iterate(code, depolarizing(0.1));
    EXPECT_TRUE(orbit.converged);
    EXPECT_TRUE(orbit.diagonal);
    EXPECT_EQ(orbit.levels.front().k, 0);
    EXPECT_EQ(orbit.levels.front().state, StokesChannel(depolarizing(0.1)));
    EXPECT_EQ(orbit.iterations_used + 1, static_cast<int>(orbit.levels.size()));
    auto bound = general_bound_check(code);
    const double c = to_double(bound.c_n) + bound.c_m;
    for (const auto &level : orbit.levels) {
        EXPECT_GE(level.distance, 0);
        EXPECT_LE(level.distance, std::pow(c * 0.1, std::ldexp(1.0, level.k)) / c);
    }
    // Against the unrolled one-dimensional recursion.
    auto f = f_1d();
    double v = 0.9;
    for (const auto &level : orbit.levels) {
        EXPECT_NEAR(level.state(1, 1), v, 1e-15);
        v = f(v);
    }
}

TEST(Iterate, IdentityConvergesAtLevelZero) {
    for (const auto &name : builtin_code_names()) {
        auto orbit = iterate(builtin_code(name), StokesChannel::identity());
        EXPECT_TRUE(orbit.converged);
        EXPECT_EQ(orbit.iterations_used, 0);
        EXPECT_EQ(orbit.levels.size(), 1u);
    }
}

TEST(Iterate, OutsideBasinDoesNotConverge) {
    auto orbit = iterate(builtin_code("five-qubit"), depolarizing(0.5));
    EXPECT_FALSE(orbit.converged);
    EXPECT_EQ(orbit.iterations_used, kDefaultMaxLevels);
    EXPECT_LT(orbit.levels.back().state(1, 1), 1e-6);
}

TEST(Iterate, DivergenceStopsAtNonFinite) {
    auto orbit = iterate(builtin_code("five-qubit"), DiagonalChannel{3, 3, 3});
    EXPECT_FALSE(orbit.converged);
    EXPECT_LT(orbit.iterations_used, kDefaultMaxLevels);
    EXPECT_FALSE(std::isfinite(orbit.levels.back().distance));
}

TEST(Iterate, GeneralChannelUsesFullMap) {
    std::mt19937_64 rng(41);
    StokesChannel t = StokesChannel::identity();
    std::uniform_real_distribution<double> u(-0.02, 0.02);
    for (std::size_t r = 1; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) {
            t(r, c) += u(rng);
        }
    }
    const auto &code = builtin_code("five-qubit");
    auto orbit = iterate(code, t, 10, 1e-12);
    EXPECT_FALSE(orbit.diagonal);
    EXPECT_TRUE(orbit.converged);
    EXPECT_EQ(orbit.levels[1].state, general_map(code, t));
}

TEST(Iterate, DephasingRayThirdComponentFollows) {
    // For Pauli channels y >= x + z - 1, so x, z -> 1 forces y -> 1.
    auto orbit = iterate(builtin_code("shor"), dephasing(0.2));
    ASSERT_TRUE(orbit.converged);
    for (const auto &level : orbit.levels) {
        auto d = level.state.diagonal();
        EXPECT_EQ(d.x, 1.0);
        EXPECT_GE(d.y, d.x + d.z - 1 - 1e-12);
        EXPECT_TRUE(in_tetrahedron(d));
    }
}

TEST(FixedPoints, FiveQubitLine) {
    auto fp = fixed_points_1d(f_1d(), 0, 1);
    ASSERT_EQ(fp.roots.size(), 3u);
    EXPECT_EQ(fp.roots[0], 0);
    EXPECT_NEAR(fp.roots[1], kSqrt23, 1e-12);
    EXPECT_EQ(fp.roots[2], 1);
    EXPECT_NEAR(*fp.next_below(1.0), kSqrt23, 1e-12);
    auto full = fixed_points_1d(f_1d());
    EXPECT_EQ(full.roots.size(), 5u);
    EXPECT_FALSE(full.degenerate);
}

TEST(FixedPoints, ShorH) {
    auto h = testing::shor_h().restrict_to(2);
    auto fp = fixed_points_1d(h);
    auto r = fp.next_below(1.0);
    ASSERT_TRUE(r.has_value());
    EXPECT_LT(*r, 0.73);
    EXPECT_NEAR(h(*r), *r, 1e-11);
}

TEST(FixedPoints, IdentityIsDegenerate) {
    auto fp = fixed_points_1d(UniPolynomial::identity());
    EXPECT_TRUE(fp.degenerate);
    EXPECT_TRUE(fp.roots.empty());
}

TEST(Threshold, FiveQubitDepolarizing) {
    const auto &code = builtin_code("five-qubit");
    double t = threshold(code, RaySpec::depolarizing());
    EXPECT_NEAR(t, 1 - kSqrt23, 1e-5);
    EXPECT_GT(t, 0.18);
    EXPECT_TRUE(iterate(code, depolarizing(t)).converged);
    auto red = reduce_along_ray(diagonal_map(code), RaySpec::depolarizing());
    ASSERT_TRUE(red.has_value());
    EXPECT_EQ(red->poly, f_1d());
    EXPECT_NEAR(t, 1 - *fixed_points_1d(red->poly).next_below(1.0), 1e-5);
}

TEST(Threshold, ShorDephasing) {
    const auto &code = builtin_code("shor");
    double t = threshold(code, RaySpec::dephasing());
    EXPECT_GE(t, 0.27);
    auto red = reduce_along_ray(diagonal_map(code), RaySpec::dephasing());
    ASSERT_TRUE(red.has_value());
    EXPECT_EQ(red->component, 2u);
    EXPECT_NEAR(t, 1 - *fixed_points_1d(red->poly).next_below(1.0), 1e-5);
}

TEST(Threshold, BitflipHasNone) {
    EXPECT_EQ(threshold(builtin_code("bitflip3"), RaySpec::depolarizing()), 0);
}

TEST(Threshold, CustomRayBetweenFamilies) {
    const auto &code = builtin_code("five-qubit");
    double depol = threshold(code, RaySpec::depolarizing());
    double mixed = threshold(code, RaySpec::custom({0.5, 1, 1}));
    EXPECT_GE(mixed, depol - 1e-6);
}

TEST(RaySpecs, ParseAndValidate) {
    EXPECT_EQ(RaySpec::parse("depol").family(), RaySpec::Family::kDepolarizing);
    EXPECT_EQ(RaySpec::parse("deph").direction(), (std::array<double, 3>{0, 1, 1}));
    auto custom = RaySpec::parse("0.5,1,0");
    EXPECT_EQ(custom.family(), RaySpec::Family::kCustom);
    EXPECT_EQ(custom.at(0.2), (DiagonalChannel{0.9, 0.8, 1}));
    EXPECT_THROW(RaySpec::parse("0,0,0"), std::invalid_argument);
    EXPECT_THROW(RaySpec::custom({0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(RaySpec::parse("sideways"), std::invalid_argument);
    EXPECT_THROW(RaySpec::parse("1,2"), std::invalid_argument);
}

TEST(Jacobian, VanishesForCorrectingCodes) {
    for (const char *name : {"five-qubit", "steane", "shor"}) {
        auto j = jacobian_fd(builtin_code(name), DiagonalChannel{1, 1, 1});
        for (const auto &row : j) {
            for (double v : row) {
                EXPECT_LE(std::abs(v), 1e-8) << name;
            }
        }
    }
}

TEST(Jacobian, BitflipXDirection) {
    auto j = jacobian_fd(builtin_code("bitflip3"), DiagonalChannel{1, 1, 1});
    EXPECT_NEAR(j[0][0], 3, 1e-6);
}

TEST(Jacobian, FiniteDifferenceMatchesAnalytic) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-0.9, 0.9);
    for (const auto &name : builtin_code_names()) {
        auto poly = diagonal_map(builtin_code(name));
        for (int trial = 0; trial < 5; trial++) {
            DiagonalChannel at{u(rng), u(rng), u(rng)};
            auto fd = jacobian_fd(poly, at);
            auto exact = jacobian_analytic(poly, at);
            for (std::size_t r = 0; r < 3; r++) {
                for (std::size_t c = 0; c < 3; c++) {
                    EXPECT_NEAR(fd[r][c], exact[r][c], 1e-6) << name;
                }
            }
        }
    }
}

TEST(Jacobian, FullSpaceHookIsFinite) {
    auto j = jacobian_fd_full(builtin_code("five-qubit"), StokesChannel::identity());
    for (const auto &row : j) {
        for (double v : row) {
            EXPECT_TRUE(std::isfinite(v));
        }
    }
}

TEST(ErrorSeries, Examples) {
    EXPECT_DOUBLE_EQ(error_series(1, 0.5, 3), 0.00390625);
    EXPECT_EQ(error_series(2, 0.3, 0), 0.3);
    for (int k = 0; k < 8; k++) {
        EXPECT_DOUBLE_EQ(error_series(4, 0.25, k), 0.25);
    }
    EXPECT_TRUE(std::isinf(error_series(10, 0.5, 12)));
}

TEST(ErrorSeries, MatchesUnrolledRecursion) {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> alpha(0.1, 100), eps(0.0, 1.0);
    std::uniform_int_distribution<int> kk(0, 6);
    for (int trial = 0; trial < 20; trial++) {
        double a = alpha(rng), e0 = eps(rng) / a;
        int k = kk(rng);
        double e = e0;
        for (int i = 0; i < k; i++) {
            e = a * e * e;
        }
        EXPECT_NEAR(error_series(a, e0, k), e, 1e-13 * std::max(1.0, std::abs(e)));
    }
}

TEST(Bound, FiveQubitClosedForm) {
    auto r = general_bound_check(builtin_code("five-qubit"));
    EXPECT_EQ(r.c_n, Rational(64));
    EXPECT_TRUE(r.c_m_closed_form);
    EXPECT_NEAR(r.c_m, 1 / (1 - kSqrt23), 1e-12);
    EXPECT_NEAR(r.bound, 1 / (64 + 1 / (1 - kSqrt23)), 1e-15);
    EXPECT_GE(r.bound, 0.014);
    EXPECT_TRUE(r.meets_0_014);
    EXPECT_FALSE(r.warning);
    EXPECT_GT(r.c_m_operational, 0);
}

TEST(Bound, OtherCodesReportOperationalConstant) {
    auto steane = general_bound_check(builtin_code("steane"));
    EXPECT_FALSE(steane.c_m_closed_form);
    EXPECT_EQ(steane.c_m, steane.c_m_operational);
    EXPECT_NEAR(steane.bound, 1 / (to_double(steane.c_n) + steane.c_m), 1e-15);
    auto five = general_bound_check(builtin_code("five-qubit"));
    EXPECT_GT(steane.c_n, five.c_n);
    EXPECT_LT(steane.bound, five.bound);
    EXPECT_TRUE(general_bound_check(builtin_code("bitflip3")).warning);
}

}  // namespace
}  // namespace cmap
