// Copyright 2026 The hwalk Authors
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

#include "hwalk/asymptotics/phase.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "hwalk/errors.h"
#include "hwalk/walk/walk_state.h"
#include "test_util.h"

using namespace hwalk;

namespace {

constexpr double kPi = std::numbers::pi;
using CLD = std::complex<long double>;

// Five-point central stencils at step h in extended precision.
CLD d1(long double alpha, CLD th, long double h) {
    auto f = [&](CLD x) { return omega(x) - x * alpha; };
    return (f(th - 2.0L * h) - 8.0L * f(th - h) + 8.0L * f(th + h) - f(th + 2.0L * h)) / (12.0L * h);
}

CLD d2(CLD th, long double h) {
    auto f = [](CLD x) { return omega(x); };
    return (-f(th + 2.0L * h) + 16.0L * f(th + h) - 30.0L * f(th) + 16.0L * f(th - h) -
            f(th - 2.0L * h)) /
           (12.0L * h * h);
}

}  // namespace

TEST(omega, named_values) {
    ASSERT_EQ(omega(Complex(0.0, 0.0)), Complex(0.0, 0.0));
    ASSERT_NEAR(std::abs(omega(Complex(kPi / 2, 0.0)) - Complex(kPi / 4, 0.0)), 0.0, 1e-15);
    const Complex w = omega(Complex(0.0, std::asinh(std::sqrt(2.0))));
    ASSERT_NEAR(std::abs(w - Complex(0.0, std::log(1.0 + std::sqrt(2.0)))), 0.0, 1e-15);
}

TEST(omega, defining_relation_randomized) {
    auto rng = hwalk::testutil::seeded_rng(6);
    std::uniform_real_distribution<double> ud(-kPi, kPi), vd(-3.0, 3.0);
    int checked = 0;
    while (checked < 10000) {
        const Complex th(ud(rng), vd(rng));
        Complex w;
        try {
            w = omega(th);
        } catch (const BranchCutError&) {
            continue;
        }
        ASSERT_LT(std::abs(std::sin(w) - std::sin(th) / std::sqrt(2.0)), 1e-13) << th;
        ++checked;
    }
}

TEST(omega, real_axis_is_real_and_odd) {
    for (int i = 0; i <= 200; ++i) {
        const double u = -kPi + 2 * kPi * i / 200;
        const Complex w = omega(Complex(u, 0.0));
        ASSERT_EQ(w.imag(), 0.0);
        ASSERT_NEAR(w.real(), -omega(Complex(-u, 0.0)).real(), 1e-15);
    }
}

TEST(omega, axis_and_edge_values) {
    for (double v : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        const double a = std::asinh(std::sinh(v) / std::sqrt(2.0));
        ASSERT_NEAR(std::abs(omega(Complex(0.0, v)) - Complex(0.0, a)), 0.0, 1e-14);
        ASSERT_NEAR(std::abs(omega(Complex(kPi, v)) - Complex(0.0, -a)), 0.0, 1e-11);
        ASSERT_NEAR(std::abs(omega(Complex(-kPi, v)) - Complex(0.0, -a)), 0.0, 1e-11);
    }
    // both sides of the cut Re theta = pi/2 above the branch point
    for (double v : {1.0, 1.5, 3.0}) {
        const double c = std::cosh(v) / std::sqrt(2.0);
        const double mag = std::log(c + std::sqrt(c * c - 1.0));
        const Complex left = omega(Complex(kPi / 2 - 1e-9, v));
        const Complex right = omega(Complex(kPi / 2 + 1e-9, v));
        ASSERT_NEAR(left.real(), kPi / 2, 1e-6);
        ASSERT_NEAR(right.real(), kPi / 2, 1e-6);
        ASSERT_NEAR(std::abs(left.imag()), mag, 1e-6);
        ASSERT_NEAR(left.imag(), -right.imag(), 1e-6);
    }
}

TEST(omega, branch_cuts_and_periodicity) {
    ASSERT_THROW(omega(Complex(kPi / 2, 1.0)), BranchCutError);
    ASSERT_THROW(omega(Complex(-kPi / 2, -2.0)), BranchCutError);
    ASSERT_THROW(omega(Complex(kPi / 2, kBranchHeight)), BranchCutError);
    ASSERT_NO_THROW(omega(Complex(kPi / 2, 0.8)));
    const Complex th(0.3, 0.4);
    ASSERT_NEAR(std::abs(omega(th + 2 * kPi) - omega(th)), 0.0, 1e-14);
    ASSERT_NEAR(std::abs(omega(th - 4 * kPi) - omega(th)), 0.0, 1e-14);
}

TEST(growth, large_v_rates) {
    GrowthCheck in = growth_check(0.0, 20.0, 1);
    ASSERT_NEAR(in.reference, std::exp(20.0) / std::sqrt(2.0), 1e-6 * in.reference);
    ASSERT_TRUE(in.within(2.0));
    GrowthCheck out = growth_check(kPi, 20.0, 1);
    ASSERT_TRUE(out.within(2.0));
    GrowthCheck cube = growth_check(0.0, 20.0, 3);
    ASSERT_LT(cube.magnitude / std::pow(in.magnitude, 3), 8.0);
    ASSERT_GT(cube.magnitude / std::pow(in.magnitude, 3), 1.0 / 8.0);
    for (double u : {0.3, -1.2, 2.0, -3.0}) ASSERT_TRUE(growth_check(u, 12.0, 4).within(4.0)) << u;
    ASSERT_THROW(growth_check(kPi / 2 + 1e-7, 20.0, 1), DomainError);
    ASSERT_THROW(growth_check(0.0, 5.0, 1), DomainError);
}

TEST(saddle, locations) {
    SaddleData s0 = saddle(0.0);
    ASSERT_NEAR(s0.theta_alpha.real(), kPi / 2, 1e-15);
    ASSERT_FALSE(s0.decay_region);
    SaddleData s8 = saddle(0.8);
    ASSERT_TRUE(s8.decay_region);
    ASSERT_NEAR(s8.theta_alpha.imag(), std::acosh(4.0 / 3.0), 1e-15);
    ASSERT_EQ(s8.theta_alpha.real(), 0.0);
    const Complex e = std::exp(Complex(0, 1) * s8.theta_alpha);
    ASSERT_NEAR(e.real(), 0.6 / (0.8 + std::sqrt(0.28)), 1e-15);
    ASSERT_THROW(saddle(0.7072), ValidityError);
    ASSERT_THROW(saddle(0.9995), ValidityError);
    ASSERT_NO_THROW(saddle(0.7072, 1e-5));
}

TEST(saddle, stationarity_residual) {
    for (int i = 0; i <= 40; ++i) {
        for (double alpha : {-0.69 + 0.0345 * i, 0.71 + 0.00685 * i}) {
            if (std::abs(std::abs(alpha) - 1 / std::sqrt(2.0)) <= 1e-3) continue;
            const SaddleData d = saddle(alpha);
            const CLD th(d.theta_alpha.real(), d.theta_alpha.imag());
            ASSERT_LT(std::abs(d1(alpha, th, 1e-5L)), 1e-12L) << alpha;
        }
    }
}

TEST(saddle, second_derivative) {
    for (double alpha = 0.72; alpha < 0.99; alpha += 0.01) {
        const SaddleData d = saddle(alpha);
        const double s = std::sqrt(2 * alpha * alpha - 1);
        const Complex expected(0.0, -(1 - alpha * alpha) * s);
        ASSERT_LT(std::abs(d.omega_second - expected), 1e-12) << alpha;
        const CLD th(d.theta_alpha.real(), d.theta_alpha.imag());
        const CLD fd = d2(th, 1e-4L);
        ASSERT_LT(std::abs(Complex(static_cast<double>(fd.real()), static_cast<double>(fd.imag())) -
                           expected),
                  1e-10)
            << alpha;
    }
}

TEST(saddle, odd_phase_at_saddle) {
    // omega_theta - theta alpha is odd in theta
    for (double alpha : {0.3, 0.8, 0.95}) {
        const SaddleData d = saddle(alpha);
        const Complex f = omega(d.theta_alpha) - d.theta_alpha * alpha;
        const Complex g = omega(-d.theta_alpha) + d.theta_alpha * alpha;
        ASSERT_LT(std::abs(f + g), 1e-14);
    }
}

TEST(decay_bases, equivalence_grid) {
    for (int i = 0; i <= 270; ++i) {
        const double alpha = 0.72 + 0.001 * i;
        ASSERT_LT(std::abs(btilde(alpha) - b_pathintegral(alpha)), 1e-12) << alpha;
        ASSERT_LT(btilde(alpha), 1.0);
        ASSERT_GT(btilde(alpha), 0.0);
    }
    const double edge = 1 / std::sqrt(2.0) + 1e-8;
    ASSERT_NEAR(btilde(edge), 1.0, 1e-6);
    ASSERT_NEAR(b_pathintegral(edge), 1.0, 1e-6);
    ASSERT_THROW(btilde(0.5), DomainError);
    ASSERT_THROW(b_pathintegral(1.0), DomainError);
    const double s = std::sqrt(0.28);
    ASSERT_NEAR((1 + s) * (1 + s), 2 * (0.64 + s), 1e-15);
}

TEST(asymptotic, decay_region_against_walk) {
    WalkState s = evolve(initial_state(), 200);
    const double exact200 = s.right(160).to_double();
    const auto a200 = psi_asymptotic(160, 200);
    const double err200 = std::abs(a200.first / exact200 - 1);
    ASSERT_LT(err200, 0.1);
    ASSERT_EQ(a200.first > 0, exact200 > 0);
    ASSERT_LT(std::abs(a200.second / s.left(160).to_double() - 1), 0.1);
    s = evolve(s, 200);
    const double err400 = std::abs(psi_asymptotic(320, 400).first / s.right(320).to_double() - 1);
    ASSERT_GE(err400 / err200, 0.3);
    ASSERT_LE(err400 / err200, 0.8);
}

TEST(asymptotic, negative_alpha_and_base) {
    const WalkState s = evolve(initial_state(), 200);
    const auto a = psi_asymptotic(-160, 200);
    ASSERT_LT(std::abs(a.first / s.right(-160).to_double() - 1), 0.1);
    ASSERT_LT(std::abs(a.second / s.left(-160).to_double() - 1), 0.1);
    // the base with 2 sqrt(1-alpha^2) in place of sqrt2 sqrt(1-alpha^2) is off by sqrt2^-t
    const double ratio = std::pow(1 / std::sqrt(2.0), 200);
    ASSERT_GT(std::abs(ratio * psi_asymptotic(160, 200).first / s.right(160).to_double() - 1), 0.99);
    ASSERT_THROW(psi_asymptotic(100, 200), ValidityError);
    ASSERT_THROW(psi_asymptotic(161, 200), DomainError);
}
