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

#include "hwalk/walk/fourier.h"

#include <cmath>

#include "gtest/gtest.h"
#include "hwalk/errors.h"
#include "test_util.h"

using namespace hwalk;

TEST(fourier, one_step) {
    ApproxWalkState a = fourier_evolve(1, 8);
    ASSERT_NEAR(a.right_at(1).real(), 0.70710678118654752, 1e-12);
    ASSERT_NEAR(a.left_at(-1).real(), 0.70710678118654752, 1e-12);
    ASSERT_NEAR(std::abs(a.right_at(-1)), 0.0, 1e-12);
}

TEST(fourier, time_zero) {
    ApproxWalkState a = fourier_evolve(0, 2);
    ASSERT_NEAR(a.left_at(0).real(), 1.0, 1e-15);
    ASSERT_NEAR(std::abs(a.right_at(0)), 0.0, 1e-15);
}

TEST(fourier, matches_exact_at_100) {
    WalkState s = evolve(initial_state(), 100);
    ASSERT_LT(max_abs_deviation(fourier_evolve(100, 512), s), 1e-10);
    for (int t : {2, 7, 31}) {
        ASSERT_LT(max_abs_deviation(fourier_evolve(t, 4 * t), evolve(initial_state(), t)), 1e-12);
    }
}

TEST(fourier, aliasing_rejected) {
    ASSERT_THROW(fourier_evolve(10, 38), AliasingError);
    ASSERT_THROW(fourier_evolve(10, 41), AliasingError);
    ASSERT_NO_THROW(fourier_evolve(10, 40));
}

TEST(fourier, coin_eigenvalues) {
    auto rng = testutil::seeded_rng(4);
    std::uniform_real_distribution<double> ud(-M_PI, M_PI);
    for (int i = 0; i < 1000; ++i) {
        const double theta = ud(rng);
        const Complex w = std::asin(std::sin(theta) / std::sqrt(2.0));
        const Complex e1 = std::exp(Complex(0, -1) * w);
        const Complex e2 = -std::exp(Complex(0, 1) * w);
        auto ev = CoinMatrix::at(theta).eigenvalues();
        const double direct = std::abs(ev[0] - e1) + std::abs(ev[1] - e2);
        const double swapped = std::abs(ev[0] - e2) + std::abs(ev[1] - e1);
        ASSERT_LT(std::min(direct, swapped), 1e-12) << theta;
    }
}
