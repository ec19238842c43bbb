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

#include "hwalk/genfun/lagrange.h"

#include "gtest/gtest.h"
#include "hwalk/errors.h"
#include "hwalk/genfun/generating.h"
#include "test_util.h"

using namespace hwalk;

namespace {

RationalSeries exp_series(int order) { return series_exp(RationalSeries::variable(order)); }

}  // namespace

TEST(lagrange, tree_function) {
    const int order = 20;
    RationalSeries w = lagrange_invert({exp_series(order), RationalSeries::variable(order), order});
    ASSERT_EQ(w.rational_coeff(0), 0);
    for (long n = 1; n <= order; ++n) {
        ASSERT_EQ(w.rational_coeff(static_cast<int>(n)),
                  Rational(pow(Rational(n), n - 1) / Rational(factorial(n))))
            << n;
    }
}

TEST(lagrange, tree_function_squared) {
    const int order = 20;
    RationalSeries z = RationalSeries::variable(order);
    RationalSeries w2 = lagrange_invert({exp_series(order), z * z, order});
    ASSERT_EQ(w2.rational_coeff(1), 0);
    for (long n = 2; n <= order; ++n) {
        ASSERT_EQ(w2.rational_coeff(static_cast<int>(n)),
                  2 * Rational(pow(Rational(n), n - 3) / Rational(factorial(n - 2))))
            << n;
    }
    RationalSeries w = lagrange_invert({exp_series(order), z, order});
    ASSERT_EQ(w2, w * w);
}

TEST(lagrange, trivial_phi) {
    RationalSeries w = lagrange_invert({RationalSeries::constant(Sqrt2Scalar(1), 6),
                                        RationalSeries::variable(6), 6});
    ASSERT_EQ(w, RationalSeries::variable(6));
}

TEST(lagrange, invalid_problem) {
    try {
        lagrange_invert({RationalSeries::variable(4), RationalSeries::variable(4), 4});
        FAIL() << "expected RingError";
    } catch (const RingError& e) {
        ASSERT_STREQ(e.what(), "not a valid inversion problem");
    }
}

TEST(lagrange, defining_equation_randomized) {
    auto rng = hwalk::testutil::seeded_rng(5);
    for (int i = 0; i < 100; ++i) {
        const int order = 1 + static_cast<int>(rng() % 12);
        RationalSeries phi = hwalk::testutil::random_series(rng, order, true);
        RationalSeries w = lagrange_invert({phi, RationalSeries::variable(order), order});
        ASSERT_EQ(compose(phi, w).shifted(1), w);
    }
}

TEST(srivastava_singhal, zero_parameters) {
    RationalSeries s = srivastava_singhal_series({0, 0, 0, 0, 40});
    ASSERT_EQ(s, jacobi_generating(Rational(0), 0, 0, 40));
    ASSERT_EQ(s, series_reciprocal(series_sqrt(RationalSeries({Rational(1), 0, Rational(1)}, 40))));
}

TEST(srivastava_singhal, u_leading_term_and_equation) {
    const SrivastavaSinghalSpec spec{make_rational(1, 2), Rational(2), Rational(1), make_rational(-1, 3), 12};
    RationalSeries u = srivastava_singhal_u(spec);
    ASSERT_EQ(u.rational_coeff(0), 0);
    ASSERT_EQ(u.rational_coeff(1), make_rational(-1, 2));
    const RationalSeries one = RationalSeries::constant(Sqrt2Scalar(1), 12);
    RationalSeries rhs = Sqrt2Scalar(make_rational(1, 2)) *
                         (series_pow(one - u, Rational(1 + spec.a)) * series_pow(one + u, Rational(1 + spec.b)))
                             .shifted(1);
    ASSERT_EQ(-u, rhs);
    ASSERT_EQ(srivastava_singhal_series({0, 0, 0, 0, 0}).rational_coeff(0), 1);
}

TEST(srivastava_singhal, integer_parameters_match_jacobi) {
    for (long a = -1; a <= 2; ++a) {
        for (long b = -1; b <= 2; ++b) {
            for (long g = 0; g <= 2; ++g) {
                for (long be = 0; be <= 2; ++be) {
                    const SrivastavaSinghalSpec spec{a, b, g, be, 16};
                    ASSERT_EQ(srivastava_singhal_series(spec), srivastava_singhal_jacobi_sum(spec))
                        << a << b << g << be;
                }
            }
        }
    }
    ASSERT_THROW(srivastava_singhal_jacobi_sum({make_rational(1, 2), 0, 0, 0, 3}), DomainError);
    ASSERT_THROW(srivastava_singhal_series({0, 0, 0, 0, -1}), DomainError);
}
