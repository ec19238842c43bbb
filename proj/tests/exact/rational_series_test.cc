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

#include "hwalk/exact/rational_series.h"

#include <sstream>

#include "gtest/gtest.h"
#include "hwalk/errors.h"
#include "test_util.h"

using namespace hwalk;

namespace {

RationalSeries series(std::vector<long> c, int order) {
    std::vector<Rational> q;
    for (long x : c) q.emplace_back(x);
    return RationalSeries(std::move(q), order);
}

}  // namespace

TEST(rational_series, sqrt_one_plus_z_squared) {
    RationalSeries s = series({1, 0, 1}, 4);
    RationalSeries r = series_sqrt(s);
    RationalSeries expected({Rational(1), Rational(0), make_rational(1, 2), Rational(0),
                             make_rational(-1, 8)},
                            4);
    ASSERT_EQ(r, expected);
    ASSERT_EQ(r * r, s);
}

TEST(rational_series, sqrt_constants) {
    ASSERT_EQ(series_sqrt(series({1}, 6)), series({1}, 6));
    ASSERT_EQ(series_sqrt(series({4, 0}, 1)), series({2}, 1));
    RationalSeries two = series_sqrt(series({2}, 3));
    ASSERT_EQ(two.sqrt2_power(), 1);
    ASSERT_EQ(two.coeff(0), Sqrt2Scalar(Rational(1), 1));
}

TEST(rational_series, sqrt_not_in_ring) {
    try {
        series_sqrt(series({3, 1}, 3));
        FAIL() << "expected RingError";
    } catch (const RingError& e) {
        ASSERT_STREQ(e.what(), "series has no square root in ring");
    }
    ASSERT_THROW(series_sqrt(series({-1}, 2)), RingError);
}

TEST(rational_series, reciprocal_examples) {
    ASSERT_EQ(series_reciprocal(series({1, -1}, 3)), series({1, 1, 1, 1}, 3));
    ASSERT_EQ(series_reciprocal(series({2}, 0)), RationalSeries({make_rational(1, 2)}, 0));
    RationalSeries s = series({1, 0, 1}, 4);
    RationalSeries inv = series_reciprocal(s);
    ASSERT_EQ(inv, series({1, 0, -1, 0, 1}, 4));
    ASSERT_EQ(s * inv, series({1}, 4));
}

TEST(rational_series, reciprocal_not_invertible) {
    try {
        series_reciprocal(series({0, 1}, 3));
        FAIL() << "expected RingError";
    } catch (const RingError& e) {
        ASSERT_STREQ(e.what(), "series not invertible");
    }
}

TEST(rational_series, reciprocal_with_sqrt2_factor) {
    RationalSeries s = Sqrt2Scalar::sqrt2_power(1) * series({1, 1}, 3);
    RationalSeries inv = series_reciprocal(s);
    ASSERT_EQ(inv.sqrt2_power(), 1);
    ASSERT_EQ(s * inv, series({1}, 3));
}

TEST(rational_series, order_mismatch) {
    ASSERT_THROW({ (void)(series({1, 1}, 2) + series({1}, 3)); }, OrderMismatchError);
    ASSERT_THROW({ (void)(series({1, 1}, 2) * series({1}, 3)); }, OrderMismatchError);
    ASSERT_THROW(series({1, 2, 3}, 1), OrderMismatchError);
    ASSERT_EQ(series({1, 2, 3}, 2).truncated(1), series({1, 2}, 1));
}

TEST(rational_series, ring_parity) {
    RationalSeries a = Sqrt2Scalar::sqrt2_power(1) * series({1}, 2);
    ASSERT_THROW({ (void)(a + series({1}, 2)); }, RingError);
    ASSERT_EQ((a * a), series({2}, 2));
    ASSERT_EQ(RationalSeries({Rational(3)}, 2, 2), series({6}, 2));
}

TEST(rational_series, from_scalars) {
    RationalSeries s = RationalSeries::from_scalars(
        {Sqrt2Scalar(0), Sqrt2Scalar(Rational(1), 1), Sqrt2Scalar(Rational(2), 1)}, 3);
    ASSERT_EQ(s.sqrt2_power(), 1);
    ASSERT_EQ(s.coeff(2), Sqrt2Scalar(Rational(2), 1));
    ASSERT_EQ(s.coeff(3), Sqrt2Scalar(0));
    ASSERT_THROW(RationalSeries::from_scalars({Sqrt2Scalar(1), Sqrt2Scalar(Rational(1), 1)}, 2),
                 RingError);
}

TEST(rational_series, powers_exp_compose) {
    RationalSeries z = RationalSeries::variable(5);
    RationalSeries one_plus = series({1, 1}, 5);
    // (1+z)^(1/2) squared, (1+z)^-2 against integer power
    RationalSeries half = series_pow(one_plus, make_rational(1, 2));
    ASSERT_EQ(half * half, one_plus);
    ASSERT_EQ(series_pow(one_plus, Rational(-2)), series_pow(one_plus, -2L));
    ASSERT_EQ(series_pow(one_plus, 3L), series({1, 3, 3, 1}, 5));
    // exp(z) = sum z^k / k!
    RationalSeries e = series_exp(z);
    for (int k = 0; k <= 5; ++k) ASSERT_EQ(e.rational_coeff(k), Rational(1) / Rational(factorial(k)));
    // exp(2z) = exp(z)^2 and compose(exp, 2z) = exp(2z)
    ASSERT_EQ(series_exp(Sqrt2Scalar(2) * z), e * e);
    ASSERT_EQ(compose(e - series({1}, 5), Sqrt2Scalar(2) * z), e * e - series({1}, 5));
    ASSERT_THROW(compose(e, one_plus), RingError);
    ASSERT_THROW(series_exp(one_plus), RingError);
}

TEST(rational_series, derivative_shift_evaluate) {
    RationalSeries s = series({1, 2, 3}, 2);
    ASSERT_EQ(s.derivative(), series({2, 6}, 1));
    ASSERT_EQ(s.shifted(1), series({0, 1, 2}, 2));
    ASSERT_DOUBLE_EQ(s.evaluate(0.5), 1 + 1 + 0.75);
    ASSERT_EQ(first_difference(s, s), std::nullopt);
    ASSERT_EQ(first_difference(s, series({1, 2, 4}, 2)), 2);
    std::ostringstream os;
    os << s;
    ASSERT_EQ(os.str(), "1 + 2*z^1 + 3*z^2 + O(z^3)");
}

TEST(rational_series, ring_laws_randomized) {
    auto rng = testutil::seeded_rng(2);
    for (int i = 0; i < 200; ++i) {
        const int order = 1 + static_cast<int>(rng() % 10);
        RationalSeries a = testutil::random_series(rng, order);
        RationalSeries b = testutil::random_series(rng, order);
        RationalSeries c = testutil::random_series(rng, order);
        ASSERT_EQ((a + b) * c, a * c + b * c);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a - a, RationalSeries(order));
    }
}

TEST(rational_series, sqrt_squares_back_randomized) {
    auto rng = testutil::seeded_rng(3);
    for (int i = 0; i < 1000; ++i) {
        const int order = static_cast<int>(rng() % 13);
        RationalSeries s = testutil::random_series(rng, order, true);
        RationalSeries r = series_sqrt(s);
        ASSERT_EQ(r * r, s);
        ASSERT_EQ(s * series_reciprocal(s), series({1}, order));
    }
}
