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

#include "hwalk/exact/number.h"

#include <cmath>

#include "gtest/gtest.h"

using namespace hwalk;

TEST(number, binomial_nonnegative_top) {
    ASSERT_EQ(binomial(5, 2), 10);
    ASSERT_EQ(binomial(5, 0), 1);
    ASSERT_EQ(binomial(5, 6), 0);
    ASSERT_EQ(binomial(5, -1), 0);
    ASSERT_EQ(binomial(40, 20), Integer("137846528820"));
}

TEST(number, binomial_negative_top) {
    // C(-1, k) = (-1)^k, C(-3, 2) = 6
    for (long k = 0; k < 8; ++k) ASSERT_EQ(binomial(-1, k), sign_pow(k));
    ASSERT_EQ(binomial(-3, 2), 6);
    ASSERT_EQ(binomial(-3, 3), -10);
}

TEST(number, binomial_rational_top) {
    // C(1/2, 2) = (1/2)(-1/2)/2 = -1/8
    ASSERT_EQ(binomial(make_rational(1, 2), 2), make_rational(-1, 8));
    ASSERT_EQ(binomial(make_rational(1, 2), 0), 1);
}

TEST(number, pow2_and_pow) {
    ASSERT_EQ(pow2(10), 1024);
    ASSERT_EQ(pow2(-3), make_rational(1, 8));
    ASSERT_EQ(pow(make_rational(-2, 3), 3), make_rational(-8, 27));
    ASSERT_EQ(pow(make_rational(2, 3), -2), make_rational(9, 4));
}

TEST(number, canonical_form) {
    Rational q = make_rational(6, -4);
    ASSERT_EQ(q.get_num(), -3);
    ASSERT_EQ(q.get_den(), 2);
}

TEST(number, rational_sqrt) {
    Rational r;
    ASSERT_TRUE(rational_sqrt(make_rational(9, 4), &r));
    ASSERT_EQ(r, make_rational(3, 2));
    ASSERT_FALSE(rational_sqrt(Rational(2), &r));
    ASSERT_FALSE(rational_sqrt(Rational(-4), &r));
}

TEST(number, to_double_huge) {
    Rational big = pow2(3000) / (pow2(3000) + 1);
    ASSERT_NEAR(to_double(big), 1.0, 1e-15);
    ASSERT_EQ(ldexp_integer(Integer(3), -1), 1.5);
    ASSERT_NEAR(to_double(make_rational(1, 3)), 1.0 / 3.0, 1e-17);
}
