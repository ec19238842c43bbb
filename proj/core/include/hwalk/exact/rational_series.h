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

#ifndef HWALK_EXACT_RATIONAL_SERIES_H
#define HWALK_EXACT_RATIONAL_SERIES_H

#include <optional>
#include <ostream>
#include <vector>

#include "hwalk/exact/number.h"
#include "hwalk/exact/sqrt2_scalar.h"

namespace hwalk {

/// Truncated formal power series sqrt(2)^k * sum_{i=0}^{order} c_i z^i with
/// rational c_i.
///
/// The global sqrt(2) factor is normalized to k in {0, 1}, so each
/// coefficient is a Sqrt2Scalar with the same exponent. All arithmetic is
/// exact through `order`. Binary operations require equal orders and throw
/// OrderMismatchError otherwise; truncation only happens through truncated().
class RationalSeries {
   public:
    explicit RationalSeries(int order);
    /// `coeffs.size()` must not exceed order + 1; missing terms are zero.
    RationalSeries(std::vector<Rational> coeffs, int order, long sqrt2_power = 0);

    static RationalSeries constant(const Sqrt2Scalar& c, int order);
    /// c z^power.
    static RationalSeries monomial(const Rational& c, int power, int order);
    /// The series variable z.
    static RationalSeries variable(int order) { return monomial(Rational(1), 1, order); }
    /// Series whose i-th coefficient is the given ring element. All nonzero
    /// entries must share the same sqrt(2) parity.
    static RationalSeries from_scalars(const std::vector<Sqrt2Scalar>& coeffs, int order);

    int order() const { return order_; }
    int sqrt2_power() const { return k_; }
    /// Coefficient of z^i without the global sqrt(2)^k factor.
    const Rational& rational_coeff(int i) const;
    std::vector<Rational> rational_coeffs() const { return c_; }
    /// Coefficient of z^i including the global factor.
    Sqrt2Scalar coeff(int i) const;
    bool is_zero() const;

    RationalSeries truncated(int new_order) const;
    /// Formal derivative; known exactly through order - 1.
    RationalSeries derivative() const;
    /// z^k * this, keeping the order.
    RationalSeries shifted(int k) const;

    RationalSeries operator-() const;
    RationalSeries& operator+=(const RationalSeries& o);
    RationalSeries& operator-=(const RationalSeries& o);
    RationalSeries& operator*=(const RationalSeries& o);
    RationalSeries& operator*=(const Sqrt2Scalar& s);

    friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
    friend RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
    friend RationalSeries operator*(RationalSeries a, const RationalSeries& b) { return a *= b; }
    friend RationalSeries operator*(RationalSeries a, const Sqrt2Scalar& s) { return a *= s; }
    friend RationalSeries operator*(const Sqrt2Scalar& s, RationalSeries a) { return a *= s; }
    friend bool operator==(const RationalSeries& a, const RationalSeries& b);
    friend bool operator!=(const RationalSeries& a, const RationalSeries& b) { return !(a == b); }

    /// Numeric value of the truncated polynomial at z.
    double evaluate(double z) const;

   private:
    void normalize_zero();

    std::vector<Rational> c_;
    int order_;
    int k_ = 0;
};

/// Index of the first coefficient where a and b differ, or nullopt when equal.
std::optional<int> first_difference(const RationalSeries& a, const RationalSeries& b);

/// 1/s. Throws RingError("series not invertible") for a zero constant term.
RationalSeries series_reciprocal(const RationalSeries& s);
/// a / b = a * (1/b).
RationalSeries operator/(const RationalSeries& a, const RationalSeries& b);

/// r with r*r = s through order. The constant term must have a square root
/// in the sqrt(2) ring (a perfect square, or twice one); otherwise throws
/// RingError("series has no square root in ring").
RationalSeries series_sqrt(const RationalSeries& s);

/// s^n for integer n (negative n goes through the reciprocal).
RationalSeries series_pow(const RationalSeries& s, long n);
/// s^p for rational p; requires s(0) = 1 with no sqrt(2) factor.
RationalSeries series_pow(const RationalSeries& s, const Rational& p);
/// exp(s); requires s(0) = 0 with no sqrt(2) factor.
RationalSeries series_exp(const RationalSeries& s);
/// outer(inner(z)); requires inner(0) = 0 and inner free of sqrt(2) factors.
RationalSeries compose(const RationalSeries& outer, const RationalSeries& inner);

std::ostream& operator<<(std::ostream& os, const RationalSeries& s);

}  // namespace hwalk

#endif  // HWALK_EXACT_RATIONAL_SERIES_H
