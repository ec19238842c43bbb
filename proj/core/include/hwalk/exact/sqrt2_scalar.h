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

#ifndef HWALK_EXACT_SQRT2_SCALAR_H
#define HWALK_EXACT_SQRT2_SCALAR_H

#include <optional>
#include <ostream>
#include <string>

#include "hwalk/exact/number.h"

namespace hwalk {

/// Exact value q * sqrt(2)^k.
///
/// Canonical form has k in {0, 1}; even powers of sqrt(2) are absorbed into
/// q. Zero is always stored with k = 0, so equality is structural.
///
/// The set is closed under multiplication and division but not under
/// addition: q1 + q2 sqrt(2) has no representation, and adding two values of
/// different parity throws RingError.
class Sqrt2Scalar {
   public:
    Sqrt2Scalar() = default;
    Sqrt2Scalar(Rational q, long k = 0);  // NOLINT(google-explicit-constructor)
    Sqrt2Scalar(long q) : Sqrt2Scalar(Rational(q)) {}  // NOLINT(google-explicit-constructor)

    /// sqrt(2)^k for any integer k.
    static Sqrt2Scalar sqrt2_power(long k);

    const Rational& rational() const { return q_; }
    int sqrt2_exponent() const { return k_; }
    bool is_zero() const { return q_ == 0; }

    Sqrt2Scalar operator-() const;
    Sqrt2Scalar& operator*=(const Sqrt2Scalar& o);
    Sqrt2Scalar& operator/=(const Sqrt2Scalar& o);
    Sqrt2Scalar& operator+=(const Sqrt2Scalar& o);
    Sqrt2Scalar& operator-=(const Sqrt2Scalar& o);

    friend Sqrt2Scalar operator*(Sqrt2Scalar a, const Sqrt2Scalar& b) { return a *= b; }
    friend Sqrt2Scalar operator/(Sqrt2Scalar a, const Sqrt2Scalar& b) { return a /= b; }
    friend Sqrt2Scalar operator+(Sqrt2Scalar a, const Sqrt2Scalar& b) { return a += b; }
    friend Sqrt2Scalar operator-(Sqrt2Scalar a, const Sqrt2Scalar& b) { return a -= b; }
    friend bool operator==(const Sqrt2Scalar& a, const Sqrt2Scalar& b) {
        return a.k_ == b.k_ && a.q_ == b.q_;
    }
    friend bool operator!=(const Sqrt2Scalar& a, const Sqrt2Scalar& b) { return !(a == b); }

    /// Square root inside the ring, if one exists (x >= 0, k = 0, and q or q/2 a square).
    std::optional<Sqrt2Scalar> sqrt() const;

    double to_double() const;
    /// "p/q" or "p/q*sqrt2".
    std::string to_string() const;

   private:
    void normalize(long k);

    Rational q_ = 0;
    int k_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Sqrt2Scalar& x);

}  // namespace hwalk

#endif  // HWALK_EXACT_SQRT2_SCALAR_H
