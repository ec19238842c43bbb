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

#include "hwalk/exact/sqrt2_scalar.h"

#include <cmath>

#include "hwalk/errors.h"

namespace hwalk {

namespace {

long floor_div2(long k) { return (k >= 0) ? k / 2 : -((-k + 1) / 2); }

}  // namespace

Sqrt2Scalar::Sqrt2Scalar(Rational q, long k) : q_(std::move(q)) {
    q_.canonicalize();
    normalize(k);
}

void Sqrt2Scalar::normalize(long k) {
    if (q_ == 0) {
        k_ = 0;
        return;
    }
    long half = floor_div2(k);
    k_ = static_cast<int>(k - 2 * half);
    if (half != 0) q_ *= pow2(half);
}

Sqrt2Scalar Sqrt2Scalar::sqrt2_power(long k) { return Sqrt2Scalar(Rational(1), k); }

Sqrt2Scalar Sqrt2Scalar::operator-() const {
    Sqrt2Scalar r = *this;
    r.q_ = -r.q_;
    return r;
}

Sqrt2Scalar& Sqrt2Scalar::operator*=(const Sqrt2Scalar& o) {
    q_ *= o.q_;
    normalize(static_cast<long>(k_) + o.k_);
    return *this;
}

Sqrt2Scalar& Sqrt2Scalar::operator/=(const Sqrt2Scalar& o) {
    if (o.is_zero()) throw RingError("division by zero in sqrt2 ring");
    q_ /= o.q_;
    normalize(static_cast<long>(k_) - o.k_);
    return *this;
}

Sqrt2Scalar& Sqrt2Scalar::operator+=(const Sqrt2Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (k_ != o.k_) throw RingError("sum of rational and sqrt2-rational leaves the ring");
    q_ += o.q_;
    if (q_ == 0) k_ = 0;
    return *this;
}

Sqrt2Scalar& Sqrt2Scalar::operator-=(const Sqrt2Scalar& o) { return *this += -o; }

std::optional<Sqrt2Scalar> Sqrt2Scalar::sqrt() const {
    if (is_zero()) return Sqrt2Scalar();
    if (k_ != 0 || q_ < 0) return std::nullopt;
    Rational r;
    if (rational_sqrt(q_, &r)) return Sqrt2Scalar(r);
    if (rational_sqrt(q_ / 2, &r)) return Sqrt2Scalar(r, 1);
    return std::nullopt;
}

double Sqrt2Scalar::to_double() const {
    double v = hwalk::to_double(q_);
    return k_ == 0 ? v : v * std::sqrt(2.0);
}

std::string Sqrt2Scalar::to_string() const {
    std::string s = q_.get_str();
    if (k_ == 1) s += "*sqrt2";
    return s;
}

std::ostream& operator<<(std::ostream& os, const Sqrt2Scalar& x) { return os << x.to_string(); }

}  // namespace hwalk
