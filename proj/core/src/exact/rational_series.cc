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

#include <cmath>
#include <string>

#include "hwalk/errors.h"

namespace hwalk {

namespace {

void require_same_order(const RationalSeries& a, const RationalSeries& b) {
    if (a.order() != b.order()) {
        throw OrderMismatchError("series orders differ: " + std::to_string(a.order()) + " vs " +
                                 std::to_string(b.order()));
    }
}

long floor_div2(long k) { return (k >= 0) ? k / 2 : -((-k + 1) / 2); }

}  // namespace

RationalSeries::RationalSeries(int order) : c_(order < 0 ? 0 : order + 1), order_(order) {
    if (order < 0) throw DomainError("series order must be non-negative");
}

RationalSeries::RationalSeries(std::vector<Rational> coeffs, int order, long sqrt2_power)
    : RationalSeries(order) {
    if (coeffs.size() > c_.size()) {
        throw OrderMismatchError("coefficient list longer than order + 1; truncate explicitly");
    }
    long half = floor_div2(sqrt2_power);
    k_ = static_cast<int>(sqrt2_power - 2 * half);
    Rational scale = pow2(half);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        c_[i] = std::move(coeffs[i]);
        c_[i].canonicalize();
        if (half != 0) c_[i] *= scale;
    }
    normalize_zero();
}

RationalSeries RationalSeries::constant(const Sqrt2Scalar& c, int order) {
    return RationalSeries({c.rational()}, order, c.sqrt2_exponent());
}

RationalSeries RationalSeries::monomial(const Rational& c, int power, int order) {
    RationalSeries s(order);
    if (power < 0) throw DomainError("negative power in formal power series");
    if (power <= order) s.c_[power] = c;
    s.normalize_zero();
    return s;
}

RationalSeries RationalSeries::from_scalars(const std::vector<Sqrt2Scalar>& coeffs, int order) {
    RationalSeries s(order);
    if (coeffs.size() > s.c_.size()) {
        throw OrderMismatchError("coefficient list longer than order + 1; truncate explicitly");
    }
    std::optional<int> parity;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        if (parity && *parity != coeffs[i].sqrt2_exponent()) {
            throw RingError("series coefficients mix rational and sqrt2-rational values");
        }
        parity = coeffs[i].sqrt2_exponent();
        s.c_[i] = coeffs[i].rational();
    }
    s.k_ = parity.value_or(0);
    return s;
}

void RationalSeries::normalize_zero() {
    if (is_zero()) k_ = 0;
}

const Rational& RationalSeries::rational_coeff(int i) const {
    if (i < 0 || i > order_) throw DomainError("coefficient index outside truncation range");
    return c_[static_cast<std::size_t>(i)];
}

Sqrt2Scalar RationalSeries::coeff(int i) const { return Sqrt2Scalar(rational_coeff(i), k_); }

bool RationalSeries::is_zero() const {
    for (const auto& c : c_) {
        if (c != 0) return false;
    }
    return true;
}

RationalSeries RationalSeries::truncated(int new_order) const {
    if (new_order > order_) throw OrderMismatchError("cannot extend a truncated series");
    RationalSeries r(new_order);
    for (int i = 0; i <= new_order; ++i) r.c_[i] = c_[i];
    r.k_ = k_;
    r.normalize_zero();
    return r;
}

RationalSeries RationalSeries::derivative() const {
    RationalSeries r(order_ == 0 ? 0 : order_ - 1);
    for (int i = 1; i <= order_; ++i) r.c_[i - 1] = c_[i] * i;
    r.k_ = k_;
    r.normalize_zero();
    return r;
}

RationalSeries RationalSeries::shifted(int k) const {
    if (k < 0) throw DomainError("negative shift of a power series");
    RationalSeries r(order_);
    for (int i = order_; i >= k; --i) r.c_[i] = c_[i - k];
    r.k_ = k_;
    r.normalize_zero();
    return r;
}

RationalSeries RationalSeries::operator-() const {
    RationalSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& o) {
    require_same_order(*this, o);
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (k_ != o.k_) throw RingError("sum of rational and sqrt2-rational series leaves the ring");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    normalize_zero();
    return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& o) { return *this += -o; }

RationalSeries& RationalSeries::operator*=(const RationalSeries& o) {
    require_same_order(*this, o);
    std::vector<Rational> out(c_.size());
    for (int i = 0; i <= order_; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j <= order_; ++j) {
            if (o.c_[j] != 0) out[i + j] += c_[i] * o.c_[j];
        }
    }
    long k = static_cast<long>(k_) + o.k_;
    *this = RationalSeries(std::move(out), order_, k);
    return *this;
}

RationalSeries& RationalSeries::operator*=(const Sqrt2Scalar& s) {
    for (auto& c : c_) c *= s.rational();
    long k = static_cast<long>(k_) + s.sqrt2_exponent();
    *this = RationalSeries(std::move(c_), order_, k);
    return *this;
}

bool operator==(const RationalSeries& a, const RationalSeries& b) {
    return a.order_ == b.order_ && a.k_ == b.k_ && a.c_ == b.c_;
}

double RationalSeries::evaluate(double z) const {
    double acc = 0.0;
    for (int i = order_; i >= 0; --i) acc = acc * z + to_double(c_[i]);
    return k_ == 1 ? acc * std::sqrt(2.0) : acc;
}

std::optional<int> first_difference(const RationalSeries& a, const RationalSeries& b) {
    require_same_order(a, b);
    for (int i = 0; i <= a.order(); ++i) {
        if (a.coeff(i) != b.coeff(i)) return i;
    }
    return std::nullopt;
}

RationalSeries series_reciprocal(const RationalSeries& s) {
    const int n = s.order();
    const Rational& a0 = s.rational_coeff(0);
    if (a0 == 0) throw RingError("series not invertible");
    std::vector<Rational> b(n + 1);
    b[0] = 1 / a0;
    for (int i = 1; i <= n; ++i) {
        Rational acc = 0;
        for (int j = 1; j <= i; ++j) {
            const Rational& aj = s.rational_coeff(j);
            if (aj != 0) acc += aj * b[i - j];
        }
        b[i] = -acc * b[0];
    }
    return RationalSeries(std::move(b), n, -static_cast<long>(s.sqrt2_power()));
}

RationalSeries operator/(const RationalSeries& a, const RationalSeries& b) {
    require_same_order(a, b);
    return a * series_reciprocal(b);
}

RationalSeries series_sqrt(const RationalSeries& s) {
    const int n = s.order();
    if (s.is_zero()) return s;
    auto root0 = s.coeff(0).sqrt();
    if (s.sqrt2_power() != 0 || !root0) throw RingError("series has no square root in ring");
    // s = c (1 + u); sqrt(s) = sqrt(c) * sqrt(1 + u)
    const Rational& c = s.rational_coeff(0);
    std::vector<Rational> a(n + 1), b(n + 1);
    for (int i = 0; i <= n; ++i) a[i] = s.rational_coeff(i) / c;
    b[0] = 1;
    for (int i = 1; i <= n; ++i) {
        Rational acc = a[i];
        for (int j = 1; j < i; ++j) acc -= b[j] * b[i - j];
        b[i] = acc / 2;
    }
    return RationalSeries(std::move(b), n) * *root0;
}

RationalSeries series_pow(const RationalSeries& s, long n) {
    if (n < 0) return series_pow(series_reciprocal(s), -n);
    RationalSeries result = RationalSeries::constant(Sqrt2Scalar(1), s.order());
    RationalSeries base = s;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

RationalSeries series_pow(const RationalSeries& s, const Rational& p) {
    if (s.sqrt2_power() != 0 || s.rational_coeff(0) != 1) {
        throw RingError("rational power needs constant term 1");
    }
    const int n = s.order();
    std::vector<Rational> y(n + 1);
    y[0] = 1;
    // J. C. P. Miller recurrence: n y_n = sum_{k=1}^n ((p + 1) k - n) a_k y_{n-k}
    for (int i = 1; i <= n; ++i) {
        Rational acc = 0;
        for (int k = 1; k <= i; ++k) {
            const Rational& ak = s.rational_coeff(k);
            if (ak != 0) acc += ((p + 1) * k - i) * ak * y[i - k];
        }
        y[i] = acc / i;
    }
    return RationalSeries(std::move(y), n);
}

RationalSeries series_exp(const RationalSeries& s) {
    if (s.sqrt2_power() != 0 || s.rational_coeff(0) != 0) {
        throw RingError("exp needs a series with zero constant term");
    }
    const int n = s.order();
    std::vector<Rational> y(n + 1);
    y[0] = 1;
    for (int i = 1; i <= n; ++i) {
        Rational acc = 0;
        for (int k = 1; k <= i; ++k) {
            const Rational& sk = s.rational_coeff(k);
            if (sk != 0) acc += k * sk * y[i - k];
        }
        y[i] = acc / i;
    }
    return RationalSeries(std::move(y), n);
}

RationalSeries compose(const RationalSeries& outer, const RationalSeries& inner) {
    require_same_order(outer, inner);
    if (inner.sqrt2_power() != 0 || inner.rational_coeff(0) != 0) {
        throw RingError("composition needs an inner series with zero constant term");
    }
    const int n = outer.order();
    RationalSeries acc(n);
    for (int i = n; i >= 0; --i) {
        acc *= inner;
        acc += RationalSeries::monomial(outer.rational_coeff(i), 0, n);
    }
    return acc * Sqrt2Scalar::sqrt2_power(outer.sqrt2_power());
}

std::ostream& operator<<(std::ostream& os, const RationalSeries& s) {
    if (s.sqrt2_power() == 1) os << "sqrt2*(";
    bool first = true;
    for (int i = 0; i <= s.order(); ++i) {
        const Rational& c = s.rational_coeff(i);
        if (c == 0) continue;
        if (!first) os << " + ";
        os << c.get_str();
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    if (s.sqrt2_power() == 1) os << ")";
    return os << " + O(z^" << (s.order() + 1) << ")";
}

}  // namespace hwalk
