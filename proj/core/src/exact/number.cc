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
#include <stdexcept>

#include "hwalk/errors.h"

namespace hwalk {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

Rational pow2(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : make_rational(Integer(1), p);
}

Rational pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw DomainError("zero to a negative power");
        return pow(Rational(1) / base, -e);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    return make_rational(num, den);
}

Integer binomial(long top, long k) {
    if (k < 0) return 0;
    if (top >= 0) {
        Integer r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
        return r;
    }
    // C(-a, k) = (-1)^k C(a + k - 1, k)
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(-top + k - 1), static_cast<unsigned long>(k));
    return (k % 2 == 0) ? r : Integer(-r);
}

Rational binomial(const Rational& top, long k) {
    if (k < 0) return 0;
    Rational r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (top - i);
        r /= (i + 1);
    }
    return r;
}

Integer factorial(long n) {
    if (n < 0) throw DomainError("factorial of a negative integer");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

bool rational_sqrt(const Rational& q, Rational* root) {
    if (q < 0) return false;
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
        return false;
    }
    Integer num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
    if (root != nullptr) *root = make_rational(num, den);
    return true;
}

double ldexp_integer(const Integer& m, long e) {
    if (m == 0) return 0.0;
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, m.get_mpz_t());
    return std::ldexp(mant, static_cast<int>(exp2 + e));
}

double to_double(const Rational& q) {
    if (q == 0) return 0.0;
    long en = 0, ed = 0;
    double n = mpz_get_d_2exp(&en, q.get_num_mpz_t());
    double d = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
    return std::ldexp(n / d, static_cast<int>(en - ed));
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace hwalk
