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

#ifndef HWALK_EXACT_NUMBER_H
#define HWALK_EXACT_NUMBER_H

#include <gmpxx.h>

#include <string>

namespace hwalk {

using Integer = mpz_class;
/// Always canonical: lowest terms, positive denominator.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// 2^e for any integer e (negative gives 1/2^-e).
Rational pow2(long e);
Rational pow(const Rational& base, long e);

/// Generalized binomial coefficient C(top, k) = top (top-1) ... (top-k+1) / k!.
/// Zero for k < 0. Integer-valued for integer top, including negative top.
Integer binomial(long top, long k);
Rational binomial(const Rational& top, long k);

Integer factorial(long n);

/// True iff q = r^2 for some rational r (q >= 0); stores r in *root.
bool rational_sqrt(const Rational& q, Rational* root);

/// (-1)^e.
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

/// Nearest double, well-defined for numerators and denominators beyond 2^1024.
double to_double(const Rational& q);
/// m * 2^e as a double without intermediate overflow.
double ldexp_integer(const Integer& m, long e);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace hwalk

#endif  // HWALK_EXACT_NUMBER_H
