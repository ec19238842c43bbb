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

#ifndef HWALK_GENFUN_LAGRANGE_H
#define HWALK_GENFUN_LAGRANGE_H

#include "hwalk/exact/rational_series.h"

namespace hwalk {

/// w = z phi(w); the result is the series of f(w(z)).
struct LagrangeProblem {
    RationalSeries phi;
    RationalSeries f;
    int order = 0;
};

/// Coefficient n >= 1 is (1/n) [lambda^(n-1)] f'(lambda) phi(lambda)^n and the
/// constant term is f(0). phi and f must have order >= p.order.
/// Throws RingError("not a valid inversion problem") when phi(0) = 0.
RationalSeries lagrange_invert(const LagrangeProblem& p);

/// -u = (z/2) (1-u)^(1+a) (1+u)^(1+b), u(0) = 0, and the right side
///   (1-u)^(gamma+1) (1+u)^(beta+1) / (1 + (a-b) u + (1+a+b) u^2)
/// whose coefficients are J_j^{(gamma + a j, beta + b j)}(0).
struct SrivastavaSinghalSpec {
    Rational a = 0;
    Rational b = 0;
    Rational gamma = 0;
    Rational beta = 0;
    int order = 0;
};

/// u(z) by Lagrange inversion of w = -u = z phi(w), phi(w) = (1+w)^(1+a) (1-w)^(1+b) / 2.
RationalSeries srivastava_singhal_u(const SrivastavaSinghalSpec& spec);
/// The assembled right side. Throws DomainError for a negative order.
RationalSeries srivastava_singhal_series(const SrivastavaSinghalSpec& spec);

/// sum_j J_j^{(gamma + a j, beta + b j)}(0) z^j straight from the explicit sum.
/// Needs integer a, b, gamma, beta; throws DomainError otherwise.
RationalSeries srivastava_singhal_jacobi_sum(const SrivastavaSinghalSpec& spec);

}  // namespace hwalk

#endif  // HWALK_GENFUN_LAGRANGE_H
