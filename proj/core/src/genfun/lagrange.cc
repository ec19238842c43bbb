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

#include <vector>

#include "hwalk/errors.h"
#include "hwalk/jacobi/jacobi.h"

namespace hwalk {

namespace {

RationalSeries one(int order) { return RationalSeries::constant(Sqrt2Scalar(1), order); }

long as_integer(const Rational& q) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
        throw DomainError("explicit Jacobi sum needs integer parameters");
    }
    return q.get_num().get_si();
}

}  // namespace

RationalSeries lagrange_invert(const LagrangeProblem& p) {
    if (p.order < 0 || p.phi.order() < p.order || p.f.order() < p.order) {
        throw RingError("not a valid inversion problem");
    }
    const RationalSeries phi = p.phi.truncated(p.order);
    const RationalSeries f = p.f.truncated(p.order);
    if (phi.coeff(0).is_zero()) throw RingError("not a valid inversion problem");
    const RationalSeries fprime = f.derivative();
    std::vector<Sqrt2Scalar> c(static_cast<std::size_t>(p.order) + 1);
    c[0] = f.coeff(0);
    if (p.order >= 1) {
        // phi^n is only needed through lambda^(n-1), i.e. below p.order
        const int work = p.order - 1;
        const RationalSeries phi_w = phi.truncated(work);
        const RationalSeries fp_w = fprime.truncated(work);
        RationalSeries phi_n = one(work);
        for (int n = 1; n <= p.order; ++n) {
            phi_n *= phi_w;
            const RationalSeries prod = fp_w * phi_n;
            c[static_cast<std::size_t>(n)] =
                prod.coeff(n - 1) * Sqrt2Scalar(make_rational(1, n));
        }
    }
    return RationalSeries::from_scalars(c, p.order);
}

RationalSeries srivastava_singhal_u(const SrivastavaSinghalSpec& spec) {
    if (spec.order < 0) throw DomainError("series order must be >= 0");
    const int order = spec.order;
    const RationalSeries w = RationalSeries::variable(order);
    const RationalSeries phi = Sqrt2Scalar(make_rational(1, 2)) *
                               series_pow(one(order) + w, Rational(1 + spec.a)) *
                               series_pow(one(order) - w, Rational(1 + spec.b));
    return -lagrange_invert({phi, w, order});
}

RationalSeries srivastava_singhal_series(const SrivastavaSinghalSpec& spec) {
    const int order = spec.order;
    const RationalSeries u = srivastava_singhal_u(spec);
    const RationalSeries num = series_pow(one(order) - u, Rational(spec.gamma + 1)) *
                               series_pow(one(order) + u, Rational(spec.beta + 1));
    const RationalSeries den = one(order) + Sqrt2Scalar(Rational(spec.a - spec.b)) * u +
                               Sqrt2Scalar(Rational(1 + spec.a + spec.b)) * u * u;
    return num / den;
}

RationalSeries srivastava_singhal_jacobi_sum(const SrivastavaSinghalSpec& spec) {
    if (spec.order < 0) throw DomainError("series order must be >= 0");
    const long a = as_integer(spec.a), b = as_integer(spec.b);
    const long g = as_integer(spec.gamma), be = as_integer(spec.beta);
    std::vector<Rational> c(static_cast<std::size_t>(spec.order) + 1);
    for (long j = 0; j <= spec.order; ++j) {
        c[static_cast<std::size_t>(j)] = jacobi_at(j, g + a * j, be + b * j, Rational(0));
    }
    return RationalSeries(std::move(c), spec.order);
}

}  // namespace hwalk
