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

#ifndef HWALK_ASYMPTOTICS_QUADRATURE_H
#define HWALK_ASYMPTOTICS_QUADRATURE_H

#include <array>
#include <complex>
#include <functional>

namespace hwalk {

using Complex = std::complex<double>;

struct QuadratureResult {
    Complex value;
    double abs_error_estimate = 0.0;
    long node_count = 0;
};

/// 16-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre16 {
    std::array<double, 16> nodes;
    std::array<double, 16> weights;
};
const GaussLegendre16& gauss_legendre16();

/// Composite rule with `panels` equal panels along the straight segment a -> b
/// of the complex plane (the integral of f(theta) d theta).
Complex composite_gauss_legendre(const std::function<Complex(Complex)>& f, Complex a, Complex b,
                                 long panels);

/// Doubles the panel count from `initial_panels` until two successive results
/// agree within `tol`. Throws BudgetError when `max_panels` is exceeded.
QuadratureResult integrate_segment(const std::function<Complex(Complex)>& f, Complex a, Complex b,
                                   long initial_panels, double tol, long max_panels = 1L << 16);

}  // namespace hwalk

#endif  // HWALK_ASYMPTOTICS_QUADRATURE_H
