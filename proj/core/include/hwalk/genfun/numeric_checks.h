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

#ifndef HWALK_GENFUN_NUMERIC_CHECKS_H
#define HWALK_GENFUN_NUMERIC_CHECKS_H

#include <complex>

#include "hwalk/report.h"

namespace hwalk {

/// 2^(r+s) / (R (1-z+R)^r (1+z+R)^s) with R = sqrt(1+z^2), principal root.
std::complex<double> jacobi_generating_value(std::complex<double> z, long r, long s);

/// Coefficient k of the x = 0 Jacobi generating function by the trapezoid
/// rule on |z| = radius with `points` nodes.
double cauchy_coefficient(long k, long r, long s, double radius = 0.5, int points = 256);

/// cauchy_coefficient against jacobi_at(k, r, s, 0) for k <= k_max, r, s <= param_max.
CheckReport cauchy_extraction_check(long k_max = 10, long param_max = 3, double tol = 1e-10);

/// Numeric checks at fixed z, m <= m_max:
///   F_m(z) = (1-z)/(pi sqrt2) int_0^pi cos(2m theta) / (1 - 2z cos^2 theta + z^2) d theta
/// against the closed form, and
///   int_0^{pi/2} cos(2m theta) / (1 - a^2 sin^2 theta) d theta
///     = (-1)^m pi / (2 sqrt(1-a^2)) ((1 - sqrt(1-a^2))^2 / a^2)^m
/// at a^2 = -2z/(1-z)^2.
CheckReport integral_identity_check(int m_max = 5, double tol = 1e-10);

}  // namespace hwalk

#endif  // HWALK_GENFUN_NUMERIC_CHECKS_H
