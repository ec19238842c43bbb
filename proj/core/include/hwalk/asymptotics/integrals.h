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

#ifndef HWALK_ASYMPTOTICS_INTEGRALS_H
#define HWALK_ASYMPTOTICS_INTEGRALS_H

#include <utility>
#include <vector>

#include "hwalk/asymptotics/phase.h"
#include "hwalk/asymptotics/quadrature.h"
#include "hwalk/report.h"

namespace hwalk {

/// Integrands of the momentum-space representations, including 1/(2 pi):
///   psi_R(n,t)  = 1/2pi int e^{i theta} / sqrt(1+cos^2 theta) e^{-i(t omega + n theta)}
///   psi_L(n,t)  = 1/2pi int (1 + cos theta / sqrt(1+cos^2 theta)) e^{-i(t omega + n theta)}
///   psi~_L(n,t) = 1/2pi int e^{-i(t omega + n theta)}
/// and the reflected form used for contour deformation,
///   psi_R(n,t)  = (-1)^(n+1)/2pi int e^{-i theta} / sqrt(1+cos^2 theta) e^{-i(t omega - n theta)}.
/// sqrt(1+cos^2 theta) is continued off the real line as sqrt2 cos(omega).
Complex integrand_psi_r(long n, long t, Complex theta);
Complex integrand_psi_l(long n, long t, Complex theta);
Complex integrand_psi_tilde_l(long n, long t, Complex theta);
Complex integrand_psi_r_reflected(long n, long t, Complex theta);

/// Panel count for [-pi, pi]: 8 panels per oscillation, at least 64.
long default_panels(long n, long t);

/// (psi_R, psi_L) by composite Gauss-Legendre over [-pi, pi]. Zero for odd n + t.
/// Throws DomainError for |n| > t or tol < 1e-12; BudgetError when tol is unreachable.
std::pair<QuadratureResult, QuadratureResult> quadrature_psi(long n, long t, double tol);
QuadratureResult quadrature_psi_tilde_l(long n, long t, double tol);

struct ContourResult {
    QuadratureResult real_line;
    QuadratureResult shifted;
    /// Vertices of the shifted path, from -pi + iV to pi + iV.
    std::vector<Complex> path;
    double leg_height = 0.0;
    double tail_bound = 0.0;
    /// Quadrature estimates plus the truncation tail.
    double error_budget = 0.0;
};

/// Integrates the reflected psi_R form on the real line and along a path
/// through the imaginary-axis saddle with vertical legs at Re theta = +-pi.
/// Requires 1/sqrt2 + eps < n/t < 1 - eps (ValidityError otherwise).
ContourResult contour_shift(long n, long t, double tol, double eps = kDefaultAiryExclusion);
CheckReport contour_shift_check(long n, long t, double tol, double eps = kDefaultAiryExclusion);

}  // namespace hwalk

#endif  // HWALK_ASYMPTOTICS_INTEGRALS_H
