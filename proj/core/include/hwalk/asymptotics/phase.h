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

#ifndef HWALK_ASYMPTOTICS_PHASE_H
#define HWALK_ASYMPTOTICS_PHASE_H

#include <complex>
#include <optional>
#include <utility>

namespace hwalk {

using Complex = std::complex<double>;

/// arcsinh(1): height of the four branch points pi/2 +- i arcsinh(1), -pi/2 +- i arcsinh(1).
inline constexpr double kBranchHeight = 0.88137358701954302523;

/// omega(theta) = arcsin(sin(theta) / sqrt2) on its principal sheet.
///
/// The sheet is the strip -pi <= Re theta <= pi cut along the half-lines
/// Re theta = +-pi/2, |Im theta| >= arcsinh(1). Arguments outside the strip are
/// reduced by 2 pi periodicity. Throws BranchCutError within 1e-12 of a cut.
Complex omega(Complex theta);
/// Extended-precision evaluation on the same sheet, for finite-difference checks.
std::complex<long double> omega(std::complex<long double> theta);

/// d omega / d theta = cos(theta) / (sqrt2 cos(omega)).
Complex omega_prime(Complex theta);

struct GrowthCheck {
    double magnitude = 0.0;  // |exp(-i omega t)|
    double reference = 0.0;  // (e^v / sqrt2)^t inside |u| < pi/2, (sqrt2 e^-v)^t outside
    double ratio() const { return magnitude / reference; }
    bool within(double factor) const { return ratio() <= factor && ratio() >= 1.0 / factor; }
};

/// |exp(-i omega(u + iv) t)| against its large-v form. Requires v >= 10 and
/// rejects |u| within 1e-6 of pi/2 as ill-conditioned (DomainError).
GrowthCheck growth_check(double u, double v, int t);

inline constexpr double kDefaultAiryExclusion = 1e-3;

/// Stationary point of omega(theta) - theta alpha and the decay-region data.
struct SaddleData {
    double alpha = 0.0;
    bool decay_region = false;
    /// Real saddle arccos(alpha/sqrt(1-alpha^2)) in the oscillatory region
    /// (its mirror -theta is the other one); i arccosh(alpha/sqrt(1-alpha^2))
    /// in the decay region, shifted by pi for negative alpha.
    Complex theta_alpha;
    Complex omega_alpha;
    /// omega'' at the saddle.
    Complex omega_second;
    std::optional<double> btilde;
    std::optional<double> b;
    /// psi_R ~ (-1)^(n+1) prefactor_r t^-1/2 btilde^t, psi_L ~ (-1)^n prefactor_l t^-1/2 btilde^t.
    std::optional<double> prefactor_r;
    std::optional<double> prefactor_l;
};

/// Throws ValidityError for | |alpha| - 1/sqrt2 | <= eps or |alpha| >= 1 - eps.
SaddleData saddle(double alpha, double eps = kDefaultAiryExclusion);

/// Decay base from the integral representation. DomainError outside (1/sqrt2, 1).
double btilde(double alpha);
/// Decay base from the Jacobi (path-sum) representation. DomainError outside (1/sqrt2, 1).
double b_pathintegral(double alpha);

/// Leading steepest-descent approximation (psi_R, psi_L) in the decay region,
/// using btilde^t. Negative alpha is mapped through the reflection symmetries.
/// Throws ValidityError outside 1/sqrt2 + eps < |n/t| < 1 - eps, DomainError on parity.
std::pair<double, double> psi_asymptotic(long n, long t, double eps = kDefaultAiryExclusion);

}  // namespace hwalk

#endif  // HWALK_ASYMPTOTICS_PHASE_H
