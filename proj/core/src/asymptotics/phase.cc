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

#include "hwalk/asymptotics/phase.h"

#include <cmath>
#include <numbers>

#include "hwalk/errors.h"

namespace hwalk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kCutTolerance = 1e-12;

double reduce_to_strip(double u) {
    if (u >= -kPi && u <= kPi) return u;
    return u - 2.0 * kPi * std::round(u / (2.0 * kPi));
}

double distance_to_cuts(double u, double v) {
    double best = INFINITY;
    for (double c : {kPi / 2, -kPi / 2}) {
        const double du = std::abs(u - c);
        const double dv = std::abs(v) - kBranchHeight;
        best = std::min(best, dv >= 0.0 ? du : std::hypot(du, dv));
    }
    return best;
}

void require_decay_alpha(double alpha) {
    if (!(alpha > 1.0 / kSqrt2 && alpha < 1.0)) {
        throw DomainError("decay bases are defined for 1/sqrt2 < alpha < 1");
    }
}

template <typename T>
std::complex<T> omega_impl(std::complex<T> theta) {
    const T pi = std::numbers::pi_v<T>;
    T u = theta.real();
    if (u < -pi || u > pi) u -= 2 * pi * std::round(u / (2 * pi));
    const T v = theta.imag();
    if (distance_to_cuts(static_cast<double>(u), static_cast<double>(v)) < kCutTolerance) {
        throw BranchCutError("omega evaluated on a branch cut");
    }
    return std::asin(std::sin(std::complex<T>(u, v)) / std::numbers::sqrt2_v<T>);
}

}  // namespace

Complex omega(Complex theta) { return omega_impl(theta); }

std::complex<long double> omega(std::complex<long double> theta) { return omega_impl(theta); }

Complex omega_prime(Complex theta) {
    return std::cos(theta) / (kSqrt2 * std::cos(omega(theta)));
}

GrowthCheck growth_check(double u, double v, int t) {
    if (v < 10.0) throw DomainError("growth check needs v >= 10");
    const double ur = reduce_to_strip(u);
    if (std::abs(std::abs(ur) - kPi / 2) < 1e-6) {
        throw DomainError("growth check is ill-conditioned near |u| = pi/2");
    }
    GrowthCheck g;
    g.magnitude = std::exp(t * omega(Complex(ur, v)).imag());
    const double log_ref = std::abs(ur) < kPi / 2 ? v - std::log(kSqrt2) : std::log(kSqrt2) - v;
    g.reference = std::exp(t * log_ref);
    return g;
}

SaddleData saddle(double alpha, double eps) {
    const double a = std::abs(alpha);
    if (a >= 1.0 - eps) throw ValidityError("|alpha| too close to 1");
    if (std::abs(a - 1.0 / kSqrt2) <= eps) {
        throw ValidityError("alpha inside the transition zone around 1/sqrt2");
    }
    SaddleData d;
    d.alpha = alpha;
    const double x = alpha / std::sqrt(1.0 - alpha * alpha);
    if (a < 1.0 / kSqrt2) {
        d.theta_alpha = Complex(std::acos(x), 0.0);
    } else {
        d.decay_region = true;
        const double y = std::acosh(std::abs(x));
        d.theta_alpha = alpha > 0 ? Complex(0.0, y) : Complex(kPi, y);
        d.btilde = btilde(a);
        d.b = b_pathintegral(a);
        if (alpha > 0) {
            const double s = std::sqrt(2.0 * a * a - 1.0);
            const double denom = std::sqrt(2.0 * kPi * (1.0 - a * a) * s);
            d.prefactor_r = (a + s) / denom;
            d.prefactor_l = (1.0 - a) / denom;
        }
    }
    d.omega_alpha = omega(d.theta_alpha);
    // omega'' = -sin(theta) / (1 + cos^2 theta)^(3/2), with sqrt(1 + cos^2) = sqrt2 cos(omega)
    const Complex root = kSqrt2 * std::cos(d.omega_alpha);
    d.omega_second = -std::sin(d.theta_alpha) / (root * root * root);
    return d;
}

double btilde(double alpha) {
    require_decay_alpha(alpha);
    const double s = std::sqrt(std::max(0.0, 2.0 * alpha * alpha - 1.0));
    const double c = std::sqrt(1.0 - alpha * alpha);
    return std::pow(c / (alpha + s), alpha) * (1.0 + s) / (kSqrt2 * c);
}

double b_pathintegral(double alpha) {
    require_decay_alpha(alpha);
    const double s = std::sqrt(std::max(0.0, 2.0 * alpha * alpha - 1.0));
    return std::pow(2.0, -alpha / 2.0) * std::pow((1.0 + 2.0 * alpha - s) / (1.0 + alpha), alpha) *
           std::pow((alpha * alpha + s) / (1.0 - alpha * alpha), (1.0 - alpha) / 2.0);
}

std::pair<double, double> psi_asymptotic(long n, long t, double eps) {
    if (t <= 0 || n < -t || n > t || (n + t) % 2 != 0) {
        throw DomainError("need t > 0, |n| <= t and matching parity");
    }
    if (n < 0) {
        // psi_R(n,t) = (-1)^(n+1) psi_R(2-n,t); psi_L(n,t) = (-1)^n (t-n)/(t+n) psi_L(-n,t)
        if (std::abs(static_cast<double>(n) / t) >= 1.0 - eps) {
            throw ValidityError("|alpha| too close to 1");
        }
        const double r = psi_asymptotic(2 - n, t, eps).first;
        const double l = psi_asymptotic(-n, t, eps).second;
        const double sg = (n % 2 == 0) ? 1.0 : -1.0;
        return {-sg * r, sg * static_cast<double>(t - n) / static_cast<double>(t + n) * l};
    }
    const double alpha = static_cast<double>(n) / static_cast<double>(t);
    const SaddleData d = saddle(alpha, eps);
    if (!d.decay_region || alpha <= 1.0 / kSqrt2 + eps) {
        throw ValidityError("alpha outside the exponential-decay region");
    }
    const double scale = std::pow(*d.btilde, static_cast<double>(t)) / std::sqrt(static_cast<double>(t));
    const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
    return {-sign_n * *d.prefactor_r * scale, sign_n * *d.prefactor_l * scale};
}

}  // namespace hwalk
