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

#include "hwalk/asymptotics/integrals.h"

#include <cmath>
#include <numbers>
#include <string>

#include "hwalk/errors.h"

namespace hwalk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kMaxLegHeight = 400.0;

const Complex kI(0.0, 1.0);

void require_point(long n, long t, double tol) {
    if (t < 0 || n < -t || n > t) throw DomainError("position outside [-t, t]");
    if (!(tol >= 1e-12)) throw DomainError("tolerance must be >= 1e-12");
}

QuadratureResult real_line(long n, long t, double tol, Complex (*f)(long, long, Complex)) {
    if ((n + t) % 2 != 0) return {};
    return integrate_segment([&](Complex th) { return f(n, t, th); }, Complex(-kPi, 0.0),
                             Complex(kPi, 0.0), default_panels(n, t), tol);
}

}  // namespace

Complex integrand_psi_r(long n, long t, Complex theta) {
    const Complex w = omega(theta);
    return std::exp(kI * theta - kI * (static_cast<double>(t) * w + static_cast<double>(n) * theta)) /
           (kSqrt2 * std::cos(w)) / (2.0 * kPi);
}

Complex integrand_psi_l(long n, long t, Complex theta) {
    const Complex w = omega(theta);
    const Complex e = std::exp(-kI * (static_cast<double>(t) * w + static_cast<double>(n) * theta));
    return (1.0 + std::cos(theta) / (kSqrt2 * std::cos(w))) * e / (2.0 * kPi);
}

Complex integrand_psi_tilde_l(long n, long t, Complex theta) {
    const Complex w = omega(theta);
    return std::exp(-kI * (static_cast<double>(t) * w + static_cast<double>(n) * theta)) / (2.0 * kPi);
}

Complex integrand_psi_r_reflected(long n, long t, Complex theta) {
    const Complex w = omega(theta);
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    return sign *
           std::exp(-kI * theta - kI * (static_cast<double>(t) * w - static_cast<double>(n) * theta)) /
           (kSqrt2 * std::cos(w)) / (2.0 * kPi);
}

long default_panels(long n, long t) {
    const double oscillations = static_cast<double>(t) / kSqrt2 + std::abs(static_cast<double>(n));
    return std::max(64L, 8 * static_cast<long>(std::ceil(oscillations)));
}

std::pair<QuadratureResult, QuadratureResult> quadrature_psi(long n, long t, double tol) {
    require_point(n, t, tol);
    return {real_line(n, t, tol, integrand_psi_r), real_line(n, t, tol, integrand_psi_l)};
}

QuadratureResult quadrature_psi_tilde_l(long n, long t, double tol) {
    require_point(n, t, tol);
    return real_line(n, t, tol, integrand_psi_tilde_l);
}

ContourResult contour_shift(long n, long t, double tol, double eps) {
    require_point(n, t, tol);
    if ((n + t) % 2 != 0) throw DomainError("n and t must have the same parity");
    const double alpha = static_cast<double>(n) / static_cast<double>(t);
    if (!(alpha > 1.0 / kSqrt2 + eps && alpha < 1.0 - eps)) {
        throw ValidityError("contour shift needs 1/sqrt2 + eps < n/t < 1 - eps");
    }
    const SaddleData sd = saddle(alpha, eps);
    const double h = sd.theta_alpha.imag();

    ContourResult res;
    double v_top = std::max(10.0, 40.0 / ((1.0 - alpha) * static_cast<double>(t)));
    while (std::exp(-(1.0 - alpha) * v_top * static_cast<double>(t)) > tol / 4) {
        v_top *= 2.0;
        if (v_top > kMaxLegHeight) {
            throw BudgetError("tail bound above tolerance at the maximum leg height",
                              std::exp(-(1.0 - alpha) * kMaxLegHeight * static_cast<double>(t)));
        }
    }
    res.leg_height = v_top;
    res.tail_bound = 2.0 * std::exp(-(1.0 - alpha) * v_top * static_cast<double>(t));

    // Below the branch points a straight line through the saddle is admissible;
    // above them the path stays low across Re theta = +-pi/2 and rises inside.
    std::vector<Complex>& p = res.path;
    if (h < 0.9 * kBranchHeight) {
        p = {{-kPi, v_top}, {-kPi, h}, {kPi, h}, {kPi, v_top}};
    } else {
        const double low = 0.5 * kBranchHeight;
        const double u1 = kPi / 4;
        p = {{-kPi, v_top}, {-kPi, low}, {-u1, low}, {-u1, h},
             {u1, h},       {u1, low},   {kPi, low}, {kPi, v_top}};
    }

    auto f = [&](Complex th) { return integrand_psi_r_reflected(n, t, th); };
    res.real_line =
        integrate_segment(f, Complex(-kPi, 0.0), Complex(kPi, 0.0), default_panels(n, t), tol / 8);
    const double seg_tol = tol / (8.0 * static_cast<double>(p.size() - 1));
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        const bool vertical = p[i].real() == p[i + 1].real();
        const double len = std::abs(p[i + 1] - p[i]);
        const long panels =
            vertical ? std::max(64L, static_cast<long>(std::ceil(4.0 * len * static_cast<double>(t))))
                     : std::max(64L, static_cast<long>(std::ceil(len / (2.0 * kPi) *
                                                                 default_panels(n, t))));
        const QuadratureResult seg = integrate_segment(f, p[i], p[i + 1], panels, seg_tol, 1L << 18);
        res.shifted.value += seg.value;
        res.shifted.abs_error_estimate += seg.abs_error_estimate;
        res.shifted.node_count += seg.node_count;
    }
    res.error_budget =
        res.real_line.abs_error_estimate + res.shifted.abs_error_estimate + res.tail_bound;
    return res;
}

CheckReport contour_shift_check(long n, long t, double tol, double eps) {
    CheckReport rep;
    rep.name = "contour-shift (" + std::to_string(n) + ", " + std::to_string(t) + ")";
    rep.cases = 1;
    const ContourResult r = contour_shift(n, t, tol, eps);
    const double diff = std::abs(r.shifted.value - r.real_line.value);
    rep.record_error(diff);
    if (diff > tol) {
        rep.fail("|shifted - real line| = " + std::to_string(diff) + " at (n=" + std::to_string(n) +
                 ", t=" + std::to_string(t) + ")");
    }
    return rep;
}

}  // namespace hwalk
