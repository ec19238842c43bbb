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

#include "hwalk/genfun/numeric_checks.h"

#include <cmath>
#include <numbers>
#include <string>

#include "hwalk/asymptotics/quadrature.h"
#include "hwalk/exact/number.h"
#include "hwalk/jacobi/jacobi.h"

namespace hwalk {

namespace {

constexpr double kPi = std::numbers::pi;

double closed_f(int m, double z) {
    const double r = std::sqrt(1.0 + z * z);
    return std::pow(2.0, m - 0.5) * std::pow(z, m) / (r * std::pow(1.0 - z + r, 2 * m));
}

}  // namespace

std::complex<double> jacobi_generating_value(std::complex<double> z, long r, long s) {
    const std::complex<double> root = std::sqrt(1.0 + z * z);
    return std::pow(2.0, static_cast<double>(r + s)) /
           (root * std::pow(1.0 - z + root, static_cast<double>(r)) *
            std::pow(1.0 + z + root, static_cast<double>(s)));
}

double cauchy_coefficient(long k, long r, long s, double radius, int points) {
    std::complex<double> sum = 0.0;
    for (int j = 0; j < points; ++j) {
        const double phi = 2.0 * kPi * j / points;
        const std::complex<double> z = std::polar(radius, phi);
        sum += jacobi_generating_value(z, r, s) * std::polar(1.0, -static_cast<double>(k) * phi);
    }
    return (sum / static_cast<double>(points)).real() / std::pow(radius, static_cast<double>(k));
}

CheckReport cauchy_extraction_check(long k_max, long param_max, double tol) {
    CheckReport rep;
    rep.name = "cauchy-extraction";
    for (long r = 0; r <= param_max; ++r) {
        for (long s = 0; s <= param_max; ++s) {
            for (long k = 0; k <= k_max; ++k) {
                ++rep.cases;
                const double exact = to_double(jacobi_at(k, r, s, Rational(0)));
                const double err = std::abs(cauchy_coefficient(k, r, s) - exact);
                rep.record_error(err);
                if (err > tol) {
                    rep.fail("coefficient mismatch at (k=" + std::to_string(k) + ", r=" +
                             std::to_string(r) + ", s=" + std::to_string(s) + ")");
                }
            }
        }
    }
    return rep;
}

CheckReport integral_identity_check(int m_max, double tol) {
    CheckReport rep;
    rep.name = "integral-identities";
    for (double z : {-0.5, -0.25, 0.25, 0.5}) {
        for (int m = 0; m <= m_max; ++m) {
            const auto f_int = [&](Complex th) {
                const double c = std::cos(th.real());
                return Complex(std::cos(2.0 * m * th.real()) / (1.0 - 2.0 * z * c * c + z * z));
            };
            const double f_num = (1.0 - z) / (kPi * std::numbers::sqrt2) *
                                 integrate_segment(f_int, 0.0, kPi, 16, tol / 10).value.real();
            const double a2 = -2.0 * z / ((1.0 - z) * (1.0 - z));
            const auto g_int = [&](Complex th) {
                const double sn = std::sin(th.real());
                return Complex(std::cos(2.0 * m * th.real()) / (1.0 - a2 * sn * sn));
            };
            const double g_num = integrate_segment(g_int, 0.0, kPi / 2, 16, tol / 10).value.real();
            const double q = std::sqrt(1.0 - a2);
            const double g_exact =
                ((m % 2 == 0) ? 1.0 : -1.0) * kPi / (2.0 * q) * std::pow((1.0 - q) * (1.0 - q) / a2, m);
            const double errs[2] = {std::abs(f_num - closed_f(m, z)), std::abs(g_num - g_exact)};
            for (double e : errs) {
                ++rep.cases;
                rep.record_error(e);
                if (e > tol) {
                    rep.fail("integral mismatch at (m=" + std::to_string(m) + ", z=" +
                             std::to_string(z) + ")");
                }
            }
        }
    }
    return rep;
}

}  // namespace hwalk
