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

#include "hwalk/asymptotics/quadrature.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "hwalk/errors.h"

namespace hwalk {

namespace {

GaussLegendre16 build_rule() {
    constexpr int n = 16;
    GaussLegendre16 r{};
    for (int i = 0; i < n / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

}  // namespace

const GaussLegendre16& gauss_legendre16() {
    static const GaussLegendre16 rule = build_rule();
    return rule;
}

Complex composite_gauss_legendre(const std::function<Complex(Complex)>& f, Complex a, Complex b,
                                 long panels) {
    const GaussLegendre16& gl = gauss_legendre16();
    const Complex h = (b - a) / static_cast<double>(panels);
    Complex sum = 0.0;
    for (long p = 0; p < panels; ++p) {
        const Complex mid = a + h * (static_cast<double>(p) + 0.5);
        Complex panel = 0.0;
        for (int i = 0; i < 16; ++i) panel += gl.weights[i] * f(mid + 0.5 * h * gl.nodes[i]);
        sum += panel;
    }
    return sum * 0.5 * h;
}

QuadratureResult integrate_segment(const std::function<Complex(Complex)>& f, Complex a, Complex b,
                                   long initial_panels, double tol, long max_panels) {
    long panels = initial_panels < 1 ? 1 : initial_panels;
    QuadratureResult res;
    Complex prev = composite_gauss_legendre(f, a, b, panels);
    res.node_count = 16 * panels;
    res.abs_error_estimate = std::numeric_limits<double>::infinity();
    for (;;) {
        if (2 * panels > max_panels) {
            throw BudgetError("quadrature did not reach tolerance", res.abs_error_estimate);
        }
        panels *= 2;
        const Complex cur = composite_gauss_legendre(f, a, b, panels);
        res.node_count += 16 * panels;
        res.value = cur;
        res.abs_error_estimate = std::abs(cur - prev);
        if (res.abs_error_estimate <= tol) return res;
        prev = cur;
    }
}

}  // namespace hwalk
