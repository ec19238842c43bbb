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

#include "hwalk/walk/fourier.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hwalk/errors.h"

namespace hwalk {

CoinMatrix CoinMatrix::at(double theta) {
    CoinMatrix c;
    c.theta = theta;
    const double h = 1.0 / std::numbers::sqrt2;
    const Complex em = std::polar(h, -theta);
    const Complex ep = std::polar(h, theta);
    c.m = {{{em, em}, {ep, -ep}}};
    return c;
}

std::array<Complex, 2> CoinMatrix::apply(const std::array<Complex, 2>& v) const {
    return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

std::array<Complex, 2> CoinMatrix::eigenvalues() const {
    const Complex tr = m[0][0] + m[1][1];
    const Complex det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    const Complex disc = std::sqrt(tr * tr - 4.0 * det);
    return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

Complex ApproxWalkState::right_at(long n) const {
    return (n < -t || n > t) ? Complex{} : right[static_cast<std::size_t>(n + t)];
}

Complex ApproxWalkState::left_at(long n) const {
    return (n < -t || n > t) ? Complex{} : left[static_cast<std::size_t>(n + t)];
}

ApproxWalkState fourier_evolve(int t, int grid) {
    if (t < 0) throw DomainError("negative time");
    if (grid % 2 != 0 || grid < std::max(4 * t, 2)) {
        throw AliasingError("grid of " + std::to_string(grid) + " points aliases a walk at t = " +
                            std::to_string(t) + "; need an even grid >= max(4t, 2)");
    }
    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<std::array<Complex, 2>> spectrum(static_cast<std::size_t>(grid));
    for (int j = 0; j < grid; ++j) {
        const CoinMatrix c = CoinMatrix::at(two_pi * j / grid);
        std::array<Complex, 2> v{Complex(1.0), Complex(0.0)};
        for (int s = 0; s < t; ++s) v = c.apply(v);
        spectrum[static_cast<std::size_t>(j)] = v;
    }
    ApproxWalkState out;
    out.t = t;
    out.right.assign(2 * static_cast<std::size_t>(t) + 1, Complex{});
    out.left.assign(2 * static_cast<std::size_t>(t) + 1, Complex{});
    for (long n = -t; n <= t; ++n) {
        Complex l, r;
        for (int j = 0; j < grid; ++j) {
            const long k = ((static_cast<long>(j) * n) % grid + grid) % grid;
            const Complex w = std::polar(1.0, -two_pi * static_cast<double>(k) / grid);
            l += spectrum[static_cast<std::size_t>(j)][0] * w;
            r += spectrum[static_cast<std::size_t>(j)][1] * w;
        }
        out.left[static_cast<std::size_t>(n + t)] = l / static_cast<double>(grid);
        out.right[static_cast<std::size_t>(n + t)] = r / static_cast<double>(grid);
    }
    return out;
}

double max_abs_deviation(const ApproxWalkState& approx, const WalkState& exact) {
    const long t = std::max(approx.t, exact.time());
    double worst = 0.0;
    for (long n = -t; n <= t; ++n) {
        worst = std::max(worst, std::abs(approx.right_at(n) - exact.right(n).to_double()));
        worst = std::max(worst, std::abs(approx.left_at(n) - exact.left(n).to_double()));
    }
    return worst;
}

}  // namespace hwalk
