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

#ifndef HWALK_WALK_FOURIER_H
#define HWALK_WALK_FOURIER_H

#include <array>
#include <complex>
#include <vector>

#include "hwalk/walk/walk_state.h"

namespace hwalk {

using Complex = std::complex<double>;

/// One momentum-space step acting on (L~, R~), including the 1/sqrt2 factor:
///   (1/sqrt2) [ e^{-i theta}   e^{-i theta} ]
///             [ e^{+i theta}  -e^{+i theta} ]
/// where psi~(theta) = sum_n psi(n) e^{i theta n}.
struct CoinMatrix {
    double theta = 0.0;
    std::array<std::array<Complex, 2>, 2> m{};

    static CoinMatrix at(double theta);
    std::array<Complex, 2> apply(const std::array<Complex, 2>& v) const;
    /// Both eigenvalues, computed from the characteristic polynomial.
    std::array<Complex, 2> eigenvalues() const;
};

/// Floating-point amplitudes on positions -t..t.
struct ApproxWalkState {
    int t = 0;
    std::vector<Complex> right, left;  // index n + t

    Complex right_at(long n) const;
    Complex left_at(long n) const;
};

/// Evolves (L~, R~) = (1, 0) by CoinMatrix^t on an N-point theta grid and
/// inverts the transform. Throws AliasingError unless N is even and
/// N >= max(4t, 2).
ApproxWalkState fourier_evolve(int t, int grid);

/// Largest |approx - exact| over both components and all positions.
double max_abs_deviation(const ApproxWalkState& approx, const WalkState& exact);

}  // namespace hwalk

#endif  // HWALK_WALK_FOURIER_H
