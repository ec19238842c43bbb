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

#ifndef HWALK_WALK_WALK_STATE_H
#define HWALK_WALK_WALK_STATE_H

#include <string>
#include <vector>

#include "hwalk/exact/number.h"
#include "hwalk/exact/sqrt2_scalar.h"

namespace hwalk {

/// Which of the two step rules drives the walk.
///
/// `canonical` transports the initial |L> amplitude so that it matches the
/// momentum-space evolution and the integral representations:
///   R(n, t+1) = (L(n-1, t) - R(n-1, t)) / sqrt2
///   L(n, t+1) = (L(n+1, t) + R(n+1, t)) / sqrt2
/// `as_printed` is the alternative rule
///   R(n, t+1) = (L(n+1, t) + R(n-1, t)) / sqrt2
///   L(n, t+1) = (-L(n+1, t) + R(n-1, t)) / sqrt2
/// The two are related exactly by R_p(n, t) = R_c(-n, t) and
/// L_p(n, t) = (-1)^t L_c(n, t).
enum class Orientation { canonical, as_printed };

const char* orientation_name(Orientation o);
/// Parses "canonical" or "as-printed"; throws DomainError otherwise.
Orientation parse_orientation(const std::string& name);

/// mantissa * sqrt(2)^-halftime.
struct DyadicAmplitude {
    Integer mantissa;
    int halftime = 0;

    Sqrt2Scalar value() const;
    double to_double() const;
    /// "m * 2^-t/2".
    std::string to_string() const;
};

/// Amplitudes of both chiralities on positions -t..t at time t, stored as
/// integer mantissas over the shared scale sqrt(2)^-t.
class WalkState {
   public:
    /// The t = 0 state with psi_L(0, 0) = 1.
    WalkState();

    int time() const { return t_; }
    /// Mantissa of psi_R(n, t); zero outside [-t, t].
    const Integer& right_mantissa(long n) const;
    const Integer& left_mantissa(long n) const;
    DyadicAmplitude right(long n) const { return {right_mantissa(n), t_}; }
    DyadicAmplitude left(long n) const { return {left_mantissa(n), t_}; }

    /// Sum over n of right^2 + left^2 mantissas; equals 2^t for a unitary walk.
    Integer norm_mantissa() const;

    /// Copy with one mantissa replaced (fault injection and tests).
    WalkState with_right_mantissa(long n, Integer m) const;
    WalkState with_left_mantissa(long n, Integer m) const;

    friend bool operator==(const WalkState& a, const WalkState& b) {
        return a.t_ == b.t_ && a.r_ == b.r_ && a.l_ == b.l_;
    }

   private:
    friend WalkState step(const WalkState& s, Orientation o);
    std::size_t index(long n) const;

    int t_ = 0;
    std::vector<Integer> r_, l_;  // index n + t
};

WalkState initial_state();
WalkState step(const WalkState& s, Orientation o = Orientation::canonical);
WalkState evolve(const WalkState& s, int steps, Orientation o = Orientation::canonical);

/// Exact |psi(n, t)|^2. Throws DomainError for |n| > t.
Rational probability(const WalkState& s, long n);

/// All states from t = 0 to t_max of one orientation, kept for repeated lookups.
class WalkHistory {
   public:
    WalkHistory(int t_max, Orientation o = Orientation::canonical);

    int t_max() const { return static_cast<int>(states_.size()) - 1; }
    Orientation orientation() const { return orientation_; }
    /// Throws DomainError when t is outside [0, t_max].
    const WalkState& at(int t) const;
    /// psi_R(n, t) and psi_L(n, t) as ring elements; zero outside the light cone.
    Sqrt2Scalar psi_right(long n, int t) const { return at(t).right(n).value(); }
    Sqrt2Scalar psi_left(long n, int t) const { return at(t).left(n).value(); }

    /// Copy with the state at time t replaced (fault injection).
    WalkHistory with_state(int t, WalkState s) const;

   private:
    Orientation orientation_;
    std::vector<WalkState> states_;
};

}  // namespace hwalk

#endif  // HWALK_WALK_WALK_STATE_H
