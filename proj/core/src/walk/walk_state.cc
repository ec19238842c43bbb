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

#include "hwalk/walk/walk_state.h"

#include "hwalk/errors.h"

namespace hwalk {

namespace {
const Integer kZero = 0;
}

const char* orientation_name(Orientation o) {
    return o == Orientation::canonical ? "canonical" : "as-printed";
}

Orientation parse_orientation(const std::string& name) {
    if (name == "canonical") return Orientation::canonical;
    if (name == "as-printed" || name == "as_printed") return Orientation::as_printed;
    throw DomainError("unknown orientation '" + name + "'");
}

Sqrt2Scalar DyadicAmplitude::value() const { return Sqrt2Scalar(Rational(mantissa), -halftime); }

double DyadicAmplitude::to_double() const {
    // sqrt2^-t = 2^-(t/2) for even t, 2^-((t+1)/2) * sqrt2 for odd t
    if (halftime % 2 == 0) return ldexp_integer(mantissa, -halftime / 2);
    return ldexp_integer(mantissa, -(halftime + 1) / 2) * 1.4142135623730951;
}

std::string DyadicAmplitude::to_string() const {
    return mantissa.get_str() + " * 2^-" + std::to_string(halftime) + "/2";
}

WalkState::WalkState() : r_(1), l_(1) { l_[0] = 1; }

std::size_t WalkState::index(long n) const { return static_cast<std::size_t>(n + t_); }

const Integer& WalkState::right_mantissa(long n) const {
    return (n < -t_ || n > t_) ? kZero : r_[index(n)];
}

const Integer& WalkState::left_mantissa(long n) const {
    return (n < -t_ || n > t_) ? kZero : l_[index(n)];
}

Integer WalkState::norm_mantissa() const {
    Integer sum = 0;
    for (std::size_t i = 0; i < r_.size(); ++i) sum += r_[i] * r_[i] + l_[i] * l_[i];
    return sum;
}

WalkState WalkState::with_right_mantissa(long n, Integer m) const {
    if (n < -t_ || n > t_) throw DomainError("position outside [-t, t]");
    WalkState s = *this;
    s.r_[index(n)] = std::move(m);
    return s;
}

WalkState WalkState::with_left_mantissa(long n, Integer m) const {
    if (n < -t_ || n > t_) throw DomainError("position outside [-t, t]");
    WalkState s = *this;
    s.l_[index(n)] = std::move(m);
    return s;
}

WalkState initial_state() { return WalkState(); }

WalkState step(const WalkState& s, Orientation o) {
    WalkState out;
    const long t = s.t_;
    out.t_ = s.t_ + 1;
    out.r_.assign(2 * t + 3, Integer(0));
    out.l_.assign(2 * t + 3, Integer(0));
    for (long n = -t - 1; n <= t + 1; ++n) {
        std::size_t i = static_cast<std::size_t>(n + t + 1);
        if ((n + t + 1) % 2 != 0) continue;
        if (o == Orientation::canonical) {
            out.r_[i] = s.left_mantissa(n - 1) - s.right_mantissa(n - 1);
            out.l_[i] = s.left_mantissa(n + 1) + s.right_mantissa(n + 1);
        } else {
            out.r_[i] = s.left_mantissa(n + 1) + s.right_mantissa(n - 1);
            out.l_[i] = s.right_mantissa(n - 1) - s.left_mantissa(n + 1);
        }
    }
    return out;
}

WalkState evolve(const WalkState& s, int steps, Orientation o) {
    if (steps < 0) throw DomainError("negative step count");
    WalkState cur = s;
    for (int i = 0; i < steps; ++i) cur = step(cur, o);
    return cur;
}

Rational probability(const WalkState& s, long n) {
    if (n < -s.time() || n > s.time()) throw DomainError("position outside [-t, t]");
    const Integer& r = s.right_mantissa(n);
    const Integer& l = s.left_mantissa(n);
    return Rational(r * r + l * l) * pow2(-s.time());
}

WalkHistory::WalkHistory(int t_max, Orientation o) : orientation_(o) {
    if (t_max < 0) throw DomainError("negative t_max");
    states_.reserve(static_cast<std::size_t>(t_max) + 1);
    states_.push_back(initial_state());
    for (int t = 1; t <= t_max; ++t) states_.push_back(step(states_.back(), o));
}

const WalkState& WalkHistory::at(int t) const {
    if (t < 0 || t > t_max()) throw DomainError("time outside simulated history");
    return states_[static_cast<std::size_t>(t)];
}

WalkHistory WalkHistory::with_state(int t, WalkState s) const {
    if (s.time() != t) throw DomainError("replacement state has the wrong time");
    WalkHistory h = *this;
    (void)h.at(t);
    h.states_[static_cast<std::size_t>(t)] = std::move(s);
    return h;
}

}  // namespace hwalk
