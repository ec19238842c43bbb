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

#ifndef HWALK_JACOBI_JACOBI_H
#define HWALK_JACOBI_JACOBI_H

#include <vector>

#include "hwalk/exact/number.h"
#include "hwalk/exact/sqrt2_scalar.h"
#include "hwalk/report.h"

namespace hwalk {

struct JacobiParams {
    long k = 0;
    long r = 0;
    long s = 0;
    Rational x = 0;
};

/// J_k^{(r,s)}(x) = 2^-k sum_j C(k+r, j) C(k+s, k-j) (x-1)^(k-j) (x+1)^j.
///
/// Binomials are generalized, so negative r, s are allowed. J_k = 0 for k < 0.
Rational jacobi_at(long k, long r, long s, const Rational& x);
inline Rational jacobi_at(const JacobiParams& p) { return jacobi_at(p.k, p.r, p.s, p.x); }

/// Overall chirality phase of the psi_L closed forms.
///
/// `integral` matches the canonical walk and the integral representations.
/// `printed` is the alternative phase (-1)^t * integral, which coincides with
/// psi_L of the as-printed recursion.
enum class PhaseConvention { integral, printed };

/// Which of the two Jacobi expressions for interior points to use.
/// Either one is valid on -t < n <= t once binomials are generalized.
enum class Branch { nonnegative, negative };

/// Jacobi expression for psi_R(n, t) on -t < n <= t.
Sqrt2Scalar psi_branch_R(long n, long t, Branch b);
/// Jacobi expression for psi_L(n, t) on -t < n <= t.
Sqrt2Scalar psi_branch_L(long n, long t, Branch b,
                         PhaseConvention c = PhaseConvention::integral);

/// Closed-form psi_R(n, t): endpoints, n = 0 at t = 0, and the natural branch
/// elsewhere. Throws DomainError unless |n| <= t and n = t (mod 2).
Sqrt2Scalar psi_closed_R(long n, long t);
Sqrt2Scalar psi_closed_L(long n, long t, PhaseConvention c = PhaseConvention::integral);

/// Even/odd split forms for 0 <= n <= t, written in terms of
/// J^{(2m,0)}, J^{(2m-1,0)}, J^{(1,2m)} and J^{(1,2m+1)} at 0.
Sqrt2Scalar psi_split_R(long n, long t);
Sqrt2Scalar psi_split_L(long n, long t, PhaseConvention c = PhaseConvention::integral);
/// psi~_L(n, t) = t / (t - n) psi_L(n, t) for n < t, continued to n = t by the
/// same Jacobi form. psi~_L(0, t) = psi_L(0, t).
Sqrt2Scalar psi_tilde_L(long n, long t, PhaseConvention c = PhaseConvention::integral);

class WalkHistory;

/// psi_R(-n,t) = (-1)^(n+1) psi_R(n+2,t) and
/// (t-n) psi_L(-n,t) = (-1)^n (t+n) psi_L(n,t), on the history's values.
/// Amplitudes outside the light cone count as zero.
bool check_symmetry(const WalkHistory& h, long n, long t);
/// check_symmetry for every n of matching parity and every t <= t_max.
CheckReport check_symmetry_range(const WalkHistory& h, int t_max);

struct JacobiIdentityRange {
    long m_max = 20;
    long param_max = 6;
    std::vector<Rational> xs = {Rational(0), Rational(1, 2), Rational(-1, 2)};
};

/// Checks exactly, over the range:
///   C(m,l) J_m^{(u,-l)}(x) = C(m+u,l) ((1+x)/2)^l J_{m-l}^{(u,l)}(x)
///   J_n^{(r,s)}(-x) = (-1)^n J_n^{(s,r)}(x)
///   (u+v+2k) J_k^{(u,v-1)}(x) = (u+v+k) J_k^{(u,v)}(x) + (u+k) J_{k-1}^{(u,v)}(x)
CheckReport check_jacobi_identities(const JacobiIdentityRange& range = {});

}  // namespace hwalk

#endif  // HWALK_JACOBI_JACOBI_H
