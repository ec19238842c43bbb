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

#ifndef HWALK_GENFUN_GENERATING_H
#define HWALK_GENFUN_GENERATING_H

#include "hwalk/exact/rational_series.h"
#include "hwalk/report.h"
#include "hwalk/walk/walk_state.h"

namespace hwalk {

/// The four amplitude generating functions, in the canonical walk:
///   F_m = sum_t psi_R(2m+1, 2t+1) z^t    G_m = sum_t psi_R(2m, 2t) z^t
///   H_m = sum_t psi~_L(2m+1, 2t+1) z^t   I_m = sum_t psi~_L(2m, 2t) z^t
enum class Family { F, G, H, I };

const char* family_name(Family f);

struct GenFunSpec {
    Family family = Family::F;
    int m = 0;
    int order = 0;
};

/// Closed forms with R = sqrt(1+z^2), D = 1 - z + R:
///   F_m = 2^(m-1/2) z^m / (R D^2m)
///   G_m = -2^(m-1) z^m / (R D^(2m-1)),  G_0 = z / (R D)
///   H_m = -2^(m-1/2) (1+z) z^m / (R D^(2m+1))
///   I_m = 2^(m-1) (1+z) z^m / (R D^2m),  I_0 = 1/R + z / (R D)
RationalSeries closed_form_series(const GenFunSpec& spec);

/// Same as closed_form_series except H_m with the opposite overall sign and
/// I_0 = 1/R - z / (R D). These are the forms as usually typeset; they differ
/// from the walk only by those two signs.
RationalSeries printed_closed_form_series(const GenFunSpec& spec);

/// Series whose coefficient t is read from the simulated walk. psi~_L is
/// taken as t/(t-n) psi_L away from n = t and from its Jacobi form at n = t.
/// Throws DomainError if the history is shorter than 2 * order + 1.
RationalSeries definitional_series(const GenFunSpec& spec, const WalkHistory& walk);

/// The generating function assembled from the Jacobi generating function, e.g.
/// F_m = 2^(-m-1/2) z^m sum_k J_k^{(2m,0)}(0) z^k.
RationalSeries jacobi_form_series(const GenFunSpec& spec);

/// sum_k J_k^{(r,s)}(x) z^k = 2^(r+s) / (R (1-z+R)^r (1+z+R)^s), R = sqrt(1-2xz+z^2).
RationalSeries jacobi_generating(const Rational& x, long r, long s, int order);

/// H_m = (1+z)/(2(1-z)) [F_{m+1} - F_m] and
/// I_m = sqrt2/(4(1-z)) [2(2-z) F_m - z F_{|m-1|} - z F_{m+1}], exactly.
CheckReport check_intermediate_relations(int m, int order);

/// For every family and m <= m_max: definitional = closed form = Jacobi
/// generating form = pointwise Jacobi closed forms, coefficient by coefficient.
CheckReport equivalence_ledger(int order, const WalkHistory& walk, int m_max = 10);
CheckReport equivalence_ledger(int order, int m_max = 10);

}  // namespace hwalk

#endif  // HWALK_GENFUN_GENERATING_H
