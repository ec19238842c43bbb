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

#include "hwalk/genfun/generating.h"

#include <cstdlib>
#include <string>

#include "hwalk/errors.h"
#include "hwalk/jacobi/jacobi.h"

namespace hwalk {

namespace {

RationalSeries one(int order) { return RationalSeries::constant(Sqrt2Scalar(1), order); }
RationalSeries zvar(int order) { return RationalSeries::variable(order); }

Sqrt2Scalar s2(long k) { return Sqrt2Scalar::sqrt2_power(k); }

// 1/R and 1/D with R = sqrt(1+z^2), D = 1 - z + R.
struct Pieces {
    RationalSeries inv_r;
    RationalSeries d;

    explicit Pieces(int order)
        : inv_r(order), d(order) {
        const RationalSeries z = zvar(order);
        const RationalSeries r = series_sqrt(one(order) + z * z);
        inv_r = series_reciprocal(r);
        d = one(order) - z + r;
    }
    RationalSeries inv_d_pow(long p) const { return series_pow(d, -p); }
};

void require_spec(const GenFunSpec& spec) {
    if (spec.m < 0) throw DomainError("generating-function index m must be >= 0");
    if (spec.order < 0) throw DomainError("series order must be >= 0");
}

RationalSeries closed_form(const GenFunSpec& spec, bool printed) {
    require_spec(spec);
    const int m = spec.m;
    const int order = spec.order;
    const Pieces p(order);
    const RationalSeries zm = one(order).shifted(m);
    const RationalSeries one_plus_z = one(order) + zvar(order);
    switch (spec.family) {
        case Family::F:
            return s2(2 * m - 1) * zm * p.inv_r * p.inv_d_pow(2 * m);
        case Family::G:
            if (m == 0) return zvar(order) * p.inv_r * p.inv_d_pow(1);
            return -s2(2 * m - 2) * zm * p.inv_r * p.inv_d_pow(2 * m - 1);
        case Family::H: {
            RationalSeries h = s2(2 * m - 1) * one_plus_z * zm * p.inv_r * p.inv_d_pow(2 * m + 1);
            return printed ? h : -h;
        }
        case Family::I: {
            if (m == 0) {
                RationalSeries cross = zvar(order) * p.inv_r * p.inv_d_pow(1);
                return printed ? p.inv_r - cross : p.inv_r + cross;
            }
            return s2(2 * m - 2) * one_plus_z * zm * p.inv_r * p.inv_d_pow(2 * m);
        }
    }
    throw DomainError("unknown family");
}

// Coefficient t of the series, from the pointwise Jacobi closed forms.
Sqrt2Scalar pointwise_coefficient(const GenFunSpec& spec, long t, bool split) {
    const long m = spec.m;
    auto tilde = [&](long n, long tt) -> Sqrt2Scalar {
        if (tt < n) return Sqrt2Scalar(0);
        if (n == tt || n == 0 || split) return psi_tilde_L(n, tt);
        return Sqrt2Scalar(make_rational(tt, tt - n)) * psi_closed_L(n, tt);
    };
    switch (spec.family) {
        case Family::F:
            if (t < m) return Sqrt2Scalar(0);
            return split ? psi_split_R(2 * m + 1, 2 * t + 1) : psi_closed_R(2 * m + 1, 2 * t + 1);
        case Family::G:
            if (t < m) return Sqrt2Scalar(0);
            return split ? psi_split_R(2 * m, 2 * t) : psi_closed_R(2 * m, 2 * t);
        case Family::H:
            return tilde(2 * m + 1, 2 * t + 1);
        case Family::I:
            return tilde(2 * m, 2 * t);
    }
    throw DomainError("unknown family");
}

std::string where(const GenFunSpec& spec, long t) {
    return std::string("(family=") + family_name(spec.family) + ", m=" + std::to_string(spec.m) +
           ", t=" + std::to_string(t) + ")";
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::F: return "F";
        case Family::G: return "G";
        case Family::H: return "H";
        case Family::I: return "I";
    }
    return "?";
}

RationalSeries closed_form_series(const GenFunSpec& spec) { return closed_form(spec, false); }

RationalSeries printed_closed_form_series(const GenFunSpec& spec) {
    return closed_form(spec, true);
}

RationalSeries definitional_series(const GenFunSpec& spec, const WalkHistory& walk) {
    require_spec(spec);
    if (walk.orientation() != Orientation::canonical) {
        throw DomainError("definitional series are defined on the canonical walk");
    }
    if (walk.t_max() < 2 * spec.order + 1) {
        throw DomainError("walk history too short for series order " + std::to_string(spec.order));
    }
    const long m = spec.m;
    auto tilde = [&](long n, long tt) -> Sqrt2Scalar {
        if (tt < n) return Sqrt2Scalar(0);
        if (n == tt && tt > 0) return psi_tilde_L(n, tt);
        if (n == 0) return walk.psi_left(0, static_cast<int>(tt));
        return Sqrt2Scalar(make_rational(tt, tt - n)) * walk.psi_left(n, static_cast<int>(tt));
    };
    std::vector<Sqrt2Scalar> c(static_cast<std::size_t>(spec.order) + 1);
    for (long t = 0; t <= spec.order; ++t) {
        Sqrt2Scalar v;
        switch (spec.family) {
            case Family::F: v = walk.psi_right(2 * m + 1, static_cast<int>(2 * t + 1)); break;
            case Family::G: v = walk.psi_right(2 * m, static_cast<int>(2 * t)); break;
            case Family::H: v = tilde(2 * m + 1, 2 * t + 1); break;
            case Family::I: v = tilde(2 * m, 2 * t); break;
        }
        c[static_cast<std::size_t>(t)] = v;
    }
    return RationalSeries::from_scalars(c, spec.order);
}

RationalSeries jacobi_generating(const Rational& x, long r, long s, int order) {
    const RationalSeries z = zvar(order);
    const RationalSeries rr = series_sqrt(one(order) - Sqrt2Scalar(2 * x) * z + z * z);
    return Sqrt2Scalar(pow2(r + s)) * series_reciprocal(rr) * series_pow(one(order) - z + rr, -r) *
           series_pow(one(order) + z + rr, -s);
}

RationalSeries jacobi_form_series(const GenFunSpec& spec) {
    require_spec(spec);
    const int m = spec.m;
    const int order = spec.order;
    const Rational x0 = 0;
    const RationalSeries zm = one(order).shifted(m);
    const RationalSeries one_plus_z = one(order) + zvar(order);
    const Sqrt2Scalar half(make_rational(1, 2));
    switch (spec.family) {
        case Family::F:
            return s2(-2 * m - 1) * zm * jacobi_generating(x0, 2 * m, 0, order);
        case Family::G:
            if (m == 0) return half * zvar(order) * jacobi_generating(x0, 1, 0, order);
            return -s2(-2 * m) * zm * jacobi_generating(x0, 2 * m - 1, 0, order);
        case Family::H:
            return -s2(-2 * m - 3) * one_plus_z * zm * jacobi_generating(x0, 2 * m + 1, 0, order);
        case Family::I:
            if (m == 0) {
                return jacobi_generating(x0, 0, 0, order) +
                       half * zvar(order) * jacobi_generating(x0, 1, 0, order);
            }
            return s2(-2 * m - 2) * one_plus_z * zm * jacobi_generating(x0, 2 * m, 0, order);
    }
    throw DomainError("unknown family");
}

CheckReport check_intermediate_relations(int m, int order) {
    if (m < 0 || order < m + 1) throw DomainError("need m >= 0 and order >= m + 1");
    CheckReport rep;
    rep.name = "intermediate-relations m=" + std::to_string(m);
    auto f = [&](int k) { return closed_form_series({Family::F, k, order}); };
    const RationalSeries z = zvar(order);
    const RationalSeries one_minus_z = one(order) - z;

    const RationalSeries h_rel = (one(order) + z) *
                                 series_reciprocal(Sqrt2Scalar(2) * one_minus_z) * (f(m + 1) - f(m));
    ++rep.cases;
    if (auto d = first_difference(h_rel, closed_form_series({Family::H, m, order}))) {
        rep.fail("H relation differs at coefficient " + std::to_string(*d));
    }

    const RationalSeries fm = f(m);
    const RationalSeries bracket = Sqrt2Scalar(2) * (Sqrt2Scalar(2) * one(order) - z) * fm -
                                   z * f(std::abs(m - 1)) - z * f(m + 1);
    const RationalSeries i_rel =
        s2(1) * series_reciprocal(Sqrt2Scalar(4) * one_minus_z) * bracket;
    ++rep.cases;
    if (auto d = first_difference(i_rel, closed_form_series({Family::I, m, order}))) {
        rep.fail("I relation differs at coefficient " + std::to_string(*d));
    }
    return rep;
}

CheckReport equivalence_ledger(int order, const WalkHistory& walk, int m_max) {
    if (order < 1) throw DomainError("equivalence ledger needs order >= 1");
    CheckReport rep;
    rep.name = "equivalence-ledger";
    for (Family fam : {Family::F, Family::G, Family::H, Family::I}) {
        for (int m = 0; m <= m_max; ++m) {
            const GenFunSpec spec{fam, m, order};
            const RationalSeries def = definitional_series(spec, walk);
            const RationalSeries closed = closed_form_series(spec);
            const RationalSeries jac = jacobi_form_series(spec);
            ++rep.cases;
            if (auto d = first_difference(def, closed)) {
                rep.fail("definitional vs closed form at " + where(spec, *d));
            }
            ++rep.cases;
            if (auto d = first_difference(closed, jac)) {
                rep.fail("closed form vs Jacobi generating form at " + where(spec, *d));
            }
            for (long t = 0; t <= order; ++t) {
                rep.cases += 2;
                if (jac.coeff(static_cast<int>(t)) != pointwise_coefficient(spec, t, false)) {
                    rep.fail("Jacobi generating form vs pointwise closed form at " + where(spec, t));
                }
                if (jac.coeff(static_cast<int>(t)) != pointwise_coefficient(spec, t, true)) {
                    rep.fail("Jacobi generating form vs split closed form at " + where(spec, t));
                }
            }
        }
    }
    return rep;
}

CheckReport equivalence_ledger(int order, int m_max) {
    const WalkHistory walk(2 * order + 1);
    return equivalence_ledger(order, walk, m_max);
}

}  // namespace hwalk
