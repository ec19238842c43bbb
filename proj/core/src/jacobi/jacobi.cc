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

#include "hwalk/jacobi/jacobi.h"

#include <sstream>
#include <string>

#include "hwalk/errors.h"
#include "hwalk/walk/walk_state.h"

namespace hwalk {

namespace {

void require_lattice_point(long n, long t) {
    if (t < 0 || n < -t || n > t) throw DomainError("position outside [-t, t]");
    if ((n + t) % 2 != 0) throw DomainError("n and t must have the same parity");
}

void require_interior(long n, long t) {
    require_lattice_point(n, t);
    if (n == -t) throw DomainError("Jacobi branch forms exclude n = -t");
}

Sqrt2Scalar jac0(long k, long r, long s) { return Sqrt2Scalar(jacobi_at(k, r, s, Rational(0))); }

Sqrt2Scalar l_phase(long t, PhaseConvention c) {
    return Sqrt2Scalar(c == PhaseConvention::printed ? sign_pow(t) : 1);
}

std::string point(long n, long t) {
    return "(n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")";
}

}  // namespace

Rational jacobi_at(long k, long r, long s, const Rational& x) {
    if (k < 0) return Rational(0);
    const Rational xm = x - 1;
    const Rational xp = x + 1;
    std::vector<Rational> pm(static_cast<std::size_t>(k) + 1), pp(static_cast<std::size_t>(k) + 1);
    pm[0] = 1;
    pp[0] = 1;
    for (long i = 1; i <= k; ++i) {
        pm[i] = pm[i - 1] * xm;
        pp[i] = pp[i - 1] * xp;
    }
    Rational sum = 0;
    for (long j = 0; j <= k; ++j) {
        Integer c = binomial(k + r, j) * binomial(k + s, k - j);
        if (c != 0) sum += Rational(c) * pm[k - j] * pp[j];
    }
    return sum * pow2(-k);
}

Sqrt2Scalar psi_branch_R(long n, long t, Branch b) {
    require_interior(n, t);
    const Sqrt2Scalar sign(sign_pow((t - n) / 2) * sign_pow(n + 1));
    if (b == Branch::nonnegative) {
        return sign * Sqrt2Scalar::sqrt2_power(-n) * jac0((t - n) / 2, 0, n - 1);
    }
    return sign * Sqrt2Scalar::sqrt2_power(n - 2) * jac0((t + n) / 2 - 1, 0, 1 - n);
}

Sqrt2Scalar psi_branch_L(long n, long t, Branch b, PhaseConvention c) {
    require_interior(n, t);
    // these expressions carry the printed phase
    const Sqrt2Scalar sign(-sign_pow((t - n) / 2));
    Sqrt2Scalar v;
    if (b == Branch::nonnegative) {
        v = sign * Sqrt2Scalar::sqrt2_power(-n - 2) * jac0((t - n) / 2 - 1, 1, n);
    } else {
        v = sign * Sqrt2Scalar(make_rational(t - n, t + n)) * Sqrt2Scalar::sqrt2_power(n - 2) *
            jac0((t + n) / 2 - 1, 1, -n);
    }
    return c == PhaseConvention::integral ? Sqrt2Scalar(sign_pow(t)) * v : v;
}

Sqrt2Scalar psi_closed_R(long n, long t) {
    require_lattice_point(n, t);
    if (t == 0) return Sqrt2Scalar(0);
    if (n == t) return Sqrt2Scalar(sign_pow(t + 1)) * Sqrt2Scalar::sqrt2_power(-t);
    if (n == -t) return Sqrt2Scalar(0);
    return psi_branch_R(n, t, n >= 0 ? Branch::nonnegative : Branch::negative);
}

Sqrt2Scalar psi_closed_L(long n, long t, PhaseConvention c) {
    require_lattice_point(n, t);
    if (t == 0) return Sqrt2Scalar(1);
    if (n == t) return Sqrt2Scalar(0);
    if (n == -t) return l_phase(t, c) * Sqrt2Scalar::sqrt2_power(-t);
    return psi_branch_L(n, t, n >= 0 ? Branch::nonnegative : Branch::negative, c);
}

Sqrt2Scalar psi_split_R(long n, long t) {
    require_lattice_point(n, t);
    if (n < 0) throw DomainError("split forms need n >= 0");
    if (n % 2 != 0) {
        const long m = (n - 1) / 2, tt = (t - 1) / 2;
        return Sqrt2Scalar::sqrt2_power(-2 * m - 1) * jac0(tt - m, 2 * m, 0);
    }
    const long m = n / 2, tt = t / 2;
    if (m == 0) return Sqrt2Scalar(make_rational(1, 2)) * jac0(tt - 1, 1, 0);
    return -Sqrt2Scalar(pow2(-m)) * jac0(tt - m, 2 * m - 1, 0);
}

Sqrt2Scalar psi_split_L(long n, long t, PhaseConvention c) {
    require_lattice_point(n, t);
    if (n < 0) throw DomainError("split forms need n >= 0");
    Sqrt2Scalar v;
    if (n % 2 != 0) {
        const long m = (n - 1) / 2, tt = (t - 1) / 2;
        v = Sqrt2Scalar(-sign_pow(tt - m - 1)) * Sqrt2Scalar::sqrt2_power(-2 * m - 3) *
            jac0(tt - m - 1, 1, 2 * m + 1);
    } else {
        const long m = n / 2, tt = t / 2;
        if (m == 0) {
            v = jac0(tt, 0, 0) + Sqrt2Scalar(make_rational(1, 2)) * jac0(tt - 1, 1, 0);
        } else {
            v = Sqrt2Scalar(sign_pow(tt - m - 1) * pow2(-m - 1)) * jac0(tt - m - 1, 1, 2 * m);
        }
    }
    return l_phase(t, c) * v;
}

Sqrt2Scalar psi_tilde_L(long n, long t, PhaseConvention c) {
    require_lattice_point(n, t);
    if (n < 0) throw DomainError("psi~_L is only tabulated for n >= 0");
    if (n == 0) return psi_split_L(0, t, c);
    Sqrt2Scalar v;
    if (n % 2 != 0) {
        const long m = (n - 1) / 2, tt = (t - 1) / 2;
        v = -Sqrt2Scalar::sqrt2_power(-2 * m - 3) *
            Sqrt2Scalar(jacobi_at(tt - m, 2 * m + 1, 0, 0) + jacobi_at(tt - m - 1, 2 * m + 1, 0, 0));
    } else {
        const long m = n / 2, tt = t / 2;
        v = Sqrt2Scalar(pow2(-m - 1) *
                        (jacobi_at(tt - m, 2 * m, 0, 0) + jacobi_at(tt - m - 1, 2 * m, 0, 0)));
    }
    return l_phase(t, c) * v;
}

bool check_symmetry(const WalkHistory& h, long n, long t) {
    const Sqrt2Scalar r_lhs = h.psi_right(-n, static_cast<int>(t));
    const Sqrt2Scalar r_rhs = Sqrt2Scalar(sign_pow(n + 1)) * h.psi_right(n + 2, static_cast<int>(t));
    const Sqrt2Scalar l_lhs = Sqrt2Scalar(t - n) * h.psi_left(-n, static_cast<int>(t));
    const Sqrt2Scalar l_rhs = Sqrt2Scalar(sign_pow(n) * (t + n)) * h.psi_left(n, static_cast<int>(t));
    return r_lhs == r_rhs && l_lhs == l_rhs;
}

CheckReport check_symmetry_range(const WalkHistory& h, int t_max) {
    CheckReport rep;
    rep.name = "symmetry";
    for (long t = 0; t <= t_max; ++t) {
        for (long n = -t; n <= t; n += 2) {
            ++rep.cases;
            if (!check_symmetry(h, n, t)) rep.fail("symmetry violated at " + point(n, t));
        }
    }
    rep.vacuous = t_max <= 0;
    return rep;
}

CheckReport check_jacobi_identities(const JacobiIdentityRange& range) {
    CheckReport rep;
    rep.name = "jacobi-identities";
    auto witness = [](const char* id, long a, long b, long c, const Rational& x) {
        std::ostringstream os;
        os << id << " (" << a << ", " << b << ", " << c << ", x=" << x.get_str() << ")";
        return os.str();
    };
    for (const Rational& x : range.xs) {
        const Rational half_xp = (x + 1) / 2;
        for (long m = 0; m <= range.m_max; ++m) {
            for (long u = 0; u <= range.param_max; ++u) {
                for (long l = 0; l <= m; ++l) {
                    ++rep.cases;
                    Rational lhs = Rational(binomial(m, l)) * jacobi_at(m, u, -l, x);
                    Rational rhs = Rational(binomial(m + u, l)) * pow(half_xp, l) *
                                   jacobi_at(m - l, u, l, x);
                    if (lhs != rhs) rep.fail(witness("jacsym m,u,l", m, u, l, x));
                }
                for (long v = 0; v <= range.param_max; ++v) {
                    ++rep.cases;
                    if (jacobi_at(m, u, v, -x) != sign_pow(m) * jacobi_at(m, v, u, x)) {
                        rep.fail(witness("jsym n,r,s", m, u, v, x));
                    }
                    ++rep.cases;
                    Rational lhs = (u + v + 2 * m) * jacobi_at(m, u, v - 1, x);
                    Rational rhs = (u + v + m) * jacobi_at(m, u, v, x) +
                                   (u + m) * jacobi_at(m - 1, u, v, x);
                    if (lhs != rhs) rep.fail(witness("jaceq k,u,v", m, u, v, x));
                }
            }
        }
    }
    rep.vacuous = rep.cases == 0;
    return rep;
}

}  // namespace hwalk
