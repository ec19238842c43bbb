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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "hwalk/asymptotics/integrals.h"
#include "hwalk/genfun/generating.h"
#include "hwalk/genfun/lagrange.h"
#include "hwalk/harness/harness.h"
#include "hwalk/jacobi/jacobi.h"
#include "json.hpp"

namespace hwalk::harness {

namespace {

constexpr int kQuadratureTCap = 50;

std::string point(long n, long t) {
    return "(n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")";
}

Rational random_rational(std::mt19937_64& rng, long range) {
    std::uniform_int_distribution<long> num(-range, range), den(1, range);
    return make_rational(num(rng), den(rng));
}

CheckReport exact_equivalence(const WalkHistory& h, int t_max) {
    CheckReport rep;
    rep.name = "exact-equivalence";
    rep.vacuous = t_max <= 0;
    for (long t = 0; t <= t_max; ++t) {
        for (long n = -t; n <= t; n += 2) {
            ++rep.cases;
            const Sqrt2Scalar r = h.psi_right(n, static_cast<int>(t));
            const Sqrt2Scalar l = h.psi_left(n, static_cast<int>(t));
            if (psi_closed_R(n, t) != r || psi_closed_L(n, t) != l) {
                rep.fail("closed form differs at " + point(n, t));
            }
            if (n > -t) {
                for (Branch b : {Branch::nonnegative, Branch::negative}) {
                    if (psi_branch_R(n, t, b) != r || psi_branch_L(n, t, b) != l) {
                        rep.fail("branch form differs at " + point(n, t));
                    }
                }
            }
            if (n >= 0) {
                if (psi_split_R(n, t) != r || psi_split_L(n, t) != l) {
                    rep.fail("split form differs at " + point(n, t));
                }
                if (n < t && Sqrt2Scalar(t - n) * psi_tilde_L(n, t) != Sqrt2Scalar(t) * l) {
                    rep.fail("tilde form differs at " + point(n, t));
                }
            }
        }
    }
    return rep;
}

CheckReport generating_functions(const WalkHistory& h, int order) {
    const int m_max = std::min(10, order - 1);
    if (m_max < 0) {
        CheckReport rep;
        rep.name = "generating-function";
        rep.vacuous = true;
        return rep;
    }
    std::vector<CheckReport> parts{equivalence_ledger(order, h, m_max)};
    for (int m = 0; m <= m_max; ++m) parts.push_back(check_intermediate_relations(m, order));
    return combine("generating-function", parts);
}

CheckReport jacobi_suite(int t_max, int order, std::uint64_t seed) {
    CheckReport gen;
    gen.name = "generating coefficients";
    const int k_max = std::min(order, t_max);
    std::mt19937_64 rng(seed);
    std::vector<Rational> xs{Rational(0), make_rational(1, 2), make_rational(-1, 2)};
    for (int i = 0; i < 3; ++i) xs.push_back(random_rational(rng, 7));
    if (k_max > 0) {
        for (const Rational& x : xs) {
            for (long r = 0; r <= 5; ++r) {
                for (long s = 0; s <= 5; ++s) {
                    const RationalSeries g = jacobi_generating(x, r, s, k_max);
                    for (int k = 0; k <= k_max; ++k) {
                        ++gen.cases;
                        if (g.rational_coeff(k) != jacobi_at(k, r, s, x)) {
                            gen.fail("coefficient k=" + std::to_string(k) + " r=" + std::to_string(r) +
                                     " s=" + std::to_string(s) + " x=" + x.get_str());
                        }
                    }
                }
            }
        }
    }
    gen.vacuous = k_max <= 0;
    CheckReport ids = t_max > 0 ? check_jacobi_identities({std::min(20, t_max), 6, xs}) : CheckReport{};
    ids.name = "identities";
    ids.vacuous = t_max <= 0;
    return combine("jacobi-identity", {gen, ids});
}

CheckReport quadrature_suite(int t_max, double tol) {
    CheckReport rep;
    rep.name = "quadrature";
    const int t_cap = std::min(t_max, kQuadratureTCap);
    rep.vacuous = t_cap <= 0;
    WalkState s = initial_state();
    for (long t = 0; t <= t_cap; ++t) {
        for (long n = -t; n <= t; n += 2) {
            ++rep.cases;
            auto [r, l] = quadrature_psi(n, t, std::max(1e-12, tol / 100));
            const double e = std::max(std::abs(r.value - s.right(n).to_double()),
                                      std::abs(l.value - s.left(n).to_double()));
            rep.record_error(e);
            if (e > tol) rep.fail("quadrature off by " + std::to_string(e) + " at " + point(n, t));
        }
        if (t < t_cap) s = step(s);
    }
    return rep;
}

CheckReport lagrange_suite(int t_max, int order, std::uint64_t seed) {
    CheckReport rep;
    rep.name = "lagrange";
    const int n_max = std::min(20, t_max);
    rep.vacuous = n_max <= 0;
    if (n_max <= 0) return rep;
    const RationalSeries z = RationalSeries::variable(n_max);
    const RationalSeries e = series_exp(z);
    const RationalSeries w = lagrange_invert({e, z, n_max});
    const RationalSeries w2 = lagrange_invert({e, z * z, n_max});
    for (long n = 1; n <= n_max; ++n) {
        rep.cases += 2;
        if (w.rational_coeff(static_cast<int>(n)) != pow(Rational(n), n - 1) / Rational(factorial(n))) {
            rep.fail("tree coefficient n=" + std::to_string(n));
        }
        const Rational want = n >= 2 ? 2 * pow(Rational(n), n - 3) / Rational(factorial(n - 2)) : Rational(0);
        if (w2.rational_coeff(static_cast<int>(n)) != want) rep.fail("w^2 coefficient n=" + std::to_string(n));
    }
    const int ss_order = std::min(order, t_max);
    const RationalSeries ss = srivastava_singhal_series({0, 0, 0, 0, ss_order});
    for (int k = 0; k <= ss_order; ++k) {
        ++rep.cases;
        const Rational want = k % 2 ? Rational(0) : binomial(make_rational(-1, 2), k / 2);
        if (ss.rational_coeff(k) != want) rep.fail("zero-parameter coefficient " + std::to_string(k));
    }
    // w = z phi(w) for random phi with phi(0) = 1
    std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
    for (int i = 0; i < 20; ++i) {
        const int ord = 1 + static_cast<int>(rng() % 10);
        std::vector<Rational> c(static_cast<std::size_t>(ord) + 1);
        for (auto& x : c) x = random_rational(rng, 9);
        c[0] = 1;
        const RationalSeries phi(std::move(c), ord);
        const RationalSeries root = lagrange_invert({phi, RationalSeries::variable(ord), ord});
        ++rep.cases;
        if (compose(phi, root).shifted(1) != root) rep.fail("functional equation, random case " + std::to_string(i));
    }
    return rep;
}

WalkHistory build_history(const RunConfig& cfg, int order) {
    const int t_hist = std::max(cfg.t_max, 2 * order + 1);
    WalkHistory h(t_hist);
    if (cfg.inject_fault && cfg.t_max >= 1) {
        const int t = std::max(1, std::min(cfg.t_max, 2 * std::max(1, cfg.t_max / 4)));
        const WalkState& s = h.at(t);
        h = h.with_state(t, s.with_right_mantissa(t, -s.right_mantissa(t)));
    }
    return h;
}

nlohmann::json suite_json(const CheckReport& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["vacuous"] = r.vacuous;
    j["cases"] = r.cases;
    j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
    j["max_error"] = r.max_error ? nlohmann::json(*r.max_error) : nlohmann::json(nullptr);
    return j;
}

}  // namespace

std::vector<CheckReport> run_verification(const RunConfig& cfg) {
    const int t_max = std::max(0, cfg.t_max);
    const int order = std::max(0, std::min(cfg.order, t_max));
    const WalkHistory h = build_history(cfg, order);

    std::vector<std::function<CheckReport()>> jobs{
        [&] { return exact_equivalence(h, t_max); },
        [&] {
            CheckReport r = check_symmetry_range(h, t_max);
            r.name = "symmetry";
            return r;
        },
        [&] { return generating_functions(h, order); },
        [&] { return jacobi_suite(t_max, order, cfg.seed); },
        [&] { return quadrature_suite(t_max, cfg.tolerance); },
        [&] { return lagrange_suite(t_max, order, cfg.seed); },
    };
    std::vector<CheckReport> out(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < jobs.size();) {
            try {
                out[i] = jobs[i]();
            } catch (const std::exception& e) {
                out[i].fail(std::string("exception: ") + e.what());
            }
        }
    };
    const int n_workers = std::min<int>(worker_count(cfg), static_cast<int>(jobs.size()));
    std::vector<std::thread> pool;
    for (int i = 1; i < n_workers; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    static const char* names[] = {"exact-equivalence", "symmetry", "generating-function",
                                  "jacobi-identity",   "quadrature", "lagrange"};
    for (std::size_t i = 0; i < out.size(); ++i) out[i].name = names[i];
    std::sort(out.begin(), out.end(),
              [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
    return out;
}

std::string verification_json(const RunConfig& cfg, const std::vector<CheckReport>& suites) {
    nlohmann::json j;
    j["command"] = "verify";
    j["config"] = {{"t_max", cfg.t_max},
                   {"order", cfg.order},
                   {"seed", cfg.seed},
                   {"tolerance", cfg.tolerance},
                   {"inject_fault", cfg.inject_fault}};
    bool all = true;
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckReport& r : suites) {
        all = all && r.passed;
        arr.push_back(suite_json(r));
    }
    j["passed"] = all;
    j["suites"] = arr;
    return j.dump(2) + "\n";
}

int cmd_verify(const RunConfig& cfg, std::ostream& log) {
    const std::vector<CheckReport> suites = run_verification(cfg);
    bool all = true;
    for (const CheckReport& r : suites) {
        all = all && r.passed;
        log << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases"
            << (r.vacuous ? ", vacuous" : "") << ")";
        if (r.witness) log << ": " << *r.witness;
        log << '\n';
    }
    if (!cfg.output_path.empty()) {
        std::ofstream out(cfg.output_path, std::ios::binary);
        if (!out) {
            log << "error: cannot write " << cfg.output_path << '\n';
            return kIoError;
        }
        out << verification_json(cfg, suites);
        out.close();
        if (!out) return kIoError;
    }
    return all ? kSuccess : kVerificationFailure;
}

}  // namespace hwalk::harness
