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

#include "hwalk/harness/harness.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "hwalk/asymptotics/phase.h"
#include "hwalk/errors.h"

namespace hwalk::harness {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

std::string svg_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

std::string svg_path_for(const std::string& csv_path) {
    const auto slash = csv_path.find_last_of('/');
    const auto dot = csv_path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return csv_path + ".svg";
    }
    return csv_path.substr(0, dot) + ".svg";
}

}  // namespace

std::string decimal_string(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

int worker_count(const RunConfig& cfg) {
    if (cfg.workers > 0) return cfg.workers;
    if (const char* env = std::getenv("HWALK_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void write_simulation_csv(const WalkState& s, std::ostream& os) {
    os << "n,t,psiL,psiR,prob,prob_decimal\n";
    const long t = s.time();
    for (long n = -t; n <= t; n += 2) {
        const Rational p = probability(s, n);
        os << n << ',' << t << ',' << s.left(n).to_string() << ',' << s.right(n).to_string() << ','
           << to_string(p) << ',' << decimal_string(to_double(p)) << '\n';
    }
}

void write_probability_svg(const WalkState& s, std::ostream& os) {
    const long t = s.time();
    const double width = 800.0, height = 400.0, margin = 40.0;
    double peak = 0.0;
    std::vector<std::pair<long, double>> bars;
    for (long n = -t; n <= t; n += 2) {
        bars.emplace_back(n, to_double(probability(s, n)));
        peak = std::max(peak, bars.back().second);
    }
    const double span = static_cast<double>(2 * t + 2);
    const double bar_w = (width - 2 * margin) / span * 1.6;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
       << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    for (const auto& [n, p] : bars) {
        const double x = margin + (static_cast<double>(n + t) + 1.0) / span * (width - 2 * margin);
        const double h = peak > 0 ? p / peak * (height - 2 * margin) : 0.0;
        os << "<rect x=\"" << svg_number(x - bar_w / 2) << "\" y=\"" << svg_number(height - margin - h)
           << "\" width=\"" << svg_number(bar_w) << "\" height=\"" << svg_number(h)
           << "\" fill=\"steelblue\"/>\n";
    }
    os << "<text x=\"" << width / 2 << "\" y=\"" << height - 10
       << "\" text-anchor=\"middle\" font-size=\"14\">n (t = " << t << ")</text>\n";
    os << "<text x=\"" << margin << "\" y=\"" << margin - 12
       << "\" font-size=\"14\">probability, peak " << decimal_string(peak) << "</text>\n";
    os << "</svg>\n";
}

int cmd_simulate(const RunConfig& cfg, std::ostream& log) {
    if (cfg.t_max < 0) {
        log << "error: --t must be >= 0\n";
        return kIoError;
    }
    const WalkState s = evolve(initial_state(), cfg.t_max, cfg.orientation);
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) {
        log << "error: cannot write " << cfg.output_path << '\n';
        return kIoError;
    }
    write_simulation_csv(s, out);
    out.close();
    if (!out) {
        log << "error: write failed for " << cfg.output_path << '\n';
        return kIoError;
    }
    if (cfg.plot) {
        const std::string svg = svg_path_for(cfg.output_path);
        std::ofstream plot(svg, std::ios::binary);
        if (!plot) {
            log << "error: cannot write " << svg << '\n';
            return kIoError;
        }
        write_probability_svg(s, plot);
        if (!plot) return kIoError;
    }
    return kSuccess;
}

std::vector<double> alpha_grid(double start, double stop, double step) {
    if (!(step > 0.0) || !(stop >= start) || !std::isfinite(start) || !std::isfinite(stop)) {
        throw std::invalid_argument("alpha grid needs step > 0 and stop >= start");
    }
    const long count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 1000000) throw std::invalid_argument("alpha grid too large");
    std::vector<double> g;
    for (long i = 0; i < count; ++i) g.push_back(start + static_cast<double>(i) * step);
    return g;
}

std::vector<AsymptoticRow> asymptotic_table(const RunConfig& cfg) {
    const std::vector<double> alphas = alpha_grid(cfg.alpha_start, cfg.alpha_stop, cfg.alpha_step);
    for (int t : cfg.times) {
        if (t <= 0) throw std::invalid_argument("asymptotic times must be positive");
    }
    for (double a : alphas) {
        if (std::abs(a) > 1.0) throw std::invalid_argument("alpha outside [-1, 1]");
    }
    std::vector<int> times = cfg.times;
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    std::map<int, WalkState> states;
    WalkState s = initial_state();
    for (int t : times) {
        s = evolve(s, t - s.time());
        states.emplace(t, s);
    }

    std::vector<AsymptoticRow> rows;
    for (double alpha : alphas) {
        for (int t : cfg.times) {
            AsymptoticRow r;
            r.alpha = alpha;
            r.t = t;
            r.n = t - 2 * std::lround((static_cast<double>(t) - alpha * t) / 2.0);
            r.alpha_eff = static_cast<double>(r.n) / t;
            r.exact = states.at(t).right(r.n).to_double();
            const double a = std::abs(alpha);
            const double eps = kDefaultAiryExclusion;
            if (a > 1.0 / kSqrt2 && a < 1.0) {
                r.btilde = btilde(a);
                r.b = b_pathintegral(a);
                r.btilde_eq_b = std::abs(r.btilde - r.b) <= 1e-12;
            } else {
                r.btilde = r.b = NAN;
            }
            if (std::abs(a - 1.0 / kSqrt2) <= eps || a >= 1.0 - eps) {
                r.status = "excluded";
            } else if (a < 1.0 / kSqrt2) {
                r.status = "outside";
            } else {
                try {
                    r.asymptotic = psi_asymptotic(r.n, t, eps).first;
                    r.rel_error = std::abs(r.asymptotic / r.exact - 1.0);
                    r.status = "ok";
                } catch (const ValidityError&) {
                    r.status = "excluded";
                }
            }
            if (r.status != "ok") r.asymptotic = r.rel_error = NAN;
            rows.push_back(r);
        }
    }
    return rows;
}

void write_asymptotic_csv(const std::vector<AsymptoticRow>& rows, std::ostream& os) {
    auto num = [](double x) { return std::isnan(x) ? std::string() : decimal_string(x); };
    os << "alpha,t,n,alpha_eff,exact,asymptotic,rel_error,btilde,b,btilde_eq_b,status\n";
    for (const AsymptoticRow& r : rows) {
        os << num(r.alpha) << ',' << r.t << ',' << r.n << ',' << num(r.alpha_eff) << ','
           << num(r.exact) << ',' << num(r.asymptotic) << ',' << num(r.rel_error) << ','
           << num(r.btilde) << ',' << num(r.b) << ','
           << (std::isnan(r.btilde) ? "" : (r.btilde_eq_b ? "true" : "false")) << ',' << r.status
           << '\n';
    }
}

int cmd_asymptotics(const RunConfig& cfg, std::ostream& log) {
    std::vector<AsymptoticRow> rows;
    try {
        rows = asymptotic_table(cfg);
    } catch (const std::invalid_argument& e) {
        log << "error: " << e.what() << '\n';
        return kIoError;
    }
    if (cfg.output_path.empty()) {
        write_asymptotic_csv(rows, std::cout);
        return kSuccess;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) {
        log << "error: cannot write " << cfg.output_path << '\n';
        return kIoError;
    }
    write_asymptotic_csv(rows, out);
    out.close();
    return out ? kSuccess : kIoError;
}

}  // namespace hwalk::harness
