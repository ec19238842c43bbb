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

#ifndef HWALK_HARNESS_HARNESS_H
#define HWALK_HARNESS_HARNESS_H

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hwalk/report.h"
#include "hwalk/walk/walk_state.h"

namespace hwalk::harness {

enum class OutputFormat { csv, json_report, svg_plot };

/// Everything a run depends on. Identical configs give byte-identical files.
struct RunConfig {
    std::string command;
    int t_max = 60;
    double alpha_start = 0.72;
    double alpha_stop = 0.98;
    double alpha_step = 0.02;
    std::vector<int> times = {100, 200, 400};
    int order = 40;
    double tolerance = 1e-9;
    std::string output_path;
    OutputFormat format = OutputFormat::csv;
    Orientation orientation = Orientation::canonical;
    bool plot = false;
    std::uint64_t seed = 20261014;
    bool inject_fault = false;
    /// 0 means: HWALK_WORKERS if set, else hardware concurrency.
    int workers = 0;
};

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kIoError = 2 };

/// %.17g.
std::string decimal_string(double x);

void write_simulation_csv(const WalkState& s, std::ostream& os);
void write_probability_svg(const WalkState& s, std::ostream& os);
int cmd_simulate(const RunConfig& cfg, std::ostream& log);

struct AsymptoticRow {
    double alpha = 0.0;
    int t = 0;
    long n = 0;
    double alpha_eff = 0.0;
    double exact = 0.0;
    double asymptotic = 0.0;
    double rel_error = 0.0;
    double btilde = 0.0;
    double b = 0.0;
    bool btilde_eq_b = false;
    /// "ok", "excluded" (inside an epsilon zone) or "outside" (oscillatory region).
    std::string status;
};

/// Grid points start, start + step, ... up to stop (inclusive within 1e-9 step).
std::vector<double> alpha_grid(double start, double stop, double step);
std::vector<AsymptoticRow> asymptotic_table(const RunConfig& cfg);
void write_asymptotic_csv(const std::vector<AsymptoticRow>& rows, std::ostream& os);
int cmd_asymptotics(const RunConfig& cfg, std::ostream& log);

/// Suite reports sorted by name.
std::vector<CheckReport> run_verification(const RunConfig& cfg);
std::string verification_json(const RunConfig& cfg, const std::vector<CheckReport>& suites);
int cmd_verify(const RunConfig& cfg, std::ostream& log);

/// Resolves cfg.workers against HWALK_WORKERS and the hardware.
int worker_count(const RunConfig& cfg);

}  // namespace hwalk::harness

#endif  // HWALK_HARNESS_HARNESS_H
