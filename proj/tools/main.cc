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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hwalk/errors.h"
#include "hwalk/harness/harness.h"

using hwalk::harness::RunConfig;

int main(int argc, char** argv) {
    CLI::App app{"exact and asymptotic analysis of the Hadamard walk"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string orientation = "canonical";

    CLI::App* sim = app.add_subcommand("simulate", "amplitude and probability table at time t");
    sim->add_option("--t", cfg.t_max, "number of steps")->required()->check(CLI::NonNegativeNumber);
    sim->add_option("--orientation", orientation, "canonical or as-printed")
        ->check(CLI::IsMember({"canonical", "as-printed", "as_printed"}));
    sim->add_option("--out", cfg.output_path, "CSV output path")->required();
    sim->add_flag("--plot", cfg.plot, "also write an SVG bar plot next to the CSV");

    CLI::App* ver = app.add_subcommand("verify", "run every verification suite");
    ver->add_option("--t-max", cfg.t_max, "largest time checked")->check(CLI::NonNegativeNumber);
    ver->add_option("--order", cfg.order, "series truncation order")->check(CLI::NonNegativeNumber);
    ver->add_option("--seed", cfg.seed, "seed for randomized checks");
    ver->add_option("--tolerance", cfg.tolerance, "quadrature tolerance");
    ver->add_option("--report", cfg.output_path, "JSON report path")->required();
    ver->add_flag("--inject-fault", cfg.inject_fault, "flip one mantissa before checking");

    CLI::App* asy = app.add_subcommand("asymptotics", "decay-region asymptotic error table");
    asy->add_option("--alpha-start", cfg.alpha_start);
    asy->add_option("--alpha-stop", cfg.alpha_stop);
    asy->add_option("--alpha-step", cfg.alpha_step);
    asy->add_option("--t", cfg.times, "times, comma separated")->delimiter(',');
    asy->add_option("--out", cfg.output_path, "CSV output path (default stdout)");

    for (CLI::App* sub : {sim, ver, asy}) {
        sub->add_option("--workers", cfg.workers, "worker threads (default HWALK_WORKERS)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return hwalk::harness::kIoError;
    }

    try {
        cfg.orientation = hwalk::parse_orientation(orientation);
        if (sim->parsed()) {
            cfg.command = "simulate";
            return hwalk::harness::cmd_simulate(cfg, std::cerr);
        }
        if (ver->parsed()) {
            cfg.command = "verify";
            return hwalk::harness::cmd_verify(cfg, std::cerr);
        }
        cfg.command = "asymptotics";
        return hwalk::harness::cmd_asymptotics(cfg, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return hwalk::harness::kIoError;
    }
}
