// Copyright 2026 The cdc5 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>

#include "CLI11.hpp"
#include "cdc5_tools/harness.hpp"

namespace {

using cdc5::tools::RunConfig;

void add_guard_options(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--dim-guard", config.dimension_guard, "Largest cycle-space dimension to enumerate")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget-ms", config.budget_ms, "Wall-clock budget per search in milliseconds (0: none)")
        ->check(CLI::NonNegativeNumber);
}

void add_format_option(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--format", config.format, "Report format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, cdc5::tools::ReportFormat>{{"table", cdc5::tools::ReportFormat::table},
                                                            {"json", cdc5::tools::ReportFormat::json}},
            CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cdc5: search and verify small cycle double covers of cubic graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "cdc5 0.1.0");

    RunConfig config;
    config.workers = cdc5::tools::default_workers();
    bool no_timing = false;

    auto* verify = app.add_subcommand("verify", "Re-check certificate files");
    verify->add_option("certificates", config.inputs, "Certificate JSON files")->required();

    auto* find = app.add_subcommand("find", "Find a cover of at most 5 elements containing a circuit");
    find->add_option("--graph", config.inputs, "graph6 file")->required()->expected(1);
    find->add_option("--index", config.index, "Zero-based graph position in the file");
    auto* circuit = find->add_option("--circuit", config.circuit, "Circuit as a vertex sequence v0,v1,...");
    find->add_option("--circuit-edges", config.circuit, "Circuit as edge identifiers e0,e1,...")
        ->excludes(circuit)
        ->each([&](const std::string&) { config.circuit_as_edges = true; });
    find->add_option("--out", config.out_dir, "Directory for the certificate (default: current)");
    add_guard_options(find, config);

    auto* sweep = app.add_subcommand("sweep", "Check every circuit of every graph in the files");
    sweep->add_option("--graph", config.inputs, "graph6 files")->required();
    sweep->add_option("--out", config.out_dir, "Directory for certificates and report.json");
    sweep->add_option("--workers", config.workers, "Worker threads (default: CDC5_WORKERS or core count)")
        ->check(CLI::PositiveNumber);
    sweep->add_flag("--keep-going", config.keep_going, "Continue past a counterexample");
    add_guard_options(sweep, config);
    add_format_option(sweep, config);

    auto* stats = app.add_subcommand("stats", "Summarize the graphs in the files");
    stats->add_option("--graph", config.inputs, "graph6 files")->required();
    stats->add_option("--dim-guard", config.dimension_guard, "Largest dimension for circuit counts")
        ->check(CLI::PositiveNumber);
    add_format_option(stats, config);

    for (auto* cmd : {find, sweep})
        cmd->add_flag("--no-timing", no_timing, "Write elapsed times as 0 for reproducible output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cdc5::tools::exit_usage;
    }
    config.include_timing = !no_timing;

    if (verify->parsed()) return cdc5::tools::cmd_verify(config, std::cout, std::cerr);
    if (find->parsed()) return cdc5::tools::cmd_find(config, std::cout, std::cerr);
    if (sweep->parsed()) return cdc5::tools::cmd_sweep(config, std::cout, std::cerr);
    return cdc5::tools::cmd_stats(config, std::cout, std::cerr);
}
