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

#ifndef CDC5_TOOLS_HARNESS_HPP
#define CDC5_TOOLS_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cdc5/cdc5.hpp"

namespace cdc5::tools {

enum ExitCode : int {
    exit_ok = 0,
    exit_negative = 1,
    exit_usage = 2,
    exit_inconclusive = 3,
};

/// Combines statuses from independent items: 1 outranks 2, 2 outranks 3.
int worse_status(int a, int b) noexcept;

enum class ReportFormat { table, json };

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    /// Zero-based position among the graph lines of the input file.
    std::size_t index = 0;
    /// Vertex sequence "v0,v1,..." (closed implicitly) or, with
    /// circuit_as_edges, a comma-separated list of edge identifiers.
    std::string circuit;
    bool circuit_as_edges = false;
    std::string out_dir;
    int dimension_guard = default_dimension_guard;
    std::int64_t budget_ms = 0;
    int workers = 1;
    ReportFormat format = ReportFormat::table;
    /// Sweep keeps going past a counterexample instead of stopping.
    bool keep_going = false;
    /// Writes elapsed times as 0 so reruns compare byte for byte.
    bool include_timing = true;
};

/// Throws PreconditionError for non-positive guards or an empty input list.
void validate(const RunConfig& config);

/// Worker count from CDC5_WORKERS, else the logical core count.
int default_workers();

struct CatalogEntry {
    /// One-based line in the file.
    std::size_t line = 0;
    /// Zero-based among the graph lines.
    std::size_t index = 0;
    std::string text;
    std::optional<MultiGraph> graph;
    std::string error;
};

/// Graph lines of a graph6 file; '>' comment lines and blank lines are
/// skipped. Lines that fail to parse keep their error. Throws Error if the
/// file cannot be read.
std::vector<CatalogEntry> read_catalog(const std::string& path);

/// Circuit spec to an edge set of g. Throws PreconditionError if the spec is
/// malformed or does not describe a circuit of g.
EdgeSet parse_circuit(const MultiGraph& g, const std::string& spec, bool as_edges);

struct CircuitResult {
    std::vector<int> circuit;
    Outcome outcome = Outcome::inconclusive;
    std::string certificate_file;
    std::string note;
};

enum class GraphStatus { checked, rejected, inconclusive, skipped };

const char* to_string(GraphStatus s) noexcept;

struct GraphResult {
    std::string file;
    std::size_t line = 0;
    std::size_t index = 0;
    std::string text;
    int n = 0;
    int m = 0;
    GraphStatus status = GraphStatus::checked;
    std::string reason;
    std::vector<CircuitResult> circuits;
    std::size_t found = 0;
    std::size_t none = 0;
    std::size_t inconclusive = 0;
};

struct BatchReport {
    std::vector<GraphResult> graphs;
    std::size_t found = 0;
    std::size_t none = 0;
    std::size_t inconclusive = 0;
    std::size_t rejected = 0;
    std::size_t skipped = 0;
    bool aborted = false;
    std::int64_t elapsed_ms = 0;

    int exit_status() const noexcept;
};

std::string report_json(const BatchReport& report, bool include_timing);
std::string report_table(const BatchReport& report);

/// Runs the sweep without touching stdout; certificates go to out_dir when set.
BatchReport run_sweep(const RunConfig& config);

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_find(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cdc5::tools

#endif  // CDC5_TOOLS_HARNESS_HPP
