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

#include "cdc5_tools/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace cdc5::tools {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

int severity(int status) noexcept {
    switch (status) {
        case exit_negative:
            return 3;
        case exit_usage:
            return 2;
        case exit_inconclusive:
            return 1;
        default:
            return 0;
    }
}

std::int64_t millis_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::vector<int> parse_int_list(const std::string& spec) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t end = spec.find(',', pos);
        if (end == std::string::npos) end = spec.size();
        std::string_view tok(spec.data() + pos, end - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw PreconditionError("circuit spec '" + spec + "' has a malformed entry '" + std::string(tok) + "'");
        out.push_back(value);
        pos = end + 1;
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw Error("cannot write " + path.string());
}

std::string rejection_reason(const MultiGraph& g) {
    if (!g.is_cubic()) return "graph is not cubic";
    if (const EdgeSet b = bridges(g); b.any()) {
        const Edge& e = g.edge(b.ids().front());
        return "graph has a bridge (edge " + std::to_string(b.ids().front()) + " = " + std::to_string(e.u) + "-" +
               std::to_string(e.v) + ")";
    }
    return {};
}

}  // namespace

int worse_status(int a, int b) noexcept { return severity(b) > severity(a) ? b : a; }

void validate(const RunConfig& config) {
    if (config.inputs.empty()) throw PreconditionError("no input file given");
    if (config.dimension_guard <= 0) throw PreconditionError("--dim-guard must be positive");
    if (config.budget_ms < 0) throw PreconditionError("--budget-ms must not be negative");
    if (config.workers <= 0) throw PreconditionError("--workers must be positive");
}

int default_workers() {
    if (const char* env = std::getenv("CDC5_WORKERS")) {
        int value = 0;
        const std::string_view s(env);
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec == std::errc() && ptr == s.data() + s.size() && value > 0) return value;
    }
    return hardware_workers();
}

std::vector<CatalogEntry> read_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::vector<CatalogEntry> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '>') continue;
        CatalogEntry entry;
        entry.line = number;
        entry.index = out.size();
        entry.text = line;
        try {
            entry.graph = parse_graph6(line);
        } catch (const Error& e) {
            entry.error = e.what();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

EdgeSet parse_circuit(const MultiGraph& g, const std::string& spec, bool as_edges) {
    const std::vector<int> items = parse_int_list(spec);
    EdgeSet s = g.empty_set();
    if (as_edges) {
        for (int e : items) {
            if (e < 0 || e >= g.edge_count())
                throw PreconditionError("edge " + std::to_string(e) + " is outside 0.." + std::to_string(g.edge_count() - 1));
            if (s.test(static_cast<std::size_t>(e))) throw PreconditionError("edge " + std::to_string(e) + " is repeated");
            s.set(static_cast<std::size_t>(e));
        }
    } else {
        if (items.size() < 2) throw PreconditionError("a circuit needs at least two vertices");
        std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
        for (int v : items) {
            if (v < 0 || v >= g.vertex_count())
                throw PreconditionError("vertex " + std::to_string(v) + " is outside 0.." + std::to_string(g.vertex_count() - 1));
            if (seen[static_cast<std::size_t>(v)]) throw PreconditionError("vertex " + std::to_string(v) + " is repeated");
            seen[static_cast<std::size_t>(v)] = 1;
        }
        for (std::size_t i = 0; i < items.size(); ++i) {
            const Vertex a = items[i], b = items[(i + 1) % items.size()];
            const auto inc = g.incident(a);
            const auto it = std::find_if(inc.begin(), inc.end(), [&](EdgeId e) {
                return g.edge(e).other(a) == b && !g.edge(e).is_loop() && !s.test(static_cast<std::size_t>(e));
            });
            if (it == inc.end())
                throw PreconditionError("vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
            s.set(static_cast<std::size_t>(*it));
        }
    }
    if (!is_circuit(g, s)) throw PreconditionError("'" + spec + "' is not a circuit of the graph");
    return s;
}

const char* to_string(GraphStatus s) noexcept {
    switch (s) {
        case GraphStatus::checked:
            return "checked";
        case GraphStatus::rejected:
            return "rejected";
        case GraphStatus::inconclusive:
            return "inconclusive";
        case GraphStatus::skipped:
            return "skipped";
    }
    return "?";
}

int BatchReport::exit_status() const noexcept {
    int status = exit_ok;
    if (none > 0) status = worse_status(status, exit_negative);
    if (rejected > 0) status = worse_status(status, exit_usage);
    if (inconclusive > 0 || std::any_of(graphs.begin(), graphs.end(), [](const GraphResult& g) {
            return g.status == GraphStatus::inconclusive;
        }))
        status = worse_status(status, exit_inconclusive);
    return status;
}

std::string report_json(const BatchReport& report, bool include_timing) {
    Json graphs = Json::array();
    for (const GraphResult& g : report.graphs) {
        Json circuits = Json::array();
        for (const CircuitResult& c : g.circuits) {
            Json jc;
            jc["circuit"] = c.circuit;
            jc["outcome"] = to_string(c.outcome);
            jc["certificate"] = c.certificate_file.empty() ? Json(nullptr) : Json(c.certificate_file);
            if (!c.note.empty()) jc["note"] = c.note;
            circuits.push_back(std::move(jc));
        }
        Json jg;
        jg["file"] = g.file;
        jg["line"] = g.line;
        jg["index"] = g.index;
        jg["graph6"] = g.text;
        jg["n"] = g.n;
        jg["m"] = g.m;
        jg["status"] = to_string(g.status);
        if (!g.reason.empty()) jg["reason"] = g.reason;
        jg["found"] = g.found;
        jg["none"] = g.none;
        jg["inconclusive"] = g.inconclusive;
        jg["circuits"] = std::move(circuits);
        graphs.push_back(std::move(jg));
    }
    Json doc;
    doc["graphs"] = std::move(graphs);
    doc["totals"] = {{"graphs", report.graphs.size()}, {"found", report.found},       {"none", report.none},
                     {"inconclusive", report.inconclusive}, {"rejected", report.rejected}, {"skipped", report.skipped}};
    doc["aborted"] = report.aborted;
    doc["elapsed_ms"] = include_timing ? report.elapsed_ms : 0;
    doc["exit_status"] = report.exit_status();
    return doc.dump(2) + "\n";
}

std::string report_table(const BatchReport& report) {
    std::ostringstream out;
    out << std::left << std::setw(6) << "line" << std::setw(6) << "index" << std::setw(5) << "n" << std::setw(5) << "m"
        << std::setw(14) << "status" << std::setw(8) << "found" << std::setw(6) << "none" << std::setw(14)
        << "inconclusive" << "note\n";
    for (const GraphResult& g : report.graphs) {
        out << std::setw(6) << g.line << std::setw(6) << g.index << std::setw(5) << g.n << std::setw(5) << g.m
            << std::setw(14) << to_string(g.status) << std::setw(8) << g.found << std::setw(6) << g.none << std::setw(14)
            << g.inconclusive << g.reason << "\n";
        for (const CircuitResult& c : g.circuits) {
            if (c.outcome == Outcome::found) continue;
            out << "    circuit";
            for (int e : c.circuit) out << ' ' << e;
            out << ": " << to_string(c.outcome);
            if (!c.note.empty()) out << " (" << c.note << ")";
            out << "\n";
        }
    }
    out << "total: " << report.graphs.size() << " graphs, " << report.found << " found, " << report.none << " none, "
        << report.inconclusive << " inconclusive, " << report.rejected << " rejected, " << report.skipped << " skipped";
    if (report.aborted) out << ", stopped at the first counterexample";
    out << "\n";
    return out.str();
}

BatchReport run_sweep(const RunConfig& config) {
    validate(config);
    const auto start = Clock::now();
    BatchReport report;
    std::vector<std::vector<Circuit>> circuits;
    std::vector<std::optional<MultiGraph>> graphs;

    for (const std::string& path : config.inputs) {
        std::vector<CatalogEntry> entries;
        try {
            entries = read_catalog(path);
        } catch (const Error& e) {
            GraphResult r;
            r.file = path;
            r.status = GraphStatus::rejected;
            r.reason = e.what();
            report.graphs.push_back(std::move(r));
            graphs.emplace_back();
            circuits.emplace_back();
            continue;
        }
        for (CatalogEntry& entry : entries) {
            GraphResult r;
            r.file = path;
            r.line = entry.line;
            r.index = entry.index;
            r.text = entry.text;
            std::vector<Circuit> cs;
            if (!entry.graph) {
                r.status = GraphStatus::rejected;
                r.reason = "unreadable graph6 line: " + entry.error;
            } else {
                r.n = entry.graph->vertex_count();
                r.m = entry.graph->edge_count();
                r.reason = rejection_reason(*entry.graph);
                if (!r.reason.empty()) {
                    r.status = GraphStatus::rejected;
                } else {
                    try {
                        cs = enumerate_circuits(*entry.graph, config.dimension_guard);
                    } catch (const CapacityError& e) {
                        r.status = GraphStatus::inconclusive;
                        r.reason = e.what();
                    }
                }
            }
            for (const Circuit& c : cs) r.circuits.push_back(CircuitResult{c.ids(), Outcome::inconclusive, {}, {}});
            report.graphs.push_back(std::move(r));
            graphs.push_back(std::move(entry.graph));
            circuits.push_back(std::move(cs));
        }
    }

    std::vector<std::pair<std::size_t, std::size_t>> tasks;
    for (std::size_t g = 0; g < circuits.size(); ++g)
        for (std::size_t c = 0; c < circuits[g].size(); ++c) tasks.emplace_back(g, c);

    SearchOptions options;
    options.dimension_guard = config.dimension_guard;
    options.budget_ms = config.budget_ms;
    constexpr std::size_t no_counterexample = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> first_counterexample{no_counterexample};
    std::vector<CircuitOutcome> outcomes(tasks.size());
    std::vector<char> ran(tasks.size(), 0);

    parallel_for(tasks.size(), config.workers, [&](std::size_t t) {
        const auto [g, c] = tasks[t];
        if (!config.keep_going && g > first_counterexample.load()) return;
        outcomes[t] = check_circuit(*graphs[g], circuits[g][c], options);
        ran[t] = 1;
        if (outcomes[t].outcome == Outcome::none && !config.keep_going) {
            std::size_t seen = first_counterexample.load();
            while (g < seen && !first_counterexample.compare_exchange_weak(seen, g)) {
            }
        }
    });

    const std::size_t cutoff = first_counterexample.load();
    report.aborted = cutoff != no_counterexample && !config.keep_going;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        const auto [g, c] = tasks[t];
        if (report.aborted && g > cutoff) continue;
        GraphResult& gr = report.graphs[g];
        CircuitResult& cr = gr.circuits[c];
        if (!ran[t]) throw InvariantViolation("sweep task was skipped before the counterexample cutoff");
        cr.outcome = outcomes[t].outcome;
        cr.note = outcomes[t].note;
        if (cr.outcome == Outcome::found && !config.out_dir.empty()) {
            const std::string name = "g" + std::to_string(g) + "_c" + std::to_string(c) + ".cert.json";
            write_file(std::filesystem::path(config.out_dir) / name, to_json(*outcomes[t].certificate, config.include_timing));
            cr.certificate_file = name;
        }
    }

    for (std::size_t g = 0; g < report.graphs.size(); ++g) {
        GraphResult& gr = report.graphs[g];
        if (report.aborted && g > cutoff) {
            if (gr.status == GraphStatus::checked || gr.status == GraphStatus::inconclusive) {
                gr.status = GraphStatus::skipped;
                gr.reason = "skipped after a counterexample";
                gr.circuits.clear();
            }
        }
        for (const CircuitResult& c : gr.circuits) {
            switch (c.outcome) {
                case Outcome::found:
                    ++gr.found;
                    break;
                case Outcome::none:
                    ++gr.none;
                    break;
                case Outcome::inconclusive:
                    ++gr.inconclusive;
                    break;
            }
        }
        if (gr.status == GraphStatus::checked && gr.inconclusive > 0) gr.status = GraphStatus::inconclusive;
        report.found += gr.found;
        report.none += gr.none;
        report.inconclusive += gr.inconclusive;
        if (gr.status == GraphStatus::rejected) ++report.rejected;
        if (gr.status == GraphStatus::skipped) ++report.skipped;
    }
    report.elapsed_ms = millis_since(start);
    if (!config.out_dir.empty())
        write_file(std::filesystem::path(config.out_dir) / "report.json", report_json(report, config.include_timing));
    return report;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.inputs.empty()) {
        err << "verify: no certificate file given\n";
        return exit_usage;
    }
    int status = exit_ok;
    for (const std::string& path : config.inputs) {
        try {
            const CertificateCheck check = verify_certificate_json(read_file(path));
            if (check.ok()) {
                out << "OK " << path << "\n";
                continue;
            }
            out << "FAIL " << path << "\n";
            for (const std::string& p : check.problems) out << "  " << p << "\n";
            status = worse_status(status, exit_negative);
        } catch (const Error& e) {
            err << "verify: " << path << ": " << e.what() << "\n";
            status = worse_status(status, exit_usage);
        }
    }
    return status;
}

int cmd_find(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        const std::vector<CatalogEntry> entries = read_catalog(config.inputs.front());
        if (config.index >= entries.size())
            throw PreconditionError("index " + std::to_string(config.index) + " is past the " +
                                    std::to_string(entries.size()) + " graphs in " + config.inputs.front());
        const CatalogEntry& entry = entries[config.index];
        if (!entry.graph) throw PreconditionError("line " + std::to_string(entry.line) + ": " + entry.error);
        const MultiGraph& g = *entry.graph;
        if (const std::string reason = rejection_reason(g); !reason.empty()) throw PreconditionError(reason);
        const EdgeSet c0 = config.circuit.empty() ? g.empty_set() : parse_circuit(g, config.circuit, config.circuit_as_edges);

        SearchOptions options;
        options.dimension_guard = config.dimension_guard;
        options.budget_ms = config.budget_ms;
        const auto cert = find_5cdc_containing(g, c0, options);
        if (!cert) {
            out << "none: no cover with at most 5 elements contains the circuit\n";
            return exit_negative;
        }
        const std::filesystem::path file =
            std::filesystem::path(config.out_dir.empty() ? "." : config.out_dir) / ("g" + std::to_string(config.index) + ".cert.json");
        write_file(file, to_json(*cert, config.include_timing));
        out << "found: " << cert->cdc.size() << " elements via " << cert->path << ", " << cert->stats.candidates_tried
            << " candidates\n"
            << "certificate: " << file.string() << "\n";
        return exit_ok;
    } catch (const CapacityError& e) {
        err << "find: inconclusive: " << e.what() << "\n";
        return exit_inconclusive;
    } catch (const Error& e) {
        err << "find: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "find: " << e.what() << "\n";
        return exit_usage;
    }
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const BatchReport report = run_sweep(config);
        out << (config.format == ReportFormat::json ? report_json(report, config.include_timing) : report_table(report));
        for (const GraphResult& g : report.graphs)
            if (g.status == GraphStatus::rejected)
                err << "sweep: " << g.file << ":" << g.line << ": " << g.reason << "\n";
        return report.exit_status();
    } catch (const Error& e) {
        err << "sweep: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "sweep: " << e.what() << "\n";
        return exit_usage;
    }
}

int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream& err) {
    int status = exit_ok;
    Json rows = Json::array();
    if (config.inputs.empty()) {
        err << "stats: no input file given\n";
        return exit_usage;
    }
    for (const std::string& path : config.inputs) {
        std::vector<CatalogEntry> entries;
        try {
            entries = read_catalog(path);
        } catch (const Error& e) {
            err << "stats: " << e.what() << "\n";
            status = worse_status(status, exit_usage);
            continue;
        }
        for (const CatalogEntry& entry : entries) {
            Json row;
            row["file"] = path;
            row["line"] = entry.line;
            row["index"] = entry.index;
            if (!entry.graph) {
                err << "stats: " << path << ":" << entry.line << ": " << entry.error << "\n";
                status = worse_status(status, exit_usage);
                row["error"] = entry.error;
                rows.push_back(std::move(row));
                continue;
            }
            const MultiGraph& g = *entry.graph;
            const std::size_t dim = cycle_space_basis(g).dimension();
            row["n"] = g.vertex_count();
            row["m"] = g.edge_count();
            row["cubic"] = g.is_cubic();
            row["bridgeless"] = bridges(g).none();
            row["cycle_space_dimension"] = dim;
            row["circuits"] = dim <= static_cast<std::size_t>(config.dimension_guard)
                                  ? Json(enumerate_circuits(g, config.dimension_guard).size())
                                  : Json(nullptr);
            row["three_edge_colorable"] = g.is_cubic() ? Json(three_edge_color(g).has_value()) : Json(nullptr);
            rows.push_back(std::move(row));
        }
    }
    if (config.format == ReportFormat::json) {
        out << rows.dump(2) << "\n";
        return status;
    }
    out << std::left << std::setw(6) << "line" << std::setw(6) << "index" << std::setw(5) << "n" << std::setw(5) << "m"
        << std::setw(7) << "cubic" << std::setw(11) << "bridgeless" << std::setw(5) << "dim" << std::setw(10) << "circuits"
        << "colorable\n";
    auto cell = [](const Json& v) {
        if (v.is_null()) return std::string("-");
        if (v.is_boolean()) return std::string(v.get<bool>() ? "yes" : "no");
        return v.dump();
    };
    for (const Json& row : rows) {
        out << std::setw(6) << row["line"].dump() << std::setw(6) << row["index"].dump();
        if (row.contains("error")) {
            out << "error: " << row["error"].get<std::string>() << "\n";
            continue;
        }
        out << std::setw(5) << row["n"].dump() << std::setw(5) << row["m"].dump() << std::setw(7) << cell(row["cubic"])
            << std::setw(11) << cell(row["bridgeless"]) << std::setw(5) << row["cycle_space_dimension"].dump()
            << std::setw(10) << cell(row["circuits"]) << cell(row["three_edge_colorable"]) << "\n";
    }
    return status;
}

}  // namespace cdc5::tools
