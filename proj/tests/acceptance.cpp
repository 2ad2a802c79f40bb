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

// Acceptance run: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cdc5/cdc5.hpp"
#include "cdc5_tools/harness.hpp"
#include "oracles.hpp"

using namespace cdc5;

namespace {

using Clock = std::chrono::steady_clock;

const std::string data_dir = CDC5_TEST_DATA_DIR;

struct Produced {
    MultiGraph graph;
    EdgeSet c0;
    Certificate certificate;
};

/// Certificates from criteria 1 to 4, replayed by criterion 5.
std::vector<Produced> produced;
std::size_t constructed_cdcs = 0;
std::size_t constructed_flows = 0;

class Criterion {
public:
    Criterion(int number, std::string title) : number_(number), title_(std::move(title)), start_(Clock::now()) {}

    void fail(const std::string& why) {
        if (failures_.size() < 8) failures_.push_back(why);
        ++failure_count_;
    }

    void check(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }

    void note(const std::string& s) { notes_.push_back(s); }

    bool finish(double budget_seconds) {
        const double secs = std::chrono::duration<double>(Clock::now() - start_).count();
        if (secs > budget_seconds) fail("took " + std::to_string(secs) + " s, budget " + std::to_string(budget_seconds) + " s");
        const bool ok = failure_count_ == 0;
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << "criterion " << number_ << " " << (ok ? "PASS" : "FAIL") << ": " << title_ << " [" << secs
             << " s";
        for (const auto& n : notes_) line << "; " << n;
        line << "]";
        std::cout << line.str() << std::endl;
        for (const auto& f : failures_) std::cout << "    " << f << std::endl;
        if (failure_count_ > failures_.size())
            std::cout << "    ... " << failure_count_ - failures_.size() << " more" << std::endl;
        return ok;
    }

private:
    int number_;
    std::string title_;
    Clock::time_point start_;
    std::vector<std::string> notes_;
    std::vector<std::string> failures_;
    std::size_t failure_count_ = 0;
};

std::string describe(const std::string& g6, const EdgeSet& c0) {
    std::ostringstream s;
    s << g6 << " c0 {";
    bool first = true;
    for (int e : c0.ids()) {
        s << (first ? "" : ",") << e;
        first = false;
    }
    s << "}";
    return s.str();
}

/// Checks a cover from the library and records it for criterion 5.
bool check_found(Criterion& crit, const MultiGraph& g, const EdgeSet& c0, const Certificate& cert, const std::string& what) {
    ++constructed_cdcs;
    bool ok = true;
    auto require = [&](bool cond, const std::string& msg) {
        if (!cond) {
            crit.fail(what + ": " + msg);
            ok = false;
        }
    };
    require(cert.cdc.size() <= 5, "more than 5 elements");
    require(verify_cdc(g, cert.cdc).valid(), "cover does not verify");
    require(contains_element_superset(cert.cdc, c0).has_value(), "no element contains c0");
    require(verify_certificate_json(to_json(cert)).ok(), "certificate does not re-verify");
    produced.push_back({g, c0, cert});
    return ok;
}

std::set<std::vector<int>> id_sets(const std::vector<EdgeSet>& v) {
    std::set<std::vector<int>> out;
    for (const auto& s : v) out.insert(s.ids());
    return out;
}

bool criterion1() {
    Criterion crit(1, "Petersen: 57 circuits, each in a verified cover of at most 5 elements");
    const MultiGraph p = parse_graph6(oracle::read_graph6_lines(data_dir + "/petersen.g6").front());
    const auto circuits = enumerate_circuits(p);
    const auto independent = oracle::simple_cycles(p);
    crit.check(circuits.size() == 57, "enumerated " + std::to_string(circuits.size()) + " circuits");
    crit.check(independent.size() == 57, "simple-cycle oracle found " + std::to_string(independent.size()));
    crit.check(id_sets(circuits) == id_sets(independent), "circuit sets disagree with the simple-cycle oracle");
    Strong5Options opts;
    opts.workers = 1;
    const Strong5Report report = strong5cdcc_check(p, opts);
    std::size_t verified = 0;
    for (std::size_t i = 0; i < report.circuits.size(); ++i) {
        const auto& o = report.outcomes[i];
        if (o.outcome != Outcome::found) {
            crit.fail("circuit " + std::to_string(i) + " outcome " + to_string(o.outcome));
            continue;
        }
        verified += check_found(crit, p, report.circuits[i], *o.certificate, "circuit " + std::to_string(i));
    }
    crit.note(std::to_string(verified) + "/57 verified");
    return crit.finish(60);
}

bool criterion2() {
    Criterion crit(2, "pair search agrees with brute force on every even subgraph of the n <= 10 catalog");
    const auto lines = oracle::read_graph6_lines(data_dir + "/cubic_bridgeless_le10.g6");
    std::size_t pairs = 0, found = 0;
    for (const std::string& line : lines) {
        const MultiGraph g = parse_graph6(line);
        for (const EdgeSet& c0 : enumerate_even_subgraphs(cycle_space_basis(g))) {
            ++pairs;
            const auto brute = brute_force_5cdc_oracle(g, c0);
            const auto cert = find_5cdc_containing(g, c0);
            if (brute.has_value() != cert.has_value()) {
                crit.fail(describe(line, c0) + ": search " + (cert ? "found" : "none") + ", brute force " +
                          (brute ? "found" : "none"));
                continue;
            }
            if (brute) {
                crit.check(verify_cdc(g, *brute).valid() && brute->size() <= 5 && contains_element_superset(*brute, c0),
                           describe(line, c0) + ": brute-force cover does not verify");
                ++constructed_cdcs;
            }
            if (cert) {
                ++found;
                check_found(crit, g, c0, *cert, describe(line, c0));
            }
        }
    }
    crit.note(std::to_string(lines.size()) + " graphs, " + std::to_string(pairs) + " (graph, c0) pairs, " +
              std::to_string(found) + " found");
    return crit.finish(600);
}

bool criterion3() {
    Criterion crit(3, "4-flow decision agrees with brute-force 4-element covers on the catalog");
    const auto lines = oracle::read_graph6_lines(data_dir + "/cubic_bridgeless_le10.g6");
    std::size_t with_flow = 0;
    for (const std::string& line : lines) {
        const MultiGraph g = parse_graph6(line);
        const bool flow = has_nz4flow(g);
        const auto four = brute_force_cdc(g, 4, g.empty_set());
        crit.check(flow == four.has_value(), line + ": flow " + (flow ? "yes" : "no") + ", 4-cover " + (four ? "yes" : "no"));
        with_flow += flow;
        if (four) {
            ++constructed_cdcs;
            crit.check(verify_cdc(g, *four).valid(), line + ": brute-force 4-cover does not verify");
            const Flow4 f = cdc_to_flow(g, *four);
            ++constructed_flows;
            crit.check(verify_flow(g, f), line + ": flow from the 4-cover does not verify");
        }
        if (flow) {
            const auto f = find_nz4flow(g);
            ++constructed_flows;
            crit.check(f && verify_flow(g, *f), line + ": constructed flow does not verify");
        }
    }
    crit.note(std::to_string(with_flow) + "/" + std::to_string(lines.size()) + " graphs have a 4-flow");
    return crit.finish(300);
}

bool criterion4() {
    Criterion crit(4, "snark regression: Petersen, both Blanusa snarks, J5 with 8 workers");
    const auto lines = oracle::read_graph6_lines(data_dir + "/snarks.g6");
    crit.check(lines.size() == 4, "expected 4 snarks in the data file");
    std::size_t total = 0;
    for (const std::string& line : lines) {
        const MultiGraph g = parse_graph6(line);
        crit.check(!three_edge_color(g).has_value() && oracle::girth(g) >= 5, line + " is not a snark");
        Strong5Options opts;
        opts.workers = 8;
        const Strong5Report report = strong5cdcc_check(g, opts);
        crit.check(report.none == 0, line + ": " + std::to_string(report.none) + " definitive negatives");
        crit.check(report.inconclusive == 0, line + ": " + std::to_string(report.inconclusive) + " inconclusive");
        for (std::size_t i = 0; i < report.circuits.size(); ++i)
            if (report.outcomes[i].certificate)
                check_found(crit, g, report.circuits[i], *report.outcomes[i].certificate, line + " circuit " + std::to_string(i));
        crit.note("n=" + std::to_string(g.vertex_count()) + ": " + std::to_string(report.found) + "/" +
                  std::to_string(report.circuits.size()));
        total += report.circuits.size();
    }
    return crit.finish(900);
}

bool criterion5() {
    Criterion crit(5, "property suites: covers, flows, subdivision invariance, witness round trip");
    crit.check(constructed_cdcs > 0, "no covers were constructed");

    std::mt19937 rng(20260501);
    int trials = 0;
    while (trials < 500) {
        const int n = 2 * (2 + static_cast<int>(rng() % 6));
        MultiGraph g = oracle::random_cubic_multigraph(n, rng);
        const bool before = has_nz4flow(g);
        const int steps = 1 + static_cast<int>(rng() % 4);
        for (int s = 0; s < steps; ++s)
            g = named::subdivide(g, static_cast<EdgeId>(rng() % static_cast<unsigned>(g.edge_count())),
                                 1 + static_cast<int>(rng() % 3));
        const bool after = has_nz4flow(g);
        crit.check(before == after, "subdivision trial " + std::to_string(trials) + " changed the flow decision");
        if (after) {
            const auto f = find_nz4flow(g);
            ++constructed_flows;
            crit.check(f && verify_flow(g, *f), "subdivision trial " + std::to_string(trials) + ": flow does not verify");
        }
        ++trials;
    }

    std::size_t round_trips = 0;
    for (const Produced& p : produced) {
        const Certificate& c = p.certificate;
        crit.check(is_matching(p.graph, c.matching), "certificate matching is not a matching");
        crit.check(c.matching == (c.c1 & c.c2), "certificate matching differs from C1 ∩ C2");
        crit.check(p.c0.is_subset_of(c.c1), "c0 is not inside C1");
        crit.check(has_nz4flow(delete_edges(p.graph, c.matching).graph), "G - M has no 4-flow");
        try {
            const Theorem2Witness w = extract_theorem2_witness(p.graph, c.cdc, p.c0);
            const bool ok = is_matching(p.graph, w.matching) && p.c0.is_subset_of(w.c1) &&
                            has_nz4flow(w.reduced.graph) && verify_flow(w.reduced.graph, w.reduced_flow) &&
                            verify_cdc(w.reduced.graph, w.reduced_cdc).valid();
            ++constructed_flows;
            crit.check(ok, "witness round trip failed");
            round_trips += ok;
        } catch (const Error& e) {
            crit.fail(std::string("witness extraction threw: ") + e.what());
        }
    }
    crit.note(std::to_string(constructed_cdcs) + " covers, " + std::to_string(constructed_flows) + " flows, " +
              std::to_string(trials) + " subdivision trials, " + std::to_string(round_trips) + "/" +
              std::to_string(produced.size()) + " witness round trips");
    return crit.finish(600);
}

std::map<std::string, std::string> sweep_outputs(const std::string& graph_file, int workers, const std::filesystem::path& dir) {
    std::filesystem::remove_all(dir);
    tools::RunConfig config;
    config.command = "sweep";
    config.inputs = {graph_file};
    config.out_dir = dir.string();
    config.workers = workers;
    config.include_timing = false;
    tools::run_sweep(config);
    std::map<std::string, std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        files[entry.path().filename().string()] = ss.str();
    }
    return files;
}

bool criterion6() {
    Criterion crit(6, "determinism: criteria 1 and 4 rerun twice give identical certificates and reports");
    const auto base = std::filesystem::temp_directory_path() / "cdc5_acceptance";
    std::size_t compared = 0;
    for (const auto& [name, file, workers] : {std::tuple{"petersen", "/petersen.g6", 1}, std::tuple{"snarks", "/snarks.g6", 8}}) {
        const auto a = sweep_outputs(data_dir + file, workers, base / (std::string(name) + "_a"));
        const auto b = sweep_outputs(data_dir + file, workers, base / (std::string(name) + "_b"));
        crit.check(a.size() == b.size(), std::string(name) + ": different file sets");
        crit.check(a.count("report.json") == 1, std::string(name) + ": no report written");
        for (const auto& [fname, text] : a) {
            const auto it = b.find(fname);
            crit.check(it != b.end() && it->second == text, std::string(name) + ": " + fname + " differs");
            ++compared;
        }
    }
    // The library-level outputs of criterion 1 and 4 as well.
    for (const std::string& line : oracle::read_graph6_lines(data_dir + "/snarks.g6")) {
        const MultiGraph g = parse_graph6(line);
        Strong5Options one, eight;
        eight.workers = 8;
        const auto r1 = strong5cdcc_check(g, one), r2 = strong5cdcc_check(g, eight);
        for (std::size_t i = 0; i < r1.outcomes.size(); ++i) {
            crit.check(r1.outcomes[i].certificate && r2.outcomes[i].certificate &&
                           to_json(*r1.outcomes[i].certificate, false) == to_json(*r2.outcomes[i].certificate, false),
                       line + ": certificate " + std::to_string(i) + " differs between runs");
            ++compared;
        }
    }
    std::filesystem::remove_all(base);
    crit.note(std::to_string(compared) + " documents compared");
    return crit.finish(900);
}

}  // namespace

int main() {
    int failed = 0;
    const std::vector<std::function<bool()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6};
    for (const auto& c : criteria) {
        try {
            failed += !c();
        } catch (const std::exception& e) {
            std::cout << "criterion FAIL: unexpected exception: " << e.what() << std::endl;
            ++failed;
        }
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
