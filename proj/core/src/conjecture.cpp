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

#include "cdc5/conjecture.hpp"

#include <algorithm>
#include <unordered_map>

#include "cdc5/error.hpp"
#include "cdc5/named_graphs.hpp"
#include "cdc5/parallel.hpp"

namespace cdc5 {

const char* to_string(Outcome o) noexcept {
    switch (o) {
        case Outcome::found:
            return "found";
        case Outcome::none:
            return "none";
        case Outcome::inconclusive:
            return "inconclusive";
    }
    return "?";
}

CircuitOutcome check_circuit(const MultiGraph& g, const Circuit& circuit, const SearchOptions& options) {
    CircuitOutcome out;
    try {
        out.certificate = find_5cdc_containing(g, circuit, options);
        out.outcome = out.certificate ? Outcome::found : Outcome::none;
    } catch (const CapacityError& e) {
        out.outcome = Outcome::inconclusive;
        out.note = e.what();
    }
    return out;
}

Strong5Report strong5cdcc_check(const MultiGraph& g, const Strong5Options& options) {
    if (!g.is_cubic()) throw PreconditionError("conjecture check requires a cubic graph");
    if (bridges(g).any()) throw BridgedGraphError("conjecture check requires a bridgeless graph");

    Strong5Report report;
    report.circuits = enumerate_circuits(g, options.search.dimension_guard);
    report.outcomes.resize(report.circuits.size());
    parallel_for(report.circuits.size(), options.workers, [&](std::size_t i) {
        report.outcomes[i] = check_circuit(g, report.circuits[i], options.search);
    });
    for (const auto& o : report.outcomes) {
        switch (o.outcome) {
            case Outcome::found:
                ++report.found;
                break;
            case Outcome::none:
                ++report.none;
                break;
            case Outcome::inconclusive:
                ++report.inconclusive;
                break;
        }
    }
    return report;
}

bool RemarkReport::complete() const noexcept {
    return discrepancies.empty() && std::all_of(findings.begin(), findings.end(), [](const RemarkFinding& f) {
               return f.partner.has_value() && f.remainder_has_flow;
           });
}

RemarkReport petersen_remark_check(const MultiGraph& g) {
    if (!(g == named::petersen())) throw PreconditionError("the remark check runs on the canonical Petersen graph only");

    RemarkReport report;
    report.circuits = enumerate_circuits(g);
    std::unordered_map<EdgeSet, std::pair<bool, bool>, EdgeSetHash> memo;  // M -> (bridgeless, has flow)
    for (std::size_t i = 0; i < report.circuits.size(); ++i) {
        RemarkFinding finding;
        finding.circuit = i;
        for (std::size_t j = 0; j < report.circuits.size(); ++j) {
            const EdgeSet m = report.circuits[i] & report.circuits[j];
            if (m.none()) {
                ++report.empty_matching_pairs;
                continue;
            }
            if (!is_matching(g, m)) continue;
            auto it = memo.find(m);
            if (it == memo.end()) {
                const MultiGraph rest = delete_edges(g, m).graph;
                const bool bridgeless = bridges(rest).none();
                it = memo.emplace(m, std::make_pair(bridgeless, bridgeless && has_nz4flow(rest))).first;
            }
            const auto [bridgeless, flow] = it->second;
            if (!bridgeless) continue;
            ++report.shortcut_pairs;
            if (flow)
                ++report.flow_confirmed;
            else
                report.discrepancies.emplace_back(i, j);
            if (!finding.partner) {
                finding.partner = j;
                finding.matching = m;
                finding.remainder_has_flow = flow;
            }
        }
        report.findings.push_back(std::move(finding));
    }
    return report;
}

}  // namespace cdc5
