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

#ifndef CDC5_CONJECTURE_HPP
#define CDC5_CONJECTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cdc5/search.hpp"

namespace cdc5 {

enum class Outcome { found, none, inconclusive };

const char* to_string(Outcome o) noexcept;

struct CircuitOutcome {
    Outcome outcome = Outcome::inconclusive;
    std::optional<Certificate> certificate;
    /// Why the run was inconclusive; empty otherwise.
    std::string note;
};

/// Runs find_5cdc_containing for c0 = circuit, mapping CapacityError to
/// Outcome::inconclusive.
CircuitOutcome check_circuit(const MultiGraph& g, const Circuit& circuit, const SearchOptions& options);

struct Strong5Options {
    SearchOptions search;
    int workers = 1;
};

struct Strong5Report {
    std::vector<Circuit> circuits;
    std::vector<CircuitOutcome> outcomes;
    std::size_t found = 0;
    std::size_t none = 0;
    std::size_t inconclusive = 0;

    /// True when some circuit definitively lies in no ≤5-element CDC.
    bool counterexample() const noexcept { return none > 0; }
};

/// Every circuit of a cubic bridgeless graph, each searched independently.
/// Outcomes are stored by circuit index, so the report does not depend on
/// the worker count.
Strong5Report strong5cdcc_check(const MultiGraph& g, const Strong5Options& options = {});

struct RemarkFinding {
    std::size_t circuit = 0;
    /// Index (into the circuit list) of the first partner circuit whose
    /// intersection is a nonempty matching with a bridgeless remainder.
    std::optional<std::size_t> partner;
    EdgeSet matching;
    bool remainder_has_flow = false;
};

struct RemarkReport {
    std::vector<Circuit> circuits;
    std::vector<RemarkFinding> findings;
    /// Ordered pairs (C, C') meeting the shortcut with M nonempty.
    std::size_t shortcut_pairs = 0;
    /// Among those, how many have a nowhere-zero 4-flow on G - M.
    std::size_t flow_confirmed = 0;
    /// Pairs with M = ∅: G - M is the graph itself, which has no 4-flow.
    std::size_t empty_matching_pairs = 0;
    /// Shortcut pairs whose remainder is bridgeless but flowless.
    std::vector<std::pair<std::size_t, std::size_t>> discrepancies;

    bool complete() const noexcept;
};

/**
 * For every circuit C of the canonical Petersen graph, looks for a circuit
 * C' with M = C ∩ C' a nonempty matching and G - M bridgeless, and checks
 * that each such G - M really has a nowhere-zero 4-flow. Throws
 * PreconditionError for any other graph.
 */
RemarkReport petersen_remark_check(const MultiGraph& g);

}  // namespace cdc5

#endif  // CDC5_CONJECTURE_HPP
