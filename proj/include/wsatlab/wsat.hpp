#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wsatlab/bootstrap.hpp"
#include "wsatlab/budget.hpp"
#include "wsatlab/graph.hpp"

namespace wsatlab {

// C(s-2, 2) + (n-s+2)(s-2): the minimum edge count of a spanning weakly
// saturated subgraph of the complete graph on n vertices.
long long lovasz_number(long long n, int s);

// Host edges contained in no s-clique of the host. Any percolating spanning
// subgraph must keep all of them.
std::vector<Edge> mandatory_edges(const Graph& host, int s);

struct SearchStats {
    std::uint64_t candidates_tested = 0;
    double elapsed_seconds = 0;
    bool budget_exhausted = false;
};

struct WsatResult {
    std::size_t value = 0;
    Graph witness;
    BootstrapTrace trace;
    bool exact = false;
    SearchStats stats;
};

struct WsatOptions {
    SearchBudget budget = SearchBudget::subset_search_default();
    SearchBudget path_budget = SearchBudget::path_search_default();
    // Witnesses must avoid s-cliques themselves; relaxing this accepts any
    // percolating spanning subgraph.
    bool require_clique_free = true;
};

// Minimum edge count of a spanning clique-free percolating subgraph, found by
// enumerating k-edge candidate sets in lexicographic order for growing k.
// Candidate sets always include every mandatory edge; k starts from the
// complete-host bound when the host percolates in its complete graph. On
// budget exhaustion the result downgrades to a greedy upper bound with
// exact = false.
WsatResult wsat_exact(const Graph& host, int s, const WsatOptions& options = {});

enum class AsState { holds, fails, unknown };

// Decision for "the minimum equals lovasz_number(n, s)", with certificates.
struct AsVerdict {
    AsState verdict = AsState::unknown;
    bool lower_certificate = false;        // host percolates in its complete graph
    std::optional<Graph> upper_witness;    // clique-free percolating witness of matching size
    std::optional<BootstrapTrace> upper_trace;
    std::optional<Edge> blocking_edge;     // mandatory edge whose removal stays saturated
    std::optional<long long> exact_value;  // set when an exact solve completed
    std::string reason;
};

AsVerdict decide_as(const Graph& g, int s, const WsatOptions& options = {});

}  // namespace wsatlab
