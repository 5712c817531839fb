#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wsatlab/clique_order.hpp"
#include "wsatlab/graph.hpp"

namespace wsatlab {

struct TraceStep {
    Edge edge;
    std::vector<int> witness;  // s-2 pairwise-adjacent common neighbors

    bool operator==(const TraceStep&) const = default;
};

struct BootstrapTrace {
    int s = 0;
    std::uint64_t host_fingerprint = 0;
    std::vector<TraceStep> steps;

    bool operator==(const BootstrapTrace&) const = default;
};

struct ClosureResult {
    Graph closure;
    BootstrapTrace trace;
    bool percolated = false;
};

struct TraceCheck {
    bool ok = false;
    // Index of the first invalid step; kBadHeader when the host fingerprint
    // or s does not match before any step runs.
    std::size_t first_bad_step = 0;

    static constexpr std::size_t kBadHeader = static_cast<std::size_t>(-1);
};

// Repeatedly adds host-edges whose endpoints have s-2 pairwise-adjacent
// common neighbors in the current graph, until none remain. The result is
// the unique maximal such graph; the trace records one addition order with
// the lexicographically least witness per step.
ClosureResult bootstrap_closure(const Graph& host, const Graph& h0, int s);

bool percolates(const Graph& host, const Graph& h0, int s);

// Whether g percolates in the complete graph on its vertex set. When true,
// every spanning weakly saturated subgraph of g is also weakly saturated in
// the complete host, so wsat(g) is at least the complete-host value.
bool weakly_saturated_in_complete(const Graph& g, int s);

// Replays a trace from h0, checking each step adds a host-edge not yet
// present whose witness is valid at that point.
TraceCheck verify_trace(const Graph& host, const Graph& h0, const BootstrapTrace& trace);

}  // namespace wsatlab
