#include "wsatlab/bootstrap.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "wsatlab/cliques.hpp"

namespace wsatlab {

namespace {

void check_inputs(const Graph& host, const Graph& h0, int s) {
    check_clique_order(s);
    if (host.vertex_count() != h0.vertex_count())
        throw std::invalid_argument("host and subgraph must share a vertex set");
    if (!h0.is_spanning_subgraph_of(host))
        throw std::invalid_argument("subgraph has edges outside the host");
}

}  // namespace

ClosureResult bootstrap_closure(const Graph& host, const Graph& h0, int s) {
    check_inputs(host, h0, s);
    const int n = host.vertex_count();
    const std::uint64_t stride = std::uint64_t(n);

    ClosureResult result{h0, {s, host.fingerprint(), {}}, false};
    Graph& cur = result.closure;

    // Worklist of absent host-edges keyed by u * n + v (u < v); ordered set,
    // so edges are examined in lexicographic order and re-inserts are free.
    std::set<std::uint64_t> worklist;
    for (int u = 0; u < n; ++u) {
        VertexSet missing = host.neighbors(u);
        missing.and_not(cur.neighbors(u));
        missing.clear_below(u + 1);
        for (int v = missing.first(); v >= 0; v = missing.next(v))
            worklist.insert(stride * std::uint64_t(u) + std::uint64_t(v));
    }

    VertexSet cn(n), missing(n);
    auto queue_absent_at = [&](int x) {
        missing = host.neighbors(x);
        missing.and_not(cur.neighbors(x));
        for (int y = missing.first(); y >= 0; y = missing.next(y)) {
            Edge e = make_edge(x, y);
            worklist.insert(stride * std::uint64_t(e.u) + std::uint64_t(e.v));
        }
    };

    while (!worklist.empty()) {
        auto it = worklist.begin();
        const int u = int(*it / stride);
        const int v = int(*it % stride);
        worklist.erase(it);
        if (cur.has_edge(u, v)) continue;

        cn.assign_and(cur.neighbors(u), cur.neighbors(v));
        auto witness = contains_clique(cur, cn, s - 2);
        if (!witness) continue;

        cur.add_edge(u, v);
        result.trace.steps.push_back({{u, v}, *witness});

        // A newly eligible edge (x, y) must use the fresh edge (u, v) in its
        // complete-subgraph certificate: either as (x-or-y, common neighbor),
        // which means (x, y) touches u or v, or inside the witness clique,
        // which means x and y are both common neighbors of u and v.
        queue_absent_at(u);
        queue_absent_at(v);
        for (int w : *witness) queue_absent_at(w);
        if (s >= 4) {
            cn.assign_and(cur.neighbors(u), cur.neighbors(v));
            for (int x = cn.first(); x >= 0; x = cn.next(x)) {
                missing.assign_and(cn, host.neighbors(x));
                missing.and_not(cur.neighbors(x));
                missing.clear_below(x + 1);
                for (int y = missing.first(); y >= 0; y = missing.next(y))
                    worklist.insert(stride * std::uint64_t(x) + std::uint64_t(y));
            }
        }
    }

    result.percolated = cur.edge_count() == host.edge_count();
    return result;
}

bool percolates(const Graph& host, const Graph& h0, int s) {
    return bootstrap_closure(host, h0, s).percolated;
}

bool weakly_saturated_in_complete(const Graph& g, int s) {
    return percolates(Graph::complete(g.vertex_count()), g, s);
}

TraceCheck verify_trace(const Graph& host, const Graph& h0, const BootstrapTrace& trace) {
    if (trace.s < kMinCliqueOrder || trace.s > kMaxCliqueOrder)
        return {false, TraceCheck::kBadHeader};
    if (trace.host_fingerprint != host.fingerprint()) return {false, TraceCheck::kBadHeader};
    if (host.vertex_count() != h0.vertex_count() || !h0.is_spanning_subgraph_of(host))
        return {false, TraceCheck::kBadHeader};

    Graph cur = h0;
    const int n = cur.vertex_count();
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& step = trace.steps[i];
        const auto [u, v] = step.edge;
        if (u < 0 || v <= u || v >= n) return {false, i};
        if (!host.has_edge(u, v) || cur.has_edge(u, v)) return {false, i};
        if (int(step.witness.size()) != trace.s - 2) return {false, i};
        VertexSet w_set(n);
        for (int w : step.witness) {
            if (w < 0 || w >= n || w == u || w == v || w_set.test(w)) return {false, i};
            w_set.set(w);
        }
        for (int w : step.witness) {
            if (!cur.has_edge(u, w) || !cur.has_edge(v, w)) return {false, i};
            for (int x : step.witness)
                if (w < x && !cur.has_edge(w, x)) return {false, i};
        }
        cur.add_edge(u, v);
    }
    return {true, trace.steps.size()};
}

}  // namespace wsatlab
