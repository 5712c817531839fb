#include "wsatlab/wsat.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "wsatlab/cliques.hpp"
#include "wsatlab/constructions.hpp"

namespace wsatlab {

long long lovasz_number(long long n, int s) {
    check_clique_order(s);
    if (n < s - 2) throw std::invalid_argument("closed form needs n >= s-2");
    long long k = s - 2;
    return k * (k - 1) / 2 + (n - k) * k;
}

std::vector<Edge> mandatory_edges(const Graph& host, int s) {
    check_clique_order(s);
    std::vector<Edge> out;
    VertexSet cn(host.vertex_count());
    for (const Edge& e : host.edges()) {
        cn.assign_and(host.neighbors(e.u), host.neighbors(e.v));
        if (!has_clique(host, cn, s - 2)) out.push_back(e);
    }
    return out;
}

namespace {

// Adds host edges in lexicographic order while keeping the graph free of
// s-cliques. The result is maximal, so it percolates; it serves as the
// fallback upper bound when enumeration runs out of budget.
Graph greedy_clique_free(const Graph& host, int s) {
    const int n = host.vertex_count();
    Graph h(n);
    VertexSet cn(n);
    for (const Edge& e : host.edges()) {
        cn.assign_and(h.neighbors(e.u), h.neighbors(e.v));
        if (!has_clique(h, cn, s - 2)) h.add_edge(e.u, e.v);
    }
    return h;
}

}  // namespace

WsatResult wsat_exact(const Graph& host, int s, const WsatOptions& options) {
    check_clique_order(s);
    const int n = host.vertex_count();
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&start] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    WsatResult result;
    result.trace = {s, host.fingerprint(), {}};

    const VertexSet everyone = VertexSet::full(n);
    if (!has_clique(host, everyone, s)) {
        // Nothing can ever be added, so the host is its own unique witness.
        result.value = host.edge_count();
        result.witness = host;
        result.exact = true;
        result.stats.elapsed_seconds = elapsed();
        return result;
    }

    const std::vector<Edge> mandatory = mandatory_edges(host, s);
    std::vector<Edge> free_edges;
    {
        std::size_t mi = 0;
        for (const Edge& e : host.edges()) {
            if (mi < mandatory.size() && mandatory[mi] == e)
                ++mi;
            else
                free_edges.push_back(e);
        }
    }

    std::size_t k_start = mandatory.size();
    if (weakly_saturated_in_complete(host, s))
        k_start = std::max(k_start, std::size_t(lovasz_number(n, s)));

    Graph base(n);
    for (const Edge& e : mandatory) base.add_edge(e.u, e.v);

    BudgetMeter meter(options.budget);
    Graph candidate(n);
    for (std::size_t k = k_start; k <= host.edge_count(); ++k) {
        const std::size_t need = k - mandatory.size();
        if (need > free_edges.size()) break;

        // k-combinations of free edge indices in lexicographic order; the
        // first percolating candidate is the lexicographically least optimum.
        std::vector<std::size_t> pick(need);
        for (std::size_t i = 0; i < need; ++i) pick[i] = i;
        while (true) {
            if (!meter.spend()) {
                result.witness = greedy_clique_free(host, s);
                result.value = result.witness.edge_count();
                auto run = bootstrap_closure(host, result.witness, s);
                result.trace = std::move(run.trace);
                result.exact = false;
                result.stats = {meter.used(), elapsed(), true};
                return result;
            }

            candidate = base;
            for (std::size_t i : pick) candidate.add_edge(free_edges[i].u, free_edges[i].v);
            if (!(options.require_clique_free && has_clique(candidate, everyone, s))) {
                auto run = bootstrap_closure(host, candidate, s);
                if (run.percolated) {
                    result.value = k;
                    result.witness = std::move(candidate);
                    result.trace = std::move(run.trace);
                    result.exact = true;
                    result.stats = {meter.used(), elapsed(), false};
                    return result;
                }
            }

            // Next combination.
            std::size_t i = need;
            while (i > 0 && pick[i - 1] == free_edges.size() - need + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < need; ++j) pick[j] = pick[j - 1] + 1;
        }
    }

    // Unreachable when the host has an s-clique (a maximal clique-free
    // spanning subgraph always percolates), but kept as an honest fallback.
    result.witness = greedy_clique_free(host, s);
    result.value = result.witness.edge_count();
    auto run = bootstrap_closure(host, result.witness, s);
    result.trace = std::move(run.trace);
    result.exact = false;
    result.stats = {meter.used(), elapsed(), meter.exhausted()};
    return result;
}

namespace {

// Trying every mandatory edge is usually redundant; a handful decides it.
constexpr std::size_t kBlockingProbeLimit = 16;

// No exhaustive solve beyond this many host edges; the subset space is
// hopeless for the default budget anyway.
constexpr std::size_t kExactSolveEdgeLimit = 36;

}  // namespace

AsVerdict decide_as(const Graph& g, int s, const WsatOptions& options) {
    check_clique_order(s);
    const int n = g.vertex_count();
    if (n < s) throw std::invalid_argument("decision needs at least s vertices");
    const long long target = lovasz_number(n, s);

    AsVerdict verdict;

    const Graph complete_host = Graph::complete(n);
    auto lower_run = bootstrap_closure(complete_host, g, s);
    verdict.lower_certificate =
        lower_run.percolated && verify_trace(complete_host, g, lower_run.trace).ok;

    if (verdict.lower_certificate) {
        KernelResult kr = build_kernel_construction(g, s, options.path_budget);
        if (kr.status == KernelResult::Status::ok) {
            const Graph& h = kr.construction->h;
            if (static_cast<long long>(h.edge_count()) == target && count_cliques(h, s) == 0) {
                auto run = bootstrap_closure(g, h, s);
                if (run.percolated && verify_trace(g, h, run.trace).ok) {
                    verdict.verdict = AsState::holds;
                    verdict.upper_witness = h;
                    verdict.upper_trace = std::move(run.trace);
                    verdict.reason =
                        "percolates in the complete host, and a kernel construction of the "
                        "closed-form size percolates in the graph";
                    return verdict;
                }
            }
        }
    }

    const std::vector<Edge> mandatory = mandatory_edges(g, s);
    std::size_t probes = std::min(mandatory.size(), kBlockingProbeLimit);
    for (std::size_t i = 0; i < probes; ++i) {
        Edge e = mandatory[i];
        Graph reduced = g;
        reduced.remove_edge(e.u, e.v);
        if (weakly_saturated_in_complete(reduced, s)) {
            verdict.verdict = AsState::fails;
            verdict.blocking_edge = e;
            verdict.reason =
                "an edge lies in no s-clique yet the graph without it still percolates in the "
                "complete host, so the minimum exceeds the closed form";
            return verdict;
        }
    }

    if (g.edge_count() <= kExactSolveEdgeLimit) {
        WsatResult r = wsat_exact(g, s, options);
        if (r.exact) {
            verdict.exact_value = static_cast<long long>(r.value);
            if (static_cast<long long>(r.value) == target) {
                verdict.verdict = AsState::holds;
                verdict.upper_witness = r.witness;
                verdict.upper_trace = std::move(r.trace);
                verdict.reason = "exact minimum equals the closed form";
            } else {
                verdict.verdict = AsState::fails;
                verdict.reason = "exact minimum differs from the closed form";
            }
            return verdict;
        }
    }

    verdict.verdict = AsState::unknown;
    verdict.reason = "no certificate within budget";
    return verdict;
}

}  // namespace wsatlab
