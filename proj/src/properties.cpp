#include "wsatlab/properties.hpp"

#include <stdexcept>
#include <string>

#include "wsatlab/clique_order.hpp"
#include "wsatlab/cliques.hpp"
#include "wsatlab/constructions.hpp"

namespace wsatlab {

namespace {

// Visits all size-k subsets of 0..n-1 in lexicographic order, keeping the
// running common neighborhood of the prefix. fn returns false to stop.
template <typename Fn>
bool subsets_with_cn(const Graph& g, int k, Fn&& fn) {
    const int n = g.vertex_count();
    std::vector<int> chosen;
    std::vector<VertexSet> cn_stack;
    chosen.reserve(size_t(k));
    cn_stack.reserve(size_t(k) + 1);
    cn_stack.push_back(VertexSet::full(n));

    auto rec = [&](auto&& self, int start) -> bool {
        if (int(chosen.size()) == k) return fn(chosen, cn_stack.back());
        for (int v = start; v < n - (k - int(chosen.size())) + 1; ++v) {
            chosen.push_back(v);
            cn_stack.push_back(cn_stack.back() & g.neighbors(v));
            if (!self(self, v + 1)) return false;
            cn_stack.pop_back();
            chosen.pop_back();
        }
        return true;
    };
    return rec(rec, 0);
}

void check_pair(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || u == v)
        throw std::invalid_argument("invalid vertex pair");
}

}  // namespace

PropertyReport check_ext(const Graph& g, int s) {
    check_clique_order(s);
    if (g.vertex_count() < s) throw std::invalid_argument("graph must have at least s vertices");
    PropertyReport report{"EXT", true, {}, {}, {}};
    std::int64_t checked = 0;
    subsets_with_cn(g, s, [&](const std::vector<int>& set, const VertexSet& cn) {
        ++checked;
        if (!has_clique(g, cn, s - 2)) {
            report.holds = false;
            report.failure_witness = set;
            return false;
        }
        return true;
    });
    report.counts["sets_checked"] = checked;
    return report;
}

PropertyReport check_ham(const Graph& g, int s, const SearchBudget& per_cell, int max_n) {
    check_clique_order(s);
    if (g.vertex_count() < s - 1)
        throw std::invalid_argument("graph must have at least s-1 vertices");
    if (max_n == 0) max_n = s == 3 ? 120 : s == 4 ? 80 : 64;
    if (g.vertex_count() > max_n)
        throw std::invalid_argument("vertex count " + std::to_string(g.vertex_count()) +
                                    " exceeds the cap " + std::to_string(max_n) +
                                    " for this check; raise max_n to force it");

    PropertyReport report{"HAM", true, {}, {}, {}};
    std::int64_t checked = 0;
    subsets_with_cn(g, s - 1, [&](const std::vector<int>& set, const VertexSet& cn) {
        ++checked;
        if (cn.count() < s - 2) {
            report.holds = false;
            report.failure_witness = set;
            return false;
        }
        PathPowerResult r = find_path_power(g, cn, s - 2, per_cell);
        if (r.status == SearchStatus::absent) {
            report.holds = false;
            report.failure_witness = set;
            return false;
        }
        if (r.status == SearchStatus::budget_exhausted) report.undecided.push_back(set);
        return true;
    });
    if (!report.undecided.empty()) report.holds = false;
    report.counts["cells_checked"] = checked;
    report.counts["undecided"] = std::int64_t(report.undecided.size());
    return report;
}

PropertyReport check_bs(const Graph& g, int s) {
    check_clique_order(s);
    PropertyReport report{"B_s", true, {}, {}, {}};
    std::int64_t violations = 0;
    VertexSet cn(g.vertex_count());
    for (const Edge& e : g.edges()) {
        cn.assign_and(g.neighbors(e.u), g.neighbors(e.v));
        if (!has_clique(g, cn, s - 2)) {
            ++violations;
            if (!report.failure_witness) {
                report.holds = false;
                report.failure_witness = std::vector<int>{e.u, e.v};
            }
        }
    }
    report.counts["N_s"] = violations;
    return report;
}

PropertyReport check_bstar(const Graph& g, int s) {
    check_clique_order(s);
    PropertyReport report{"B*_s", true, {}, {}, {}};
    const int n = g.vertex_count();
    std::int64_t checked = 0;
    VertexSet cn(n);
    for (int u = 0; u < n && report.holds; ++u)
        for (int v = u + 1; v < n; ++v) {
            ++checked;
            cn.assign_and(g.neighbors(u), g.neighbors(v));
            if (!has_clique(g, cn, s - 2)) {
                report.holds = false;
                report.failure_witness = std::vector<int>{u, v};
                break;
            }
        }
    report.counts["pairs_checked"] = checked;
    return report;
}

unsigned long long pair_witness_count(const Graph& g, int u, int v, int s) {
    check_clique_order(s);
    check_pair(g, u, v);
    VertexSet cn = g.neighbors(u) & g.neighbors(v);
    return count_cliques_within(g, cn, s - 2);
}

}  // namespace wsatlab
