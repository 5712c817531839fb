#include "wsatlab/cliques.hpp"

#include <stdexcept>

namespace wsatlab {

VertexSet common_neighborhood(const Graph& g, const VertexSet& u_set) {
    VertexSet r = VertexSet::full(g.vertex_count());
    for (int v = u_set.first(); v >= 0; v = u_set.next(v)) r &= g.neighbors(v);
    return r;
}

VertexSet common_neighborhood(const Graph& g, std::span<const int> u_set) {
    VertexSet r = VertexSet::full(g.vertex_count());
    for (int v : u_set) r &= g.neighbors(v);
    return r;
}

namespace {

// Depth-first over increasing vertex ids, so the first complete k-subset found
// is the lexicographically least one.
bool clique_dfs(const Graph& g, const VertexSet& candidates, int need, std::vector<int>& out) {
    if (need == 0) return true;
    if (candidates.count() < need) return false;
    VertexSet narrowed(candidates.universe_size());
    for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
        out.push_back(v);
        narrowed.assign_and(candidates, g.neighbors(v));
        narrowed.clear_below(v + 1);
        if (clique_dfs(g, narrowed, need - 1, out)) return true;
        out.pop_back();
    }
    return false;
}

unsigned long long count_dfs(const Graph& g, const VertexSet& candidates, int need) {
    if (need == 0) return 1;
    if (need == 1) return (unsigned long long)candidates.count();
    if (candidates.count() < need) return 0;
    unsigned long long total = 0;
    VertexSet narrowed(candidates.universe_size());
    for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
        narrowed.assign_and(candidates, g.neighbors(v));
        narrowed.clear_below(v + 1);
        total += count_dfs(g, narrowed, need - 1);
    }
    return total;
}

}  // namespace

std::optional<std::vector<int>> contains_clique(const Graph& g, const VertexSet& candidates,
                                                int k) {
    if (k < 0) throw std::invalid_argument("clique order must be non-negative");
    std::vector<int> out;
    out.reserve(size_t(k));
    if (clique_dfs(g, candidates, k, out)) return out;
    return std::nullopt;
}

bool has_clique(const Graph& g, const VertexSet& candidates, int k) {
    if (k < 0) throw std::invalid_argument("clique order must be non-negative");
    std::vector<int> out;
    out.reserve(size_t(k));
    return clique_dfs(g, candidates, k, out);
}

unsigned long long count_cliques(const Graph& g, int s) {
    return count_cliques_within(g, VertexSet::full(g.vertex_count()), s);
}

unsigned long long count_cliques_within(const Graph& g, const VertexSet& allowed, int s) {
    if (s < 0) throw std::invalid_argument("clique order must be non-negative");
    return count_dfs(g, allowed, s);
}

}  // namespace wsatlab
