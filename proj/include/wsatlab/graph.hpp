#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "wsatlab/vertex_set.hpp"

namespace wsatlab {

struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

// Normalized so u < v.
inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph on vertices 0..n-1, adjacency kept as one bit row
// per vertex. No self-loops, no multi-edges.
class Graph {
public:
    static constexpr int kMaxVertices = 1 << 16;

    Graph() = default;
    explicit Graph(int n);

    static Graph complete(int n);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_; }

    bool has_edge(int u, int v) const { return adj_[size_t(u)].test(v); }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const { return adj_[size_t(v)].count(); }
    const VertexSet& neighbors(int v) const { return adj_[size_t(v)]; }

    // Lexicographically sorted (u, v) pairs with u < v.
    std::vector<Edge> edges() const;

    bool is_spanning_subgraph_of(const Graph& host) const;

    // Stable 64-bit digest of (n, adjacency); identifies the graph in traces.
    std::uint64_t fingerprint() const;

    bool operator==(const Graph&) const = default;

private:
    void check_endpoints(int u, int v) const;

    int n_ = 0;
    std::size_t edges_ = 0;
    std::vector<VertexSet> adj_;
};

std::string fingerprint_hex(std::uint64_t fp);

}  // namespace wsatlab
