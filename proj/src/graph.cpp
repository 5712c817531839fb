#include "wsatlab/graph.hpp"

#include <stdexcept>
#include <string>

namespace wsatlab {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range 0.." +
                                    std::to_string(kMaxVertices) + ": " + std::to_string(n));
    adj_.assign(size_t(n), VertexSet(n));
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) {
        g.adj_[size_t(v)] = VertexSet::full(n);
        g.adj_[size_t(v)].reset(v);
    }
    g.edges_ = std::size_t(n) * (n - 1) / 2;
    return g;
}

void Graph::check_endpoints(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
}

void Graph::add_edge(int u, int v) {
    check_endpoints(u, v);
    if (adj_[size_t(u)].test(v)) return;
    adj_[size_t(u)].set(v);
    adj_[size_t(v)].set(u);
    ++edges_;
}

void Graph::remove_edge(int u, int v) {
    check_endpoints(u, v);
    if (!adj_[size_t(u)].test(v)) return;
    adj_[size_t(u)].reset(v);
    adj_[size_t(v)].reset(u);
    --edges_;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[size_t(u)].next(u); v >= 0; v = adj_[size_t(u)].next(v))
            out.push_back({u, v});
    return out;
}

bool Graph::is_spanning_subgraph_of(const Graph& host) const {
    if (n_ != host.n_) return false;
    for (int v = 0; v < n_; ++v)
        if (!adj_[size_t(v)].subset_of(host.adj_[size_t(v)])) return false;
    return true;
}

std::uint64_t Graph::fingerprint() const {
    std::uint64_t h = 0xCBF29CE484222325ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xFF;
            h *= 0x100000001B3ull;
        }
    };
    mix(std::uint64_t(n_));
    for (const auto& row : adj_)
        for (std::uint64_t w : row.words()) mix(w);
    return h;
}

std::string fingerprint_hex(std::uint64_t fp) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[size_t(i)] = digits[fp & 0xF];
        fp >>= 4;
    }
    return s;
}

}  // namespace wsatlab
