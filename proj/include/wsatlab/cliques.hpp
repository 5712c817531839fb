#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wsatlab/graph.hpp"

namespace wsatlab {

// Vertices adjacent to every member of u_set (intersection of rows; the whole
// vertex set when u_set is empty). Members of u_set never appear in the result.
VertexSet common_neighborhood(const Graph& g, const VertexSet& u_set);
VertexSet common_neighborhood(const Graph& g, std::span<const int> u_set);

// Lexicographically least k-subset of candidates inducing a complete subgraph,
// or nullopt. k = 0 yields the empty clique.
std::optional<std::vector<int>> contains_clique(const Graph& g, const VertexSet& candidates, int k);

bool has_clique(const Graph& g, const VertexSet& candidates, int k);

// Number of s-vertex complete subgraphs; s = 0 counts the empty set (1).
unsigned long long count_cliques(const Graph& g, int s);
unsigned long long count_cliques_within(const Graph& g, const VertexSet& allowed, int s);

}  // namespace wsatlab
