#pragma once

#include "wsatlab/graph.hpp"
#include "wsatlab/seed.hpp"

namespace wsatlab {

// Erdos-Renyi G(n, p). Pairs are visited in lexicographic (u, v) order and
// each consumes exactly one 64-bit draw, compared against floor(p * 2^64),
// so samples are reproducible bit-for-bit from (n, p, seed) alone.
Graph generate_gnp(int n, double p, const Seed& seed);

inline Graph complete_graph(int n) { return Graph::complete(n); }

}  // namespace wsatlab
