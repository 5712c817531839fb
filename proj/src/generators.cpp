#include "wsatlab/generators.hpp"

#include <cmath>
#include <stdexcept>

namespace wsatlab {

namespace {

// floor(p * 2^64) for p in (0, 1); exact because scaling by 2^64 only shifts
// the exponent of the double.
std::uint64_t acceptance_threshold(double p) {
    long double scaled = std::ldexp(static_cast<long double>(p), 64);
    return static_cast<std::uint64_t>(scaled);
}

}  // namespace

Graph generate_gnp(int n, double p, const Seed& seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
    if (p == 0.0) return Graph(n);
    if (p == 1.0) return Graph::complete(n);
    Graph g(n);
    SplitMix64 rng(seed);
    const std::uint64_t threshold = acceptance_threshold(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next() < threshold) g.add_edge(u, v);
    return g;
}

}  // namespace wsatlab
