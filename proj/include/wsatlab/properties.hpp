#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsatlab/budget.hpp"
#include "wsatlab/graph.hpp"

namespace wsatlab {

struct PropertyReport {
    std::string property;
    bool holds = false;
    // Lexicographically least failing cell (vertex set, or edge endpoints).
    std::optional<std::vector<int>> failure_witness;
    // Cells whose search ran out of budget before deciding.
    std::vector<std::vector<int>> undecided;
    std::map<std::string, std::int64_t> counts;
};

// Every s-set of vertices has s-2 common neighbors inducing a complete graph.
PropertyReport check_ext(const Graph& g, int s);

// Every (s-1)-set's common neighborhood has at least s-2 vertices and its
// induced subgraph contains the (s-2)-th power of a Hamiltonian path.
// Refuses n above the cap (default 120 for s=3, 80 for s=4, 64 beyond);
// pass max_n to override.
PropertyReport check_ham(const Graph& g, int s,
                         const SearchBudget& per_cell = SearchBudget::path_search_default(),
                         int max_n = 0);

// Every edge lies in an s-vertex complete subgraph; counts["N_s"] tallies the
// edges that do not.
PropertyReport check_bs(const Graph& g, int s);

// Every vertex pair (adjacent or not) has s-2 pairwise-adjacent common
// neighbors.
PropertyReport check_bstar(const Graph& g, int s);

// Number of (s-2)-sets whose members are pairwise adjacent and adjacent to
// both u and v.
unsigned long long pair_witness_count(const Graph& g, int u, int v, int s);

}  // namespace wsatlab
