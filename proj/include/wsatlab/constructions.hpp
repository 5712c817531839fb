#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wsatlab/budget.hpp"
#include "wsatlab/clique_order.hpp"
#include "wsatlab/graph.hpp"

namespace wsatlab {

enum class SearchStatus { found, absent, budget_exhausted };

// Ordering x_1..x_f of a vertex set in which any two vertices at distance
// at most k along the order are adjacent.
struct PathPowerWitness {
    std::vector<int> order;
    int power = 1;
};

struct PathPowerResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<PathPowerWitness> witness;
    std::uint64_t nodes = 0;
};

// Searches for the k-th power of a Hamiltonian path of the subgraph induced
// by s_set. Backtracking over partial orderings: each appended vertex must be
// adjacent to the last min(k, length) placed ones; candidates are tried
// fewest-remaining-neighbors first with vertex id as tie-break. The empty set
// has no witness by convention; a singleton is a 1-vertex path.
PathPowerResult find_path_power(const Graph& g, const VertexSet& s_set, int k,
                                const SearchBudget& budget = SearchBudget::path_search_default());

// Validity check used by tests and certificate re-verification.
bool is_path_power(const Graph& g, const std::vector<int>& order, int k);

// Spanning subgraph built from a kernel clique: the s-2 kernel vertices span
// a complete graph, every common neighbor of the kernel connects to all of
// it, and every other vertex v attaches to the first s-2 vertices of a
// path-power ordering of the common neighborhood of kernel+v. When it
// succeeds the result has exactly C(s-2,2) + (n-s+2)(s-2) edges.
struct KernelConstruction {
    std::vector<int> kernel;
    Graph h;
    std::map<int, std::vector<int>> attachments;
};

struct KernelResult {
    enum class Status { ok, no_kernel, witness_absent, budget_exhausted };
    Status status = Status::ok;
    std::optional<KernelConstruction> construction;
    std::vector<int> failed_vertices;     // vertices whose cell provably has no witness
    std::vector<int> exhausted_vertices;  // vertices whose search ran out of budget
};

KernelResult build_kernel_construction(
    const Graph& g, int s, const SearchBudget& per_vertex = SearchBudget::path_search_default());

// Core size floor((ln n)^(gamma+s-2) / p^(s-1) * sqrt(w)), clamped to n.
struct CoreSize {
    int m = 0;
    bool clamped = false;
};

CoreSize core_size(int n, double p, int s, double w);

// Exponent table for the core size: 1 for s=3, 6 for s=4, 0 beyond.
double gamma_exponent(int s);

// Spanning subgraph keeping all edges inside the core X = {0..m-1} and
// attaching every outside vertex v to the first s-2 vertices of a path-power
// ordering of N(v) within X.
struct CoreConstruction {
    int m = 0;
    bool clamped = false;
    double w = 0;
    double gamma = 0;
    Graph h;
    std::map<int, std::vector<int>> attachments;
};

struct CoreResult {
    enum class Status { ok, witness_absent, budget_exhausted };
    Status status = Status::ok;
    std::optional<CoreConstruction> construction;
    std::vector<int> failed_vertices;
    std::vector<int> exhausted_vertices;
    bool degenerate = false;  // m clamped all the way to n, so h == g
};

CoreResult build_core_construction(
    const Graph& g, double p, int s, double w,
    const SearchBudget& per_vertex = SearchBudget::path_search_default());

// First pair of outside vertices (lexicographically) lacking s-2 pairwise
// adjacent common neighbors inside the core, or nullopt when every pair has
// them. Together with per-vertex path-power witnesses this condition makes
// the core construction percolate.
std::optional<std::pair<int, int>> core_pair_without_witness(const Graph& g, int m, int s);

}  // namespace wsatlab
