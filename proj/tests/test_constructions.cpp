#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "wsatlab/bootstrap.hpp"
#include "wsatlab/constructions.hpp"
#include "wsatlab/generators.hpp"
#include "wsatlab/seed.hpp"
#include "wsatlab/wsat.hpp"

using namespace wsatlab;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return g;
}

}  // namespace

TEST_CASE("path powers of complete graphs come back in vertex order") {
    for (int m : {4, 6, 9})
        for (int k = 1; k < m; ++k) {
            PathPowerResult r = find_path_power(complete_graph(m), VertexSet::full(m), k);
            REQUIRE(r.status == SearchStatus::found);
            std::vector<int> expect(m);
            for (int i = 0; i < m; ++i) expect[i] = i;
            CHECK(r.witness->order == expect);
            CHECK(r.witness->power == k);
            CHECK(is_path_power(complete_graph(m), r.witness->order, k));
        }
}

TEST_CASE("the five-cycle has no squared Hamiltonian path") {
    PathPowerResult r = find_path_power(cycle(5), VertexSet::full(5), 2);
    CHECK(r.status == SearchStatus::absent);
}

TEST_CASE("degenerate sets") {
    Graph g = complete_graph(4);
    CHECK(find_path_power(g, VertexSet(4), 1).status == SearchStatus::absent);
    PathPowerResult single = find_path_power(g, VertexSet::of(4, {2}), 1);
    REQUIRE(single.status == SearchStatus::found);
    CHECK(single.witness->order == std::vector<int>{2});
}

TEST_CASE("path-power search agrees with brute force") {
    for (int i = 0; i < 25; ++i) {
        Graph g = generate_gnp(8, 0.35 + 0.05 * double(i % 6), Seed(800 + i));
        for (int k = 1; k <= 3; ++k) {
            PathPowerResult r = find_path_power(g, VertexSet::full(8), k);
            REQUIRE(r.status != SearchStatus::budget_exhausted);
            bool oracle_found = oracle::has_path_power(g, {0, 1, 2, 3, 4, 5, 6, 7}, k);
            CHECK((r.status == SearchStatus::found) == oracle_found);
            if (r.status == SearchStatus::found)
                CHECK(is_path_power(g, r.witness->order, k));
        }
    }
}

TEST_CASE("a found witness on a dense graph validates") {
    Graph g = generate_gnp(25, 0.7, Seed(31));
    PathPowerResult r = find_path_power(g, VertexSet::full(25), 1);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.witness->order.size() == 25);
    CHECK(is_path_power(g, r.witness->order, 1));
}

TEST_CASE("is_path_power rejects orders with missing edges") {
    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    CHECK(is_path_power(p4, {0, 1, 2, 3}, 1));
    CHECK_FALSE(is_path_power(p4, {0, 2, 1, 3}, 1));
    CHECK_FALSE(is_path_power(p4, {0, 1, 2, 3}, 2));
    CHECK(is_path_power(complete_graph(4), {2, 0, 3, 1}, 3));
}

TEST_CASE("path-power search reports budget exhaustion distinctly") {
    Graph g = generate_gnp(20, 0.5, Seed(32));
    PathPowerResult r = find_path_power(g, VertexSet::full(20), 2, SearchBudget{2, 0});
    CHECK(r.status == SearchStatus::budget_exhausted);
}

TEST_CASE("kernel construction on a complete graph is a star") {
    for (int n : {4, 6, 9}) {
        KernelResult r = build_kernel_construction(complete_graph(n), 3);
        REQUIRE(r.status == KernelResult::Status::ok);
        CHECK(r.construction->kernel == std::vector<int>{0});
        CHECK(r.construction->h.edge_count() == std::size_t(n - 1));
        CHECK(r.construction->h.edge_count() == std::size_t(lovasz_number(n, 3)));
        for (int v = 1; v < n; ++v) CHECK(r.construction->h.has_edge(0, v));
        CHECK(percolates(complete_graph(n), r.construction->h, 3));
    }
}

TEST_CASE("kernel construction output size is the closed form when it succeeds") {
    for (int i = 0; i < 20; ++i) {
        int s = 3 + i % 3;
        Graph g = generate_gnp(14, 0.75, Seed(900 + i));
        KernelResult r = build_kernel_construction(g, s);
        if (r.status != KernelResult::Status::ok) continue;
        CHECK(r.construction->h.edge_count() == std::size_t(lovasz_number(14, s)));
        CHECK(r.construction->h.is_spanning_subgraph_of(g));
        CHECK(int(r.construction->kernel.size()) == s - 2);
        CHECK(oracle::is_clique(g, r.construction->kernel));
        for (const auto& [v, starts] : r.construction->attachments) {
            CHECK(int(starts.size()) == s - 2);
            for (int x : starts) CHECK(g.has_edge(std::min(v, x), std::max(v, x)));
        }
    }
}

TEST_CASE("the five-cycle defeats the kernel construction") {
    KernelResult r = build_kernel_construction(cycle(5), 3);
    // Too-small common neighborhoods: either the construction fails outright
    // or its output cannot percolate.
    if (r.status == KernelResult::Status::ok) {
        CHECK(r.construction->h.edge_count() == std::size_t(lovasz_number(5, 3)));
        CHECK_FALSE(percolates(cycle(5), r.construction->h, 3));
    } else {
        CHECK(r.status == KernelResult::Status::witness_absent);
    }
}

TEST_CASE("a graph with no kernel clique reports that") {
    // Empty graph: no 2-clique kernel exists for s = 4.
    KernelResult r = build_kernel_construction(Graph(6), 4);
    CHECK(r.status == KernelResult::Status::no_kernel);
}

TEST_CASE("core size evaluates the floor expression") {
    CHECK(gamma_exponent(3) == 1.0);
    CHECK(gamma_exponent(4) == 6.0);
    CHECK(gamma_exponent(5) == 0.0);
    CHECK(gamma_exponent(9) == 0.0);

    CoreSize a = core_size(500, 0.45, 3, 4.0);
    CHECK(a.m == 381);
    CHECK_FALSE(a.clamped);

    CoreSize b = core_size(500, 0.25, 3, 4.0);
    CHECK(b.m == 500);
    CHECK(b.clamped);

    CoreSize c = core_size(100, 0.8, 3, 1.0);
    CHECK(c.m == 33);
    CHECK_FALSE(c.clamped);
    double expect = std::pow(std::log(100.0), 2.0) / (0.8 * 0.8);
    CHECK(c.m == int(std::floor(expect)));
}

TEST_CASE("core construction on a complete graph percolates") {
    const int n = 40;
    CoreResult r = build_core_construction(complete_graph(n), 0.9, 3, 0.5);
    REQUIRE(r.status == CoreResult::Status::ok);
    REQUIRE_FALSE(r.degenerate);
    const int m = r.construction->m;
    CHECK(m >= 1);
    CHECK(m < n);
    // All core-internal edges present, s-2 = 1 attachment edges per outside vertex.
    CHECK(r.construction->h.edge_count() == std::size_t(m * (m - 1) / 2 + (n - m)));
    CHECK(percolates(complete_graph(n), r.construction->h, 3));
}

TEST_CASE("the empty graph fails the core construction everywhere") {
    CoreResult r = build_core_construction(Graph(30), 0.9, 3, 1.0);
    CHECK(r.status == CoreResult::Status::witness_absent);
    const int m = core_size(30, 0.9, 3, 1.0).m;
    CHECK(int(r.failed_vertices.size()) == 30 - m);
}

TEST_CASE("a fully clamped core is degenerate and equals the graph") {
    Graph g = generate_gnp(20, 0.4, Seed(33));
    CoreResult r = build_core_construction(g, 0.05, 3, 1.0);
    REQUIRE(r.status == CoreResult::Status::ok);
    CHECK(r.degenerate);
    CHECK(r.construction->clamped);
    CHECK(r.construction->m == 20);
    CHECK(r.construction->h.fingerprint() == g.fingerprint());
}

TEST_CASE("core pair witnesses certify percolation preconditions") {
    Graph k = complete_graph(12);
    CHECK(core_pair_without_witness(k, 5, 3) == std::nullopt);
    // In the empty graph the very first outside pair lacks witnesses.
    auto bad = core_pair_without_witness(Graph(12), 5, 3);
    REQUIRE(bad.has_value());
    CHECK(*bad == std::pair<int, int>{5, 6});
}

TEST_CASE("core construction bound holds on random dense graphs") {
    for (int i = 0; i < 10; ++i) {
        Graph g = generate_gnp(80, 0.7, Seed(950 + i));
        CoreResult r = build_core_construction(g, 0.7, 3, 2.0);
        if (r.status != CoreResult::Status::ok || r.degenerate) continue;
        const int m = r.construction->m;
        std::size_t inside = 0;
        for (const Edge& e : g.edges())
            if (e.u < m && e.v < m) ++inside;
        CHECK(r.construction->h.edge_count() <= inside + std::size_t(80 - m));
        CHECK(r.construction->h.is_spanning_subgraph_of(g));
        // Percolation whenever the pair condition holds as well.
        if (!core_pair_without_witness(g, m, 3))
            CHECK(percolates(g, r.construction->h, 3));
    }
}
