#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "wsatlab/generators.hpp"
#include "wsatlab/properties.hpp"
#include "wsatlab/seed.hpp"

using namespace wsatlab;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return g;
}

}  // namespace

TEST_CASE("EXT on complete graphs needs n >= 2s-2") {
    for (int s = 3; s <= 5; ++s)
        for (int n = s; n <= 12; ++n) {
            PropertyReport r = check_ext(complete_graph(n), s);
            CHECK(r.property == "EXT");
            CHECK(r.holds == (n >= 2 * s - 2));
        }
}

TEST_CASE("EXT fails on the five-cycle with the least witness") {
    PropertyReport r = check_ext(cycle(5), 3);
    CHECK_FALSE(r.holds);
    REQUIRE(r.failure_witness.has_value());
    CHECK(*r.failure_witness == std::vector<int>{0, 1, 2});
    CHECK_FALSE(oracle::check_ext(cycle(5), 3));
}

TEST_CASE("HAM on complete graphs needs n >= 2s-3") {
    for (int s = 3; s <= 5; ++s)
        for (int n = s - 1; n <= 10; ++n) {
            PropertyReport r = check_ham(complete_graph(n), s);
            CHECK(r.property == "HAM");
            CHECK(r.holds == (n >= 2 * s - 3));
            CHECK(r.undecided.empty());
        }
}

TEST_CASE("HAM fails on the five-cycle at the first adjacent pair") {
    PropertyReport r = check_ham(cycle(5), 3);
    CHECK_FALSE(r.holds);
    REQUIRE(r.failure_witness.has_value());
    CHECK(*r.failure_witness == std::vector<int>{0, 1});
}

TEST_CASE("HAM refuses oversized graphs unless the cap is raised") {
    Graph big(121);
    CHECK_THROWS_AS(check_ham(big, 3), std::invalid_argument);
    PropertyReport r = check_ham(big, 3, SearchBudget::path_search_default(), 121);
    CHECK_FALSE(r.holds);  // empty common neighborhoods everywhere
    CHECK(*r.failure_witness == std::vector<int>{0, 1});
}

TEST_CASE("HAM reports undecided cells when the budget runs dry") {
    SearchBudget tiny{1, 0};
    PropertyReport r = check_ham(complete_graph(20), 3, tiny);
    CHECK_FALSE(r.holds);
    CHECK_FALSE(r.failure_witness.has_value());
    CHECK(r.undecided.size() == 190);
    CHECK(r.counts.at("undecided") == 190);
    CHECK(r.counts.at("cells_checked") == 190);
}

TEST_CASE("B_s counts edges outside any clique") {
    PropertyReport c5 = check_bs(cycle(5), 3);
    CHECK(c5.property == "B_s");
    CHECK_FALSE(c5.holds);
    CHECK(c5.counts.at("N_s") == 5);
    REQUIRE(c5.failure_witness.has_value());
    CHECK(*c5.failure_witness == std::vector<int>{0, 1});

    CHECK(check_bs(complete_graph(4), 3).holds);
    CHECK(check_bs(complete_graph(4), 3).counts.at("N_s") == 0);
    CHECK(check_bs(complete_graph(4), 4).holds);

    // A pendant edge hangs off the clique and lies in no triangle.
    Graph pendant = complete_graph(4);
    {
        Graph g(5);
        for (const Edge& e : pendant.edges()) g.add_edge(e.u, e.v);
        g.add_edge(3, 4);
        pendant = g;
    }
    PropertyReport r = check_bs(pendant, 3);
    CHECK_FALSE(r.holds);
    CHECK(r.counts.at("N_s") == 1);
    CHECK(*r.failure_witness == std::vector<int>{3, 4});
}

TEST_CASE("B*_s needs witnesses for every pair") {
    CHECK(check_bstar(complete_graph(4), 3).holds);
    CHECK(check_bstar(complete_graph(4), 3).property == "B*_s");

    Graph isolated(5);
    for (const Edge& e : complete_graph(4).edges()) isolated.add_edge(e.u, e.v);
    PropertyReport r = check_bstar(isolated, 3);
    CHECK_FALSE(r.holds);
    REQUIRE(r.failure_witness.has_value());
    CHECK(*r.failure_witness == std::vector<int>{0, 4});
}

TEST_CASE("pair witness counts") {
    for (int n : {5, 7, 9}) {
        Graph k = complete_graph(n);
        CHECK(pair_witness_count(k, 0, 1, 3) == static_cast<unsigned long long>(n - 2));
    }
    CHECK(pair_witness_count(cycle(5), 0, 1, 3) == 0);
    CHECK(pair_witness_count(cycle(5), 0, 2, 3) == 1);

    for (int i = 0; i < 15; ++i) {
        Graph g = generate_gnp(9, 0.55, Seed(500 + i));
        for (int s = 3; s <= 5; ++s)
            for (int u = 0; u < 9; ++u)
                for (int v = u + 1; v < 9; ++v)
                    CHECK(pair_witness_count(g, u, v, s) == oracle::mu(g, u, v, s));
    }
}

TEST_CASE("checkers agree with brute force on random graphs") {
    for (int i = 0; i < 30; ++i) {
        int n = 6 + i % 6;
        Graph g = generate_gnp(n, 0.5 + 0.04 * double(i % 5), Seed(600 + i));
        for (int s = 3; s <= 4; ++s) {
            CHECK(check_bs(g, s).holds == oracle::check_bs(g, s));
            CHECK(check_bstar(g, s).holds == oracle::check_bstar(g, s));
            CHECK(check_ext(g, s).holds == oracle::check_ext(g, s));
        }
    }
}

TEST_CASE("the pair property implies the edge property") {
    for (int i = 0; i < 30; ++i) {
        Graph g = generate_gnp(10, 0.6, Seed(700 + i));
        for (int s = 3; s <= 4; ++s) {
            PropertyReport star = check_bstar(g, s);
            if (star.holds) CHECK(check_bs(g, s).holds);
        }
    }
}
