#include <doctest.h>

#include <cstdio>
#include <sstream>
#include <string>

#include "wsatlab/edgelist.hpp"
#include "wsatlab/generators.hpp"
#include "wsatlab/graph.hpp"
#include "wsatlab/seed.hpp"

using namespace wsatlab;

TEST_CASE("round trip through text") {
    Graph g = generate_gnp(9, 0.4, Seed(3));
    std::string text = to_edge_list(g);
    Graph back = read_edge_list(text);
    CHECK(back.vertex_count() == 9);
    CHECK(back.fingerprint() == g.fingerprint());
}

TEST_CASE("round trip through a stream") {
    Graph g = complete_graph(5);
    std::ostringstream out;
    write_edge_list(g, out);
    std::istringstream in(out.str());
    CHECK(read_edge_list(in).fingerprint() == g.fingerprint());
}

TEST_CASE("header carries vertex and edge counts") {
    Graph g = read_edge_list("4 2\n0 1\n2 3\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 3));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("empty graph round trips") {
    Graph g = read_edge_list("3 0\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 0);
    CHECK(to_edge_list(g) == "3 0\n");
}

TEST_CASE("parse errors carry line and column") {
    auto expect_error = [](const std::string& text, int line, int column) {
        try {
            read_edge_list(text);
            FAIL("expected ParseError for " << text);
        } catch (const ParseError& e) {
            CHECK(e.line == line);
            CHECK(e.column == column);
            CHECK(std::string(e.what()).find(std::to_string(line) + ":" +
                                             std::to_string(column) + ":") == 0);
        }
    };

    expect_error("", 1, 1);                 // missing header
    expect_error("4 x\n", 1, 3);            // non-numeric edge count
    expect_error("4 1\n", 2, 1);            // fewer edges than announced
    expect_error("4 1\n0 9\n", 2, 3);       // endpoint out of range
    expect_error("4 1\n3 1\n", 2, 1);       // u >= v
    expect_error("4 2\n0 1\n0 1\n", 3, 1);  // duplicate edge
    expect_error("4 2\n1 2\n0 3\n", 3, 1);  // out of lexicographic order
    expect_error("4 1\n0 1\n0 2\n", 3, 1);  // trailing content
}

TEST_CASE("file round trip") {
    Graph g = generate_gnp(7, 0.6, Seed(11));
    std::string path = "edgelist_roundtrip.tmp";
    write_edge_list_file(g, path);
    CHECK(read_edge_list_file(path).fingerprint() == g.fingerprint());
    std::remove(path.c_str());
}
