#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "wsatlab/graph.hpp"

namespace wsatlab {

struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    int line;
    int column;
};

// Text format: first line "n m", then m lines "u v" with 0 <= u < v < n,
// in strictly increasing lexicographic order (which also bans duplicates).
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list(const Graph& g);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace wsatlab
