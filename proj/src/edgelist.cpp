#include "wsatlab/edgelist.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace wsatlab {

namespace {

struct LineScanner {
    const std::string& text;
    int line_no;
    size_t pos = 0;

    int column() const { return int(pos) + 1; }

    void skip_spaces() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    long long read_int(const char* what) {
        skip_spaces();
        int col = column();
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
            throw ParseError(line_no, col, std::string("expected ") + what);
        long long value = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            value = value * 10 + (text[pos] - '0');
            if (value > (1ll << 40)) throw ParseError(line_no, col, std::string(what) + " too large");
            ++pos;
        }
        return value;
    }

    void expect_end() {
        skip_spaces();
        if (pos < text.size() && text[pos] != '\r')
            throw ParseError(line_no, column(), "trailing characters");
    }
};

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) throw ParseError(1, 1, "expected header line \"n m\"");
    ++line_no;
    LineScanner header{line, line_no};
    long long n = header.read_int("vertex count");
    long long m = header.read_int("edge count");
    header.expect_end();
    if (n > Graph::kMaxVertices)
        throw ParseError(line_no, 1, "vertex count exceeds " + std::to_string(Graph::kMaxVertices));
    if (m > n * (n - 1) / 2) throw ParseError(line_no, 1, "edge count exceeds simple-graph maximum");

    Graph g(static_cast<int>(n));
    Edge prev{-1, -1};
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line))
            throw ParseError(line_no + 1, 1,
                             "expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
        ++line_no;
        LineScanner sc{line, line_no};
        long long u = sc.read_int("vertex id");
        sc.skip_spaces();
        int v_col = sc.column();
        long long v = sc.read_int("vertex id");
        sc.expect_end();
        if (u >= n) throw ParseError(line_no, 1, "vertex id out of range: " + std::to_string(u));
        if (v >= n) throw ParseError(line_no, v_col, "vertex id out of range: " + std::to_string(v));
        if (u >= v) throw ParseError(line_no, 1, "edges must satisfy u < v");
        Edge e{int(u), int(v)};
        if (e == prev) throw ParseError(line_no, 1, "duplicate edge");
        if (e < prev) throw ParseError(line_no, 1, "edges must be sorted lexicographically");
        prev = e;
        g.add_edge(e.u, e.v);
    }

    while (std::getline(in, line)) {
        ++line_no;
        LineScanner sc{line, line_no};
        sc.skip_spaces();
        if (sc.pos < line.size() && line[sc.pos] != '\r')
            throw ParseError(line_no, sc.column(), "unexpected content after edge list");
    }
    return g;
}

Graph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_edge_list(g, out);
}

}  // namespace wsatlab
