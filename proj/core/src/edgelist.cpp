#include "zorc/edgelist.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace zorc {

namespace {

struct Row {
    int line;
    long long a;
    long long b;
};

// Reads the header and m rows, with structural checks shared by both
// graph and digraph inputs. Duplicate detection is direction-sensitive
// when `directed` is set.
std::pair<int, std::vector<Row>> read_rows(std::istream& in, bool directed) {
    int line_no = 0;
    long long n = -1, m = -1;
    int header_line = 0;
    std::vector<Row> rows;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n >> m)) throw ParseError(line_no, "expected header \"n m\"");
            std::string extra;
            if (fields >> extra) throw ParseError(line_no, "trailing token after header: " + extra);
            if (n < 1) throw ParseError(line_no, "vertex count must be at least 1");
            if (m < 0) throw ParseError(line_no, "negative edge count");
            header_line = line_no;
            continue;
        }
        long long a, b;
        if (!(fields >> a >> b)) throw ParseError(line_no, "expected \"u v\"");
        std::string extra;
        if (fields >> extra) throw ParseError(line_no, "trailing token: " + extra);
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw ParseError(line_no, "vertex id out of range 0.." + std::to_string(n - 1));
        }
        if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
        rows.push_back({line_no, a, b});
    }
    if (n < 0) throw ParseError(line_no + 1, "missing header \"n m\"");
    if (static_cast<long long>(rows.size()) != m) {
        throw ParseError(line_no + 1, "header at line " + std::to_string(header_line) +
                                          " declares " + std::to_string(m) + " rows, found " +
                                          std::to_string(rows.size()));
    }
    std::set<std::pair<long long, long long>> seen;
    for (const Row& row : rows) {
        auto key = directed ? std::make_pair(row.a, row.b)
                            : std::make_pair(std::min(row.a, row.b), std::max(row.a, row.b));
        if (!seen.insert(key).second) {
            throw ParseError(row.line, std::string(directed ? "duplicate arc (" : "duplicate edge (") +
                                           std::to_string(row.a) + ", " + std::to_string(row.b) + ")");
        }
    }
    return {static_cast<int>(n), std::move(rows)};
}

}  // namespace

Graph parse_graph(std::istream& in) {
    auto [n, rows] = read_rows(in, false);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(rows.size());
    for (const Row& row : rows) edges.emplace_back(static_cast<int>(row.a), static_cast<int>(row.b));
    return Graph(n, std::move(edges));
}

Digraph parse_digraph(std::istream& in) {
    auto [n, rows] = read_rows(in, true);
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(rows.size());
    for (const Row& row : rows) arcs.emplace_back(static_cast<int>(row.a), static_cast<int>(row.b));
    return Digraph(n, std::move(arcs));
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

Digraph parse_digraph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph(in);
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph(in);
}

Digraph parse_digraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_digraph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_digraph(std::ostream& out, const Digraph& d) {
    out << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
}

std::string to_text(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

std::string to_text(const Digraph& d) {
    std::ostringstream out;
    write_digraph(out, d);
    return out.str();
}

}  // namespace zorc
