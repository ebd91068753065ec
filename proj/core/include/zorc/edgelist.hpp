#ifndef ZORC_EDGELIST_HPP
#define ZORC_EDGELIST_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "zorc/graph.hpp"

namespace zorc {

// Edge-list text format, shared by graphs and digraphs:
//   line 1: "n m"
//   m lines: "u v"   (edge u-v, or arc u->v for digraph files)
// Lines starting with '#' are comments and are skipped anywhere.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
Graph parse_graph_file(const std::string& path);

Digraph parse_digraph(std::istream& in);
Digraph parse_digraph_text(const std::string& text);
Digraph parse_digraph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
void write_digraph(std::ostream& out, const Digraph& d);
std::string to_text(const Graph& g);
std::string to_text(const Digraph& d);

}  // namespace zorc

#endif
