#ifndef ZORC_GRAPH_HPP
#define ZORC_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zorc {

// Simple undirected graph on dense vertex ids 0..n-1.
// Edges are normalized to (u, v) with u < v and stored in lexicographic
// order; that order defines the direction-bit convention used by orient().
// The constructor keeps self-loops and duplicate edges as given so that
// validate() can report them; every other operation requires a simple graph.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int min_degree() const;
    int max_degree() const;
    bool has_edge(int u, int v) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Directed graph on dense vertex ids 0..n-1; arcs stored sorted.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, std::vector<std::pair<int, int>> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    int out_degree(int v) const { return out_deg_[v]; }
    int in_degree(int v) const { return in_deg_[v]; }
    const std::vector<int>& out_degrees() const { return out_deg_; }
    const std::vector<int>& in_degrees() const { return in_deg_; }
    bool has_arc(int u, int v) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<int> out_deg_;
    std::vector<int> in_deg_;
};

struct Validation {
    bool simple = true;
    bool connected = true;
    std::vector<std::string> problems;
    bool ok() const { return simple && connected; }
};

// Checks simplicity (no loops, no duplicate edges) and connectivity.
// Inputs that fail are reported, never repaired.
Validation validate(const Graph& g);

// Orients edge i of g (lexicographic order) low->high when bits[i] is false,
// high->low when true. Throws std::invalid_argument on size mismatch.
Digraph orient(const Graph& g, const std::vector<bool>& bits);

Digraph reverse(const Digraph& d);

// True when every vertex has out-degree 0 or in-degree 0.
bool is_sink_source(const Digraph& d);

Graph underlying_graph(const Digraph& d);
bool is_orientation_of(const Digraph& d, const Graph& g);

// Proper 2-coloring (side containing vertex 0 first); nullopt when g is
// not connected-bipartite.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

// New graph with edge (u, v) added; throws if present or out of range.
Graph add_edge(const Graph& g, int u, int v);

// New graph with vertex v removed and remaining ids shifted down to stay
// dense. Returns the graph and leaves relabeling to the caller's arithmetic
// (old id w maps to w - (w > v)).
Graph remove_vertex(const Graph& g, int v);

// Restriction of d to the arcs not incident to v, with ids shifted as in
// remove_vertex.
Digraph remove_vertex(const Digraph& d, int v);

Graph permute(const Graph& g, const std::vector<int>& perm);
Digraph permute(const Digraph& d, const std::vector<int>& perm);

}  // namespace zorc

#endif
