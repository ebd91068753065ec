#include "zorc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace zorc {

namespace {

void check_vertex_range(int n, int u, int v) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
        throw std::invalid_argument("vertex id out of range 0.." + std::to_string(n - 1) +
                                    ": (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
}

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges) {
        check_vertex_range(n, u, v);
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        if (u != v) adj_[v].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

Digraph::Digraph(int n, std::vector<std::pair<int, int>> arcs) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (const auto& [u, v] : arcs) {
        check_vertex_range(n, u, v);
        if (u == v) throw std::invalid_argument("self-loop arc (" + std::to_string(u) + ")");
    }
    std::sort(arcs.begin(), arcs.end());
    if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) {
        throw std::invalid_argument("duplicate arc");
    }
    arcs_ = std::move(arcs);
    out_deg_.assign(n_, 0);
    in_deg_.assign(n_, 0);
    for (const auto& [u, v] : arcs_) {
        ++out_deg_[u];
        ++in_deg_[v];
    }
}

bool Digraph::has_arc(int u, int v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(u, v));
}

Validation validate(const Graph& g) {
    Validation result;
    const int n = g.vertex_count();
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const auto& [u, v] = g.edges()[i];
        if (u == v) {
            result.simple = false;
            result.problems.push_back("self-loop at vertex " + std::to_string(u));
        }
        if (i > 0 && g.edges()[i] == g.edges()[i - 1]) {
            result.simple = false;
            result.problems.push_back("duplicate edge (" + std::to_string(u) + ", " +
                                      std::to_string(v) + ")");
        }
    }
    if (n == 0) {
        result.connected = false;
        result.problems.push_back("empty vertex set");
        return result;
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != n) {
        result.connected = false;
        result.problems.push_back("graph is disconnected (" + std::to_string(reached) + " of " +
                                  std::to_string(n) + " vertices reachable from 0)");
    }
    return result;
}

Digraph orient(const Graph& g, const std::vector<bool>& bits) {
    if (static_cast<int>(bits.size()) != g.edge_count()) {
        throw std::invalid_argument("direction vector has " + std::to_string(bits.size()) +
                                    " bits for " + std::to_string(g.edge_count()) + " edges");
    }
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& [u, v] = g.edges()[i];
        arcs.emplace_back(bits[i] ? v : u, bits[i] ? u : v);
    }
    return Digraph(g.vertex_count(), std::move(arcs));
}

Digraph reverse(const Digraph& d) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(d.arc_count());
    for (const auto& [u, v] : d.arcs()) arcs.emplace_back(v, u);
    return Digraph(d.vertex_count(), std::move(arcs));
}

bool is_sink_source(const Digraph& d) {
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (d.out_degree(v) > 0 && d.in_degree(v) > 0) return false;
    }
    return true;
}

Graph underlying_graph(const Digraph& d) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(d.arc_count());
    for (const auto& [u, v] : d.arcs()) edges.emplace_back(u, v);
    return Graph(d.vertex_count(), std::move(edges));
}

bool is_orientation_of(const Digraph& d, const Graph& g) {
    if (d.vertex_count() != g.vertex_count() || d.arc_count() != g.edge_count()) return false;
    for (const auto& [u, v] : d.arcs()) {
        if (!g.has_edge(u, v)) return false;
        if (d.has_arc(v, u)) return false;
    }
    return true;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0 || !validate(g).connected) return std::nullopt;
    std::vector<int> color(n, -1);
    std::vector<int> queue{0};
    color[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v)) {
            if (color[w] == -1) {
                color[w] = 1 - color[v];
                queue.push_back(w);
            } else if (color[w] == color[v]) {
                return std::nullopt;
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> sides;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? sides.first : sides.second).push_back(v);
    return sides;
}

Graph add_edge(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("cannot add self-loop");
    if (g.has_edge(u, v)) throw std::invalid_argument("edge already present");
    auto edges = g.edges();
    edges.emplace_back(u, v);
    return Graph(g.vertex_count(), std::move(edges));
}

Graph remove_vertex(const Graph& g, int v) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        edges.emplace_back(a - (a > v), b - (b > v));
    }
    return Graph(g.vertex_count() - 1, std::move(edges));
}

Digraph remove_vertex(const Digraph& d, int v) {
    std::vector<std::pair<int, int>> arcs;
    for (const auto& [a, b] : d.arcs()) {
        if (a == v || b == v) continue;
        arcs.emplace_back(a - (a > v), b - (b > v));
    }
    return Digraph(d.vertex_count() - 1, std::move(arcs));
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.vertex_count(), std::move(edges));
}

Digraph permute(const Digraph& d, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(d.arc_count());
    for (const auto& [u, v] : d.arcs()) arcs.emplace_back(perm[u], perm[v]);
    return Digraph(d.vertex_count(), std::move(arcs));
}

}  // namespace zorc
