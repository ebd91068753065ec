#include "zorc/factory.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "zorc/blocks.hpp"
#include "zorc/canonical.hpp"

namespace zorc {

Graph build_G0(int n, int r) {
    if (n < 2 || !feasible_cactus_params(n, r)) {
        throw std::invalid_argument("infeasible parameters n=" + std::to_string(n) +
                                    " r=" + std::to_string(r));
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    for (int i = 1; i <= r; ++i) edges.emplace_back(2 * i - 1, 2 * i);
    return Graph(n, std::move(edges));
}

std::pair<Digraph, Digraph> build_extremal_orientations(int n, int r) {
    Graph g0 = build_G0(n, r);
    std::vector<bool> bits(g0.edge_count(), false);  // every edge low to high: hub out
    Digraph source = orient(g0, bits);
    return {source, reverse(source)};
}

ExtremalFamily extremal_set(int n, int r, const Exponent& a) {
    ExtremalFamily family;
    family.n = n;
    family.r = r;
    family.graphs.push_back(build_G0(n, r));
    auto [d1, d2] = build_extremal_orientations(n, r);
    family.digraphs.push_back(std::move(d1));
    family.digraphs.push_back(std::move(d2));
    const bool c4_case = a.is_exact() && a.integer() == 1 && n == 4 && r == 1;
    if (c4_case) {
        Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
        Digraph forward(4, {{0, 1}, {0, 3}, {2, 1}, {2, 3}});
        family.digraphs.push_back(forward);
        family.digraphs.push_back(reverse(forward));
        family.graphs.push_back(std::move(c4));
    }
    return family;
}

namespace {

// Frontier expansion over (n, r) levels with canonical-label dedup; all
// cacti arise by growing a leaf block (pendant edge or cycle) from a
// smaller cactus.
class CactusEnumerator {
public:
    const std::vector<Graph>& get(int n, int r) {
        if (!feasible_cactus_params(n, r)) {
            throw std::invalid_argument("infeasible parameters n=" + std::to_string(n) +
                                        " r=" + std::to_string(r));
        }
        if (n > kCactusMaxVertices) {
            throw std::invalid_argument("cactus enumeration supports at most " +
                                        std::to_string(kCactusMaxVertices) + " vertices, got " +
                                        std::to_string(n));
        }
        auto key = std::make_pair(n, r);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        std::map<CanonicalLabel, Graph> found;
        if (n == 1 && r == 0) {
            Graph k1(1, {});
            found.emplace(canonical_label(k1), std::move(k1));
        } else {
            if (n >= 2 && feasible_cactus_params(n - 1, r)) {
                for (const Graph& g : get(n - 1, r)) {
                    for (int v = 0; v < g.vertex_count(); ++v) {
                        Graph grown = attach_pendant(g, v);
                        found.emplace(canonical_label(grown), std::move(grown));
                    }
                }
            }
            if (r >= 1) {
                for (int k = 3; k <= n; ++k) {
                    if (!feasible_cactus_params(n - k + 1, r - 1)) continue;
                    for (const Graph& g : get(n - k + 1, r - 1)) {
                        for (int v = 0; v < g.vertex_count(); ++v) {
                            Graph grown = attach_cycle(g, v, k);
                            found.emplace(canonical_label(grown), std::move(grown));
                        }
                    }
                }
            }
        }
        std::vector<Graph> result;
        result.reserve(found.size());
        for (auto& [label, g] : found) result.push_back(std::move(g));
        return memo_.emplace(key, std::move(result)).first->second;
    }

private:
    static Graph attach_pendant(const Graph& g, int v) {
        auto edges = g.edges();
        edges.emplace_back(v, g.vertex_count());
        return Graph(g.vertex_count() + 1, std::move(edges));
    }

    static Graph attach_cycle(const Graph& g, int v, int k) {
        auto edges = g.edges();
        const int base = g.vertex_count();
        edges.emplace_back(v, base);
        for (int i = 0; i + 1 < k - 1; ++i) edges.emplace_back(base + i, base + i + 1);
        edges.emplace_back(v, base + k - 2);
        return Graph(base + k - 1, std::move(edges));
    }

    std::map<std::pair<int, int>, std::vector<Graph>> memo_;
};

CactusEnumerator& cactus_enumerator() {
    static CactusEnumerator instance;
    return instance;
}

std::mutex& enumerator_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

std::vector<Graph> enumerate_cacti(int n, int r) {
    std::lock_guard<std::mutex> lock(enumerator_mutex());
    return cactus_enumerator().get(n, r);
}

std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 1 || n > kUniverseMaxVertices) {
        throw std::invalid_argument("connected-graph universe supports 1.." +
                                    std::to_string(kUniverseMaxVertices) + " vertices, got " +
                                    std::to_string(n));
    }
    std::vector<Graph> level{Graph(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::map<CanonicalLabel, Graph> next;
        for (const Graph& g : level) {
            const int base = g.vertex_count();
            for (unsigned subset = 1; subset < (1u << base); ++subset) {
                auto edges = g.edges();
                for (int v = 0; v < base; ++v) {
                    if ((subset >> v) & 1) edges.emplace_back(v, base);
                }
                Graph grown(base + 1, std::move(edges));
                next.emplace(canonical_label(grown), std::move(grown));
            }
        }
        level.clear();
        for (auto& [label, g] : next) level.push_back(std::move(g));
    }
    return level;
}

std::map<std::string, Graph> fixtures() {
    std::map<std::string, Graph> result;
    result.emplace("G1", Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}));
    result.emplace("G2", Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}));
    return result;
}

}  // namespace zorc
