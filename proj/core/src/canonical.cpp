#include "zorc/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zorc {

namespace {

// Exact minimum-encoding search. Slots are grouped by vertex class (an
// isomorphism-invariant key), so only class-preserving placements are
// tried. The encoding orders cells by growing principal minor: block t
// holds the adjacency bits between slot t and slots 0..t-1, which lets a
// partial assignment be compared against the incumbent prefix and pruned.
struct Engine {
    int n;
    bool directed;
    std::vector<std::uint16_t> fwd;  // graph adjacency, or out-neighbors
    std::vector<std::uint16_t> bwd;  // in-neighbors (directed only)
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of_slot;
    std::vector<int> offset;
    std::vector<int> slot_vertex;
    std::vector<char> assigned;
    std::string buffer;
    std::string best;
    std::uint64_t generation = 0;

    Engine(int vertex_count, bool is_directed)
        : n(vertex_count),
          directed(is_directed),
          fwd(vertex_count, 0),
          bwd(vertex_count, 0),
          slot_vertex(vertex_count, -1),
          assigned(vertex_count, 0) {}

    void build_layout(const std::vector<std::pair<int, int>>& keys) {
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return keys[a] < keys[b]; });
        for (int i = 0; i < n; ++i) {
            if (i == 0 || keys[order[i]] != keys[order[i - 1]]) classes.push_back({});
            classes.back().push_back(order[i]);
        }
        class_of_slot.resize(n);
        int slot = 0;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            for (std::size_t k = 0; k < classes[c].size(); ++k) class_of_slot[slot++] = static_cast<int>(c);
        }
        offset.resize(n + 1);
        offset[0] = 0;
        const int per_block = directed ? 2 : 1;
        for (int t = 0; t < n; ++t) offset[t + 1] = offset[t] + per_block * t;
        buffer.assign(offset[n], '0');
    }

    void write_block(int t, int v) {
        char* out = buffer.data() + offset[t];
        for (int j = 0; j < t; ++j) out[j] = ((fwd[v] >> slot_vertex[j]) & 1) ? '1' : '0';
        if (directed) {
            for (int j = 0; j < t; ++j) out[t + j] = ((bwd[v] >> slot_vertex[j]) & 1) ? '1' : '0';
        }
    }

    void search(int t, bool tight) {
        if (t == n) {
            if (!tight) {
                best = buffer;
                ++generation;
            }
            return;
        }
        for (int v : classes[class_of_slot[t]]) {
            if (assigned[v]) continue;
            slot_vertex[t] = v;
            write_block(t, v);
            bool child_tight = tight;
            if (tight) {
                int cmp = buffer.compare(offset[t], offset[t + 1] - offset[t], best, offset[t],
                                         offset[t + 1] - offset[t]);
                if (cmp > 0) continue;
                child_tight = cmp == 0;
            }
            assigned[v] = 1;
            const std::uint64_t seen = generation;
            search(t + 1, child_tight);
            assigned[v] = 0;
            if (generation != seen) tight = true;
        }
    }

    std::string run(char tag, const std::vector<std::pair<int, int>>& keys) {
        build_layout(keys);
        search(0, false);
        std::string label;
        label.push_back(tag);
        label.push_back(static_cast<char>(n));
        int slot = 0;
        for (const auto& cls : classes) {
            for (std::size_t k = 0; k < cls.size(); ++k, ++slot) {
                label.push_back(static_cast<char>(keys[cls[0]].first));
                if (directed) label.push_back(static_cast<char>(keys[cls[0]].second));
            }
        }
        label.push_back('|');
        label += best;
        return label;
    }
};

void check_cap(int n) {
    if (n > kCanonicalMaxVertices) {
        throw std::invalid_argument("canonical_label supports at most " +
                                    std::to_string(kCanonicalMaxVertices) + " vertices, got " +
                                    std::to_string(n));
    }
}

}  // namespace

CanonicalLabel canonical_label(const Graph& g) {
    check_cap(g.vertex_count());
    Engine engine(g.vertex_count(), false);
    for (const auto& [u, v] : g.edges()) {
        engine.fwd[u] |= static_cast<std::uint16_t>(1u << v);
        engine.fwd[v] |= static_cast<std::uint16_t>(1u << u);
    }
    std::vector<std::pair<int, int>> keys(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) keys[v] = {g.degree(v), 0};
    return {engine.run('G', keys)};
}

CanonicalLabel canonical_label(const Digraph& d) {
    check_cap(d.vertex_count());
    Engine engine(d.vertex_count(), true);
    for (const auto& [u, v] : d.arcs()) {
        engine.fwd[u] |= static_cast<std::uint16_t>(1u << v);
        engine.bwd[v] |= static_cast<std::uint16_t>(1u << u);
    }
    std::vector<std::pair<int, int>> keys(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v) keys[v] = {d.out_degree(v), d.in_degree(v)};
    return {engine.run('D', keys)};
}

}  // namespace zorc
