#include "zorc/blocks.hpp"

#include <algorithm>

namespace zorc {

namespace {

struct BlockFinder {
    const Graph& g;
    std::vector<int> depth, low;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<Block> blocks;

    explicit BlockFinder(const Graph& graph)
        : g(graph), depth(graph.vertex_count(), -1), low(graph.vertex_count(), 0) {}

    void pop_block(const std::pair<int, int>& top_edge) {
        Block block;
        std::vector<int> members;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            ++block.edge_count;
            members.push_back(e.first);
            members.push_back(e.second);
            if (e == top_edge) break;
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        block.vertices = std::move(members);
        blocks.push_back(std::move(block));
    }

    // Iterative lowpoint DFS; blocks are popped at articulation boundaries.
    void run(int root) {
        struct Frame {
            int v;
            int parent;
            std::size_t next_index;
        };
        std::vector<Frame> stack;
        depth[root] = 0;
        low[root] = 0;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& frame = stack.back();
            int v = frame.v;
            const auto& nbrs = g.neighbors(v);
            if (frame.next_index < nbrs.size()) {
                int w = nbrs[frame.next_index++];
                if (w == frame.parent) {
                    frame.parent = -1;  // skip one parent edge; parallel edges revisit
                    continue;
                }
                if (depth[w] == -1) {
                    edge_stack.emplace_back(v, w);
                    depth[w] = depth[v] + 1;
                    low[w] = depth[w];
                    stack.push_back({w, v, 0});
                } else if (depth[w] < depth[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], depth[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& parent_frame = stack.back();
                    int p = parent_frame.v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= depth[p]) pop_block({p, v});
                }
            }
        }
    }
};

}  // namespace

BlockProfile cactus_profile(const Graph& g) {
    BlockProfile profile;
    const int n = g.vertex_count();
    if (n == 0) return profile;
    BlockFinder finder(g);
    finder.run(0);
    bool connected = true;
    for (int v = 0; v < n; ++v) {
        if (finder.depth[v] == -1) connected = false;
    }
    profile.blocks = std::move(finder.blocks);
    bool all_edge_or_cycle = true;
    for (const Block& block : profile.blocks) {
        if (block.is_cycle()) ++profile.cycle_count;
        else if (!block.is_edge()) all_edge_or_cycle = false;
    }
    profile.is_cactus = connected && all_edge_or_cycle;
    return profile;
}

}  // namespace zorc
