#ifndef ZORC_BLOCKS_HPP
#define ZORC_BLOCKS_HPP

#include <vector>

#include "zorc/graph.hpp"

namespace zorc {

// A block is a maximal 2-connected subgraph or a bridge edge.
// A block counts as a cycle exactly when edge count equals vertex count.
struct Block {
    std::vector<int> vertices;
    int edge_count = 0;
    bool is_edge() const { return edge_count == 1; }
    bool is_cycle() const { return edge_count >= 3 && edge_count == static_cast<int>(vertices.size()); }
};

struct BlockProfile {
    std::vector<Block> blocks;
    int cycle_count = 0;
    bool is_cactus = false;  // connected and every block is an edge or a cycle
};

// Block decomposition by lowpoint DFS. Requires a simple graph; a
// disconnected input yields is_cactus = false.
BlockProfile cactus_profile(const Graph& g);

}  // namespace zorc

#endif
