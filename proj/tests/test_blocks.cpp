#include <doctest.h>

#include <algorithm>

#include "zorc/blocks.hpp"
#include "zorc/factory.hpp"
#include "zorc/graph.hpp"

using namespace zorc;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

int edge_blocks(const BlockProfile& p) {
    return static_cast<int>(std::count_if(p.blocks.begin(), p.blocks.end(),
                                          [](const Block& b) { return b.is_edge(); }));
}

int cycle_blocks(const BlockProfile& p) {
    return static_cast<int>(std::count_if(p.blocks.begin(), p.blocks.end(),
                                          [](const Block& b) { return b.is_cycle(); }));
}

}  // namespace

TEST_CASE("single vertex and single edge are cacti with no cycles") {
    BlockProfile k1 = cactus_profile(Graph(1, {}));
    CHECK(k1.is_cactus);
    CHECK(k1.cycle_count == 0);
    CHECK(k1.blocks.empty());

    BlockProfile k2 = cactus_profile(Graph(2, {{0, 1}}));
    CHECK(k2.is_cactus);
    CHECK(k2.cycle_count == 0);
    REQUIRE(k2.blocks.size() == 1);
    CHECK(k2.blocks[0].is_edge());
}

TEST_CASE("trees decompose into edge blocks") {
    Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    BlockProfile p = cactus_profile(star);
    CHECK(p.is_cactus);
    CHECK(p.cycle_count == 0);
    CHECK(p.blocks.size() == 4);
    CHECK(edge_blocks(p) == 4);
}

TEST_CASE("a cycle is a single cycle block") {
    for (int n : {3, 4, 5, 6}) {
        BlockProfile p = cactus_profile(cycle(n));
        CHECK(p.is_cactus);
        CHECK(p.cycle_count == 1);
        REQUIRE(p.blocks.size() == 1);
        CHECK(p.blocks[0].is_cycle());
        CHECK(p.blocks[0].edge_count == n);
        CHECK(static_cast<int>(p.blocks[0].vertices.size()) == n);
    }
}

TEST_CASE("triangle with a pendant mixes block kinds") {
    Graph g = fixtures().at("G1");
    BlockProfile p = cactus_profile(g);
    CHECK(p.is_cactus);
    CHECK(p.cycle_count == 1);
    CHECK(p.blocks.size() == 2);
    CHECK(edge_blocks(p) == 1);
    CHECK(cycle_blocks(p) == 1);
}

TEST_CASE("two triangles sharing a hub form two cycle blocks") {
    Graph g = fixtures().at("G2");
    BlockProfile p = cactus_profile(g);
    CHECK(p.is_cactus);
    CHECK(p.cycle_count == 2);
    CHECK(p.blocks.size() == 2);
    CHECK(cycle_blocks(p) == 2);
}

TEST_CASE("graphs with an edge shared by two cycles are not cacti") {
    // K4 minus an edge: one block with 4 vertices and 5 edges.
    Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    BlockProfile p = cactus_profile(diamond);
    CHECK(!p.is_cactus);
    REQUIRE(p.blocks.size() == 1);
    CHECK(p.blocks[0].edge_count == 5);
    CHECK(!p.blocks[0].is_cycle());
    CHECK(!p.blocks[0].is_edge());

    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(!cactus_profile(k4).is_cactus);
}

TEST_CASE("disconnected graphs are never cacti") {
    Graph g(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}});
    BlockProfile p = cactus_profile(g);
    CHECK(!p.is_cactus);
}

TEST_CASE("bundle cacti have the expected block structure") {
    BlockProfile p = cactus_profile(build_G0(8, 3));
    CHECK(p.is_cactus);
    CHECK(p.cycle_count == 3);
    // 3 triangles plus 1 pendant edge.
    CHECK(p.blocks.size() == 4);
    CHECK(cycle_blocks(p) == 3);
    CHECK(edge_blocks(p) == 1);
}

TEST_CASE("cycle count matches the cyclomatic number on cacti") {
    for (int n = 2; n <= 7; ++n) {
        for (int r = 0; 2 * r <= n - 1; ++r) {
            for (const Graph& g : enumerate_cacti(n, r)) {
                BlockProfile p = cactus_profile(g);
                CHECK(p.is_cactus);
                CHECK(p.cycle_count == r);
                CHECK(g.edge_count() - g.vertex_count() + 1 == r);
            }
        }
    }
}
