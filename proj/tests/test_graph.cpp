#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "zorc/edgelist.hpp"
#include "zorc/graph.hpp"

using namespace zorc;

namespace {

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph star(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph(n, std::move(e));
}

}  // namespace

TEST_CASE("graph normalizes edges to sorted low-high pairs") {
    Graph g(4, {{3, 0}, {2, 1}, {1, 0}});
    std::vector<std::pair<int, int>> want = {{0, 1}, {0, 3}, {1, 2}};
    CHECK(g.edges() == want);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
    CHECK(g.has_edge(3, 0));
    CHECK(g.has_edge(0, 3));
    CHECK(!g.has_edge(2, 3));
    CHECK(g.min_degree() == 1);
    CHECK(g.max_degree() == 2);
    std::vector<int> n0 = {1, 3};
    CHECK(g.neighbors(0) == n0);
}

TEST_CASE("validate reports loops, duplicates, and disconnection") {
    CHECK(validate(Graph(1, {})).ok());
    CHECK(validate(cycle(5)).ok());

    Validation loop = validate(Graph(3, {{0, 0}, {0, 1}, {1, 2}}));
    CHECK(!loop.simple);
    CHECK(!loop.problems.empty());

    Validation dup = validate(Graph(3, {{0, 1}, {1, 0}, {1, 2}}));
    CHECK(!dup.simple);

    Validation disc = validate(Graph(4, {{0, 1}, {2, 3}}));
    CHECK(disc.simple);
    CHECK(!disc.connected);
    CHECK(!disc.ok());
    CHECK(!disc.problems.empty());
}

TEST_CASE("orient follows the direction-bit convention") {
    Graph c3 = cycle(3);  // edges (0,1) (0,2) (1,2)
    Digraph low = orient(c3, {false, false, false});
    std::vector<std::pair<int, int>> want = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(low.arcs() == want);

    Digraph flipped = orient(c3, {true, false, false});
    CHECK(flipped.has_arc(1, 0));
    CHECK(!flipped.has_arc(0, 1));
    CHECK(flipped.has_arc(0, 2));

    CHECK_THROWS_AS(orient(c3, {false, false}), std::invalid_argument);
}

TEST_CASE("digraph degrees and reversal") {
    Digraph d(4, {{0, 1}, {0, 2}, {3, 0}});
    CHECK(d.out_degree(0) == 2);
    CHECK(d.in_degree(0) == 1);
    CHECK(d.out_degree(3) == 1);
    CHECK(d.in_degree(1) == 1);

    Digraph r = reverse(d);
    CHECK(r.has_arc(1, 0));
    CHECK(r.has_arc(2, 0));
    CHECK(r.has_arc(0, 3));
    CHECK(r.arc_count() == 3);
    CHECK(reverse(r).arcs() == d.arcs());

    CHECK_THROWS_AS(Digraph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(2, {{0, 1}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("sink-source recognition") {
    // Hub-out star: hub has in-degree 0, leaves have out-degree 0.
    Digraph hub_out(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(is_sink_source(hub_out));
    CHECK(is_sink_source(reverse(hub_out)));

    Digraph p3(3, {{0, 1}, {1, 2}});
    CHECK(!is_sink_source(p3));  // middle vertex has both degrees positive

    Digraph c3(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(!is_sink_source(c3));

    CHECK(is_sink_source(Digraph(1, {})));

    // Alternating orientation of C4.
    Digraph alt(4, {{0, 1}, {2, 1}, {2, 3}, {0, 3}});
    CHECK(is_sink_source(alt));
}

TEST_CASE("underlying graph and orientation recognition") {
    Graph c4 = cycle(4);
    Digraph d = orient(c4, {false, true, true, false});
    CHECK(underlying_graph(d).edges() == c4.edges());
    CHECK(is_orientation_of(d, c4));
    CHECK(!is_orientation_of(d, cycle(3)));

    // Anti-parallel arc pairs are not orientations.
    Digraph anti(2, {{0, 1}, {1, 0}});
    CHECK(!is_orientation_of(anti, Graph(2, {{0, 1}})));

    // Missing an arc is not an orientation either.
    Digraph partial(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(!is_orientation_of(partial, c4));
}

TEST_CASE("bipartition splits even cycles and rejects odd ones") {
    auto c4 = bipartition(cycle(4));
    REQUIRE(c4.has_value());
    std::vector<int> side_a = {0, 2}, side_b = {1, 3};
    CHECK(c4->first == side_a);
    CHECK(c4->second == side_b);

    CHECK(!bipartition(cycle(3)).has_value());
    CHECK(!bipartition(cycle(5)).has_value());
    CHECK(bipartition(cycle(6)).has_value());
    CHECK(bipartition(path(4)).has_value());
    CHECK(bipartition(star(5)).has_value());
    CHECK(bipartition(star(5))->second.size() == 4);

    // Disconnected inputs are rejected even when 2-colorable.
    CHECK(!bipartition(Graph(4, {{0, 1}, {2, 3}})).has_value());
}

TEST_CASE("add_edge and remove_vertex relabel densely") {
    Graph p3 = path(3);
    Graph c3 = add_edge(p3, 0, 2);
    CHECK(c3.edge_count() == 3);
    CHECK_THROWS_AS(add_edge(c3, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(add_edge(p3, 0, 3), std::invalid_argument);

    // Removing the middle of a path leaves two isolated vertices.
    Graph mid = remove_vertex(p3, 1);
    CHECK(mid.vertex_count() == 2);
    CHECK(mid.edge_count() == 0);

    // Removing an end keeps the rest intact with shifted ids.
    Graph end = remove_vertex(p3, 0);
    CHECK(end.vertex_count() == 2);
    std::vector<std::pair<int, int>> want = {{0, 1}};
    CHECK(end.edges() == want);

    Digraph d(4, {{0, 1}, {1, 2}, {3, 2}});
    Digraph dd = remove_vertex(d, 1);
    CHECK(dd.vertex_count() == 3);
    std::vector<std::pair<int, int>> darcs = {{2, 1}};
    CHECK(dd.arcs() == darcs);
}

TEST_CASE("permute relabels consistently") {
    Graph c4 = cycle(4);
    std::vector<int> rot = {1, 2, 3, 0};  // perm[v] = new id of v
    Graph g2 = permute(c4, rot);
    CHECK(g2.edges() == c4.edges());  // a 4-cycle rotated is the same labeled 4-cycle

    Graph p3 = path(3);
    Graph swapped = permute(p3, {2, 1, 0});
    std::vector<std::pair<int, int>> want = {{0, 1}, {1, 2}};
    CHECK(swapped.edges() == want);

    Digraph d(3, {{0, 1}, {1, 2}});
    Digraph pd = permute(d, {2, 1, 0});
    std::vector<std::pair<int, int>> darcs = {{1, 0}, {2, 1}};
    CHECK(pd.arcs() == darcs);
}

TEST_CASE("edge list parsing accepts the documented format") {
    Graph g = parse_graph_text("4 4\n0 1\n1 2\n2 3\n0 3\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);

    // Comments and blank lines are skipped anywhere.
    Graph h = parse_graph_text("# a square\n\n4 4\n0 1\n# middle\n1 2\n2 3\n0 3\n");
    CHECK(h.edges() == g.edges());

    Digraph d = parse_digraph_text("3 3\n0 1\n1 2\n2 0\n");
    CHECK(d.arc_count() == 3);
    CHECK(d.has_arc(2, 0));

    // Anti-parallel arcs are legal in digraph files.
    Digraph anti = parse_digraph_text("2 2\n0 1\n1 0\n");
    CHECK(anti.arc_count() == 2);
}

TEST_CASE("edge list parsing rejects malformed input with line numbers") {
    CHECK_THROWS_AS(parse_graph_text(""), ParseError);
    CHECK_THROWS_AS(parse_graph_text("x y\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("2 1 9\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("2 1\n0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("2 1\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("2 1\n0 1 5\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("2 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("3 2\n0 1\n1 0\n"), ParseError);  // duplicate edge
    CHECK_THROWS_AS(parse_digraph_text("3 2\n0 1\n0 1\n"), ParseError);

    try {
        parse_graph_text("3 2\n0 1\n1 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("edge list writing round-trips graphs and digraphs") {
    Graph g = cycle(5);
    Graph g2 = parse_graph_text(to_text(g));
    CHECK(g2.vertex_count() == g.vertex_count());
    CHECK(g2.edges() == g.edges());
    CHECK(to_text(g) == "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");

    Digraph d = orient(cycle(4), {true, false, true, false});
    Digraph d2 = parse_digraph_text(to_text(d));
    CHECK(d2.arcs() == d.arcs());

    std::ostringstream out;
    write_digraph(out, d);
    CHECK(out.str() == to_text(d));
}
