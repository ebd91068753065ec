#ifndef ZORC_FACTORY_HPP
#define ZORC_FACTORY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zorc/graph.hpp"
#include "zorc/index.hpp"

namespace zorc {

inline constexpr int kCactusMaxVertices = 10;
inline constexpr int kUniverseMaxVertices = 7;

// Bundle cactus: hub 0 of degree n-1, r triangles through the hub
// (vertices 2i-1, 2i for i = 1..r), remaining vertices pendant on the hub.
// Requires n >= 2 and 0 <= r <= floor((n-1)/2).
Graph build_G0(int n, int r);

// Hub-source orientation of build_G0(n, r) (every hub edge outward,
// triangle outer edges low to high) and its arc reversal.
std::pair<Digraph, Digraph> build_extremal_orientations(int n, int r);

// The extremal family: the two bundle orientations, plus the two
// sink-source orientations of the 4-cycle exactly when a = 1 (exact) and
// (n, r) = (4, 1). Constructed members may coincide up to isomorphism at
// tiny sizes.
struct ExtremalFamily {
    int n = 0;
    int r = 0;
    std::vector<Graph> graphs;
    std::vector<Digraph> digraphs;
};

ExtremalFamily extremal_set(int n, int r, const Exponent& a);

// All connected cacti with n vertices and r cycles, one representative
// per isomorphism class, sorted by canonical label. Built by recursive
// attachment of a pendant edge or a cycle (length >= 3) at each vertex of
// each smaller cactus, deduplicating after every attachment step.
std::vector<Graph> enumerate_cacti(int n, int r);

// All connected simple graphs on n vertices up to isomorphism (vertex
// augmentation with per-level deduplication); n <= 7.
std::vector<Graph> enumerate_connected_graphs(int n);

// Named base graphs: "G1" = triangle with a pendant (n = 4),
// "G2" = two triangles sharing a hub (n = 5).
std::map<std::string, Graph> fixtures();

}  // namespace zorc

#endif
