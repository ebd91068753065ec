#ifndef ZORC_CANONICAL_HPP
#define ZORC_CANONICAL_HPP

#include <compare>
#include <string>

#include "zorc/graph.hpp"

namespace zorc {

// Opaque canonical form: equal bytes iff isomorphic. Computed by exact
// search over vertex placements compatible with the degree partition
// (degree for graphs, (out, in) pair for digraphs), taking the
// lexicographic minimum adjacency encoding. Hard cap n <= 12.
struct CanonicalLabel {
    std::string bytes;
    auto operator<=>(const CanonicalLabel&) const = default;
};

inline constexpr int kCanonicalMaxVertices = 12;

CanonicalLabel canonical_label(const Graph& g);
CanonicalLabel canonical_label(const Digraph& d);

}  // namespace zorc

#endif
