#ifndef ZORC_SEARCH_HPP
#define ZORC_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "zorc/canonical.hpp"
#include "zorc/graph.hpp"
#include "zorc/index.hpp"

namespace zorc {

inline constexpr int kEnumerateMaxEdges = 30;
inline constexpr int kExhaustiveMaxEdges = 24;

struct Witness {
    CanonicalLabel label;
    Digraph digraph;
};

struct ExtremalResult {
    IndexValue max_value = IndexValue::floating(0.0);
    std::vector<Witness> witnesses;  // pairwise non-isomorphic, sorted by label
    std::uint64_t searched = 0;
    std::uint64_t pruned = 0;
    std::uint64_t labeled_max_count = 0;  // raw count of maximizing direction vectors
};

// Direction vector of orientation `mask`: bit i gives edge i's direction
// (0 = low to high endpoint).
std::vector<bool> direction_bits(const Graph& g, std::uint64_t mask);

// Calls fn for every orientation, mask order 0..2^m-1. With halve_reversal
// the first edge's direction is fixed, yielding one of each mutually
// reverse pair.
void for_each_orientation(const Graph& g, bool halve_reversal,
                          const std::function<void(const Digraph&, std::uint64_t)>& fn);

std::vector<Digraph> enumerate_orientations(const Graph& g, bool halve_reversal = false);

// Maximum of R over all 2^m orientations by full enumeration, with
// witnesses deduplicated by canonical label. With halve_reversal only
// 2^{m-1} orientations are examined (reversal preserves the index), so
// witnesses then cover one of each mutually reverse pair.
ExtremalResult max_orientation_exhaustive(const Graph& g, const Exponent& a, int workers = 1,
                                          bool halve_reversal = false);

// Same result via branch and bound: edges decided in descending
// degree-sum order, admissible bound from optimistic degree completions,
// incumbent seeded with the sink-source pair (bipartite) or the
// all-toward-higher-id orientation and its reverse.
ExtremalResult max_orientation_bnb(const Graph& g, const Exponent& a);

// The two sink-source orientations for connected bipartite g, else empty.
std::vector<Digraph> sink_source_orientations(const Graph& g);

}  // namespace zorc

#endif
