#ifndef ZORC_VERIFY_HPP
#define ZORC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zorc/index.hpp"

namespace zorc {

struct Violation {
    std::string instance;
    std::string detail;
};

struct EqualityCase {
    std::string instance;
    std::string tag;
};

struct MaxTableRow {
    int n = 0;
    int r = 0;
    std::string a;
    std::string bound;
    std::string achieved;
    // Named extremal orientations confirmed as maximizers (the family may
    // collapse under isomorphism at tiny sizes, so this can exceed the
    // class count).
    std::uint64_t witness_count = 0;
    std::uint64_t witness_classes = 0;       // non-isomorphic maximizers
    std::uint64_t witness_labeled_count = 0; // raw maximizing direction vectors
    bool match = false;
};

struct VerificationReport {
    std::string claim;
    std::string grid;
    std::uint64_t instances = 0;
    std::vector<Violation> violations;  // capped; violation_count holds the total
    std::uint64_t violation_count = 0;
    std::vector<EqualityCase> equality_cases;  // capped; equality_count holds the total
    std::uint64_t equality_count = 0;
    std::vector<MaxTableRow> max_tables;
    // Named tallies (qualifying configurations per n, catalog class counts, ...).
    std::vector<std::pair<std::string, std::uint64_t>> counters;
    std::vector<std::string> notes;  // free-form findings (numeric minima, ...)
    double wall_ms = 0;
    bool passed() const { return violation_count == 0; }
};

struct VerifyOptions {
    int workers = 1;
    std::size_t equality_case_cap = 200;
    std::size_t violation_cap = 500;
};

// Lemma check: R(D) <= R(G)/2 for every orientation of every connected
// graph, equality exactly for sink-source orientations. Universe: all
// connected graphs up to min(n_max, 6) plus all cacti up to n_max <= 7.
VerificationReport verify_orientation_bound(int n_max, const std::vector<Exponent>& a_list,
                                            const VerifyOptions& options = {});

// Sink-source orientation counts, constructive (bipartition) versus
// filtering all 2^m orientations: 2 for connected bipartite (n >= 2),
// 0 for non-bipartite. Universe: all connected graphs up to n_max <= 7.
VerificationReport verify_sink_source_count(int n_max, const VerifyOptions& options = {});

// Path-shortening transformation: cactus G with n >= 6, r >= 2, min
// degree 2, edge u0u1 with d(u0) = d(u1) = 2, u2 the other neighbor of
// u0 with d = d(u2) >= 3 and u1u2 not an edge; G' = G - u0 + u1u2. For
// every orientation D and every compatible D':
//   R(D) - R(D') <= [2^{a+1} - 1 + d^{a+1} - (d-1)^{a+1}] / 2
// with equality exactly in one of four arc configurations. 6 <= n_max <= 8.
VerificationReport verify_transformation_A(int n_max, const std::vector<Exponent>& a_list,
                                           const VerifyOptions& options = {});

// Triangle-removal transformation: same setup but u1u2 an edge (triangle
// hanging at u2); G' = G - u0 - u1 and D' the restriction of D. For every
// orientation D:
//   R(D) - R(D') <= [2^{a+1} + 2 + d^{a+1} - (d-2)^{a+1}] / 2
// with equality iff u2 is fully in or fully out in D. 6 <= n_max <= 8.
VerificationReport verify_transformation_B(int n_max, const std::vector<Exponent>& a_list,
                                           const VerifyOptions& options = {});

// Pendant deletion: pendant u at v, G' = G - u, D' the restriction:
//   R(D) - R(D') <= [1 + d(v)^{a+1} - (d(v)-1)^{a+1}] / 2
// with equality iff max(d+_D(v), d-_D(v)) = d(v). n_max <= 7.
VerificationReport verify_pendant_deletion(int n_max, const std::vector<Exponent>& a_list,
                                           const VerifyOptions& options = {});

// Base catalogs: tree maxima (undirected and oriented, n <= 9), the full
// orientation catalogs of the named graphs G1 and G2, and the oriented
// unicyclic maximum with witness sets (n <= 8).
VerificationReport verify_base_catalogs(const std::vector<Exponent>& a_list,
                                        const VerifyOptions& options = {});

// Main bound over every cactus in the (n, r) grid: every orientation obeys
// theorem_bound, the maximum attains it, and the maximizer set matches
// extremal_set up to isomorphism. n_max <= 8, r_max <= 3.
VerificationReport verify_theorem(int n_max, int r_max, const std::vector<Exponent>& a_list,
                                  const VerifyOptions& options = {});

// Positivity of the two derivative expressions behind the bound's
// monotonicity, on a uniform grid plus monotone-segment interval lower
// bounds. grid_points >= 1000.
VerificationReport verify_appendix_positivity(int grid_points, const VerifyOptions& options = {});

}  // namespace zorc

#endif
