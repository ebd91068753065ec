#include "zorc/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "zorc/parallel.hpp"

namespace zorc {

namespace {

void check_simple_connected(const Graph& g) {
    Validation v = validate(g);
    if (!v.ok()) {
        throw std::invalid_argument("orientation search requires a simple connected graph: " +
                                    (v.problems.empty() ? std::string("invalid input") : v.problems.front()));
    }
}

std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

// Collects maximizing direction vectors; exact and floating modes share
// the same structure with mode-specific comparisons.
struct Collector {
    bool exact;
    BigInt best_doubled = -1;
    double best_value = 0;
    bool has_value = false;
    std::vector<std::uint64_t> masks;
    std::vector<double> values;  // floating mode only

    void seed(const IndexValue& v) {
        if (exact) {
            if (v.doubled() > best_doubled) best_doubled = v.doubled();
        } else if (!has_value || v.approx() > best_value) {
            best_value = v.approx();
            has_value = true;
        }
    }

    void offer_exact(const BigInt& doubled, std::uint64_t mask) {
        if (doubled > best_doubled) {
            best_doubled = doubled;
            masks.clear();
            masks.push_back(mask);
        } else if (doubled == best_doubled) {
            masks.push_back(mask);
        }
    }

    void offer_float(double value, std::uint64_t mask) {
        if (!has_value || value > best_value + kFloatTolerance) {
            best_value = has_value ? std::max(best_value, value) : value;
            has_value = true;
            masks.clear();
            values.clear();
            masks.push_back(mask);
            values.push_back(value);
            return;
        }
        if (value >= best_value - kFloatTolerance) {
            masks.push_back(mask);
            values.push_back(value);
            best_value = std::max(best_value, value);
        }
    }

    void merge(const Collector& other) {
        if (exact) {
            if (other.best_doubled > best_doubled) {
                best_doubled = other.best_doubled;
                masks = other.masks;
            } else if (other.best_doubled == best_doubled) {
                masks.insert(masks.end(), other.masks.begin(), other.masks.end());
            }
        } else {
            if (!other.has_value) return;
            if (!has_value) {
                *this = other;
                return;
            }
            best_value = std::max(best_value, other.best_value);
            has_value = true;
            masks.insert(masks.end(), other.masks.begin(), other.masks.end());
            values.insert(values.end(), other.values.begin(), other.values.end());
        }
    }

    // Drops floating entries that fell out of the final tolerance band.
    void finalize() {
        if (exact) return;
        std::vector<std::uint64_t> kept;
        for (std::size_t i = 0; i < masks.size(); ++i) {
            if (values[i] >= best_value - kFloatTolerance) kept.push_back(masks[i]);
        }
        masks = std::move(kept);
    }

    IndexValue value() const {
        return exact ? IndexValue::exact_doubled(best_doubled) : IndexValue::floating(best_value);
    }
};

ExtremalResult finish(const Graph& g, Collector& collector, std::uint64_t searched, std::uint64_t pruned) {
    collector.finalize();
    std::sort(collector.masks.begin(), collector.masks.end());
    ExtremalResult result;
    result.max_value = collector.value();
    result.searched = searched;
    result.pruned = pruned;
    result.labeled_max_count = collector.masks.size();
    std::map<CanonicalLabel, Digraph> reps;
    for (std::uint64_t mask : collector.masks) {
        Digraph d = orient(g, direction_bits(g, mask));
        CanonicalLabel label = canonical_label(d);
        reps.emplace(std::move(label), std::move(d));
    }
    for (auto& [label, d] : reps) result.witnesses.push_back({label, d});
    return result;
}

}  // namespace

std::vector<bool> direction_bits(const Graph& g, std::uint64_t mask) {
    std::vector<bool> bits(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) bits[i] = (mask >> i) & 1;
    return bits;
}

void for_each_orientation(const Graph& g, bool halve_reversal,
                          const std::function<void(const Digraph&, std::uint64_t)>& fn) {
    check_simple_connected(g);
    const int m = g.edge_count();
    if (m > kEnumerateMaxEdges) {
        throw std::invalid_argument("enumeration supports at most " +
                                    std::to_string(kEnumerateMaxEdges) + " edges, got " +
                                    std::to_string(m));
    }
    const int free_bits = halve_reversal && m > 0 ? m - 1 : m;
    const std::uint64_t count = std::uint64_t{1} << free_bits;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        const std::uint64_t full = halve_reversal && m > 0 ? mask << 1 : mask;
        fn(orient(g, direction_bits(g, full)), full);
    }
}

std::vector<Digraph> enumerate_orientations(const Graph& g, bool halve_reversal) {
    std::vector<Digraph> result;
    for_each_orientation(g, halve_reversal,
                         [&](const Digraph& d, std::uint64_t) { result.push_back(d); });
    return result;
}

ExtremalResult max_orientation_exhaustive(const Graph& g, const Exponent& a, int workers,
                                          bool halve_reversal) {
    check_simple_connected(g);
    const int m = g.edge_count();
    if (m > kExhaustiveMaxEdges) {
        throw std::invalid_argument("exhaustive search supports at most " +
                                    std::to_string(kExhaustiveMaxEdges) + " edges, got " +
                                    std::to_string(m));
    }
    const DegreeEvaluator eval(a, g.max_degree());
    const int shift = halve_reversal && m > 0 ? 1 : 0;
    const std::uint64_t total = std::uint64_t{1} << (m - shift);
    const bool exact = a.is_exact();

    int slices = 1;
    if (workers > 1 && m >= 10) {
        slices = std::min<int>(workers * 4, 64);
    }
    const std::uint64_t chunk = (total + slices - 1) / slices;
    std::vector<Collector> collectors(slices, Collector{exact});

    parallel_for(slices, workers, [&](std::size_t s) {
        const std::uint64_t lo = s * chunk;
        const std::uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) return;
        Collector& collector = collectors[s];
        std::vector<int> out_deg(g.vertex_count(), 0), in_deg(g.vertex_count(), 0);
        std::uint64_t current = gray(lo) << shift;
        for (int i = 0; i < m; ++i) {
            const auto& [u, v] = g.edges()[i];
            if ((current >> i) & 1) {
                ++out_deg[v];
                ++in_deg[u];
            } else {
                ++out_deg[u];
                ++in_deg[v];
            }
        }
        BigInt doubled;
        double value = 0;
        if (exact) doubled = eval.doubled_from_degrees(out_deg, in_deg);
        else value = eval.value_from_degrees(out_deg, in_deg);

        for (std::uint64_t i = lo;; ++i) {
            if (exact) collector.offer_exact(doubled, current);
            else collector.offer_float(value, current);
            if (i + 1 >= hi) break;
            const int e = std::countr_zero(i + 1) + shift;
            const auto& [u, v] = g.edges()[e];
            // flipping edge e swaps its arc direction; update the four
            // affected degree contributions
            int from = u, to = v;
            if ((current >> e) & 1) std::swap(from, to);
            if (exact) {
                doubled -= eval.pow_a1(out_deg[from]) + eval.pow_a1(in_deg[to]);
                doubled -= eval.pow_a1(in_deg[from]) + eval.pow_a1(out_deg[to]);
            } else {
                value -= (eval.fpow_a1(out_deg[from]) + eval.fpow_a1(in_deg[to]) +
                          eval.fpow_a1(in_deg[from]) + eval.fpow_a1(out_deg[to])) /
                         2.0;
            }
            --out_deg[from];
            ++in_deg[from];
            --in_deg[to];
            ++out_deg[to];
            if (exact) {
                doubled += eval.pow_a1(out_deg[from]) + eval.pow_a1(in_deg[to]);
                doubled += eval.pow_a1(in_deg[from]) + eval.pow_a1(out_deg[to]);
            } else {
                value += (eval.fpow_a1(out_deg[from]) + eval.fpow_a1(in_deg[to]) +
                          eval.fpow_a1(in_deg[from]) + eval.fpow_a1(out_deg[to])) /
                         2.0;
            }
            current ^= std::uint64_t{1} << e;
        }
    });

    Collector merged{exact};
    for (const Collector& c : collectors) merged.merge(c);
    return finish(g, merged, total, 0);
}

namespace {

struct BnbState {
    const Graph& g;
    const DegreeEvaluator& eval;
    bool exact;
    std::vector<int> order;         // edge indices in decision order
    std::vector<int> dir;           // -1 undecided, else direction bit
    std::vector<int> out_deg, in_deg, undecided;
    Collector collector;
    std::uint64_t searched = 0, pruned = 0;

    BnbState(const Graph& graph, const DegreeEvaluator& evaluator, bool is_exact)
        : g(graph),
          eval(evaluator),
          exact(is_exact),
          dir(graph.edge_count(), -1),
          out_deg(graph.vertex_count(), 0),
          in_deg(graph.vertex_count(), 0),
          undecided(graph.vertex_count(), 0),
          collector{is_exact} {}

    BigInt bound_exact() const {
        BigInt bound = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& [u, v] = g.edges()[e];
            const int ub_out_u = out_deg[u] + undecided[u];
            const int ub_in_u = in_deg[u] + undecided[u];
            const int ub_out_v = out_deg[v] + undecided[v];
            const int ub_in_v = in_deg[v] + undecided[v];
            if (dir[e] == 0) bound += eval.pow_a(ub_out_u) + eval.pow_a(ub_in_v);
            else if (dir[e] == 1) bound += eval.pow_a(ub_out_v) + eval.pow_a(ub_in_u);
            else bound += std::max(eval.pow_a(ub_out_u) + eval.pow_a(ub_in_v),
                                   eval.pow_a(ub_out_v) + eval.pow_a(ub_in_u));
        }
        return bound;
    }

    double bound_float() const {
        double bound = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& [u, v] = g.edges()[e];
            const int ub_out_u = out_deg[u] + undecided[u];
            const int ub_in_u = in_deg[u] + undecided[u];
            const int ub_out_v = out_deg[v] + undecided[v];
            const int ub_in_v = in_deg[v] + undecided[v];
            if (dir[e] == 0) bound += eval.fpow_a(ub_out_u) + eval.fpow_a(ub_in_v);
            else if (dir[e] == 1) bound += eval.fpow_a(ub_out_v) + eval.fpow_a(ub_in_u);
            else bound += std::max(eval.fpow_a(ub_out_u) + eval.fpow_a(ub_in_v),
                                   eval.fpow_a(ub_out_v) + eval.fpow_a(ub_in_u));
        }
        return bound / 2.0;
    }

    std::uint64_t mask() const {
        std::uint64_t m = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (dir[e] == 1) m |= std::uint64_t{1} << e;
        }
        return m;
    }

    void apply(int e, int bit) {
        const auto& [u, v] = g.edges()[e];
        dir[e] = bit;
        --undecided[u];
        --undecided[v];
        if (bit == 0) {
            ++out_deg[u];
            ++in_deg[v];
        } else {
            ++out_deg[v];
            ++in_deg[u];
        }
    }

    void undo(int e, int bit) {
        const auto& [u, v] = g.edges()[e];
        dir[e] = -1;
        ++undecided[u];
        ++undecided[v];
        if (bit == 0) {
            --out_deg[u];
            --in_deg[v];
        } else {
            --out_deg[v];
            --in_deg[u];
        }
    }

    void run(std::size_t depth) {
        if (depth == order.size()) {
            ++searched;
            if (exact) collector.offer_exact(eval.doubled_from_degrees(out_deg, in_deg), mask());
            else collector.offer_float(eval.value_from_degrees(out_deg, in_deg), mask());
            return;
        }
        if (exact) {
            if (collector.best_doubled >= 0 && bound_exact() < collector.best_doubled) {
                pruned += std::uint64_t{1} << (order.size() - depth);
                return;
            }
        } else if (collector.has_value && bound_float() < collector.best_value - kFloatTolerance) {
            pruned += std::uint64_t{1} << (order.size() - depth);
            return;
        }
        const int e = order[depth];
        for (int bit = 0; bit < 2; ++bit) {
            apply(e, bit);
            run(depth + 1);
            undo(e, bit);
        }
    }
};

}  // namespace

ExtremalResult max_orientation_bnb(const Graph& g, const Exponent& a) {
    check_simple_connected(g);
    const int m = g.edge_count();
    if (m > kEnumerateMaxEdges) {
        throw std::invalid_argument("branch and bound supports at most " +
                                    std::to_string(kEnumerateMaxEdges) + " edges, got " +
                                    std::to_string(m));
    }
    const DegreeEvaluator eval(a, g.max_degree());
    BnbState state(g, eval, a.is_exact());
    state.order.resize(m);
    for (int e = 0; e < m; ++e) state.order[e] = e;
    std::stable_sort(state.order.begin(), state.order.end(), [&](int x, int y) {
        const auto& [xu, xv] = g.edges()[x];
        const auto& [yu, yv] = g.edges()[y];
        const int dx = g.degree(xu) + g.degree(xv);
        const int dy = g.degree(yu) + g.degree(yv);
        if (dx != dy) return dx > dy;
        return g.edges()[x] < g.edges()[y];
    });
    for (int v = 0; v < g.vertex_count(); ++v) state.undecided[v] = g.degree(v);

    std::vector<Digraph> seeds = sink_source_orientations(g);
    if (seeds.empty()) {
        std::vector<bool> forward(m, false), backward(m, true);
        seeds.push_back(orient(g, forward));
        seeds.push_back(orient(g, backward));
    }
    for (const Digraph& d : seeds) state.collector.seed(index_digraph(d, a));

    state.run(0);
    return finish(g, state.collector, state.searched, state.pruned);
}

std::vector<Digraph> sink_source_orientations(const Graph& g) {
    check_simple_connected(g);
    auto sides = bipartition(g);
    if (!sides) return {};
    std::vector<char> in_first(g.vertex_count(), 0);
    for (int v : sides->first) in_first[v] = 1;
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        if (in_first[u]) arcs.emplace_back(u, v);
        else arcs.emplace_back(v, u);
    }
    Digraph forward(g.vertex_count(), arcs);
    Digraph backward = reverse(forward);
    return {forward, backward};
}

}  // namespace zorc
