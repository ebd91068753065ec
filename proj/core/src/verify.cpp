#include "zorc/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

#include "zorc/canonical.hpp"
#include "zorc/factory.hpp"
#include "zorc/graph.hpp"
#include "zorc/parallel.hpp"
#include "zorc/search.hpp"

namespace zorc {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string f12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string val_str(const BigInt& doubled) {
    return IndexValue::exact_doubled(doubled).to_string();
}

std::string edges_string(const Graph& g) {
    std::string s;
    for (const auto& [u, v] : g.edges()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(u);
        s += '-';
        s += std::to_string(v);
    }
    return s.empty() ? std::string("(no edges)") : s;
}

std::string arcs_string(const Digraph& d) {
    std::string s;
    for (const auto& [u, v] : d.arcs()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(u);
        s += '>';
        s += std::to_string(v);
    }
    return s.empty() ? std::string("(no arcs)") : s;
}

std::string mask_arcs(const Graph& g, std::uint64_t mask) {
    return arcs_string(orient(g, direction_bits(g, mask)));
}

std::string a_list_str(const std::vector<Exponent>& a_list) {
    std::string s = "{";
    for (std::size_t i = 0; i < a_list.size(); ++i) {
        if (i) s += ',';
        s += a_list[i].to_string();
    }
    return s + "}";
}

// Partial report produced by one parallel unit, folded in a fixed order.
struct Unit {
    std::uint64_t instances = 0;
    std::uint64_t violation_count = 0;
    std::uint64_t equality_count = 0;
    std::vector<Violation> violations;
    std::vector<EqualityCase> equality_cases;
    std::map<std::string, std::uint64_t> counters;

    void violation(std::size_t cap, std::string instance, std::string detail) {
        ++violation_count;
        if (violations.size() < cap) violations.push_back({std::move(instance), std::move(detail)});
    }
    void equality(std::size_t cap, std::string instance, std::string tag) {
        ++equality_count;
        if (equality_cases.size() < cap) equality_cases.push_back({std::move(instance), std::move(tag)});
    }
};

void fold(VerificationReport& rep, const VerifyOptions& opt,
          std::map<std::string, std::uint64_t>& counters, Unit&& u) {
    rep.instances += u.instances;
    rep.violation_count += u.violation_count;
    rep.equality_count += u.equality_count;
    for (auto& v : u.violations)
        if (rep.violations.size() < opt.violation_cap) rep.violations.push_back(std::move(v));
    for (auto& e : u.equality_cases)
        if (rep.equality_cases.size() < opt.equality_case_cap) rep.equality_cases.push_back(std::move(e));
    for (const auto& [k, c] : u.counters) counters[k] += c;
}

void finish(VerificationReport& rep, std::map<std::string, std::uint64_t>&& counters,
            Clock::time_point t0) {
    rep.counters.assign(counters.begin(), counters.end());
    rep.wall_ms = elapsed_ms(t0);
}

template <typename MakeUnit>
void run_units(VerificationReport& rep, const VerifyOptions& opt,
               std::map<std::string, std::uint64_t>& counters, std::size_t count, MakeUnit&& make) {
    std::vector<Unit> units(count);
    parallel_for(count, opt.workers, [&](std::size_t i) { units[i] = make(i); });
    for (auto& u : units) fold(rep, opt, counters, std::move(u));
}

// Visits every orientation in Gray order while maintaining degree arrays.
template <typename F>
void sweep_orientations(const Graph& g, F&& fn) {
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::vector<int> outd(g.vertex_count(), 0), ind(g.vertex_count(), 0);
    for (const auto& [u, v] : edges) {
        ++outd[u];
        ++ind[v];
    }
    std::uint64_t mask = 0;
    fn(std::uint64_t{0}, outd, ind);
    for (std::uint64_t i = 1, total = std::uint64_t{1} << m; i < total; ++i) {
        const int e = std::countr_zero(i);
        const auto& [u, v] = edges[e];
        if (mask >> e & 1) {
            --outd[v];
            --ind[u];
            ++outd[u];
            ++ind[v];
        } else {
            --outd[u];
            --ind[v];
            ++outd[v];
            ++ind[u];
        }
        mask ^= std::uint64_t{1} << e;
        fn(mask, outd, ind);
    }
}

bool degrees_sink_source(const std::vector<int>& outd, const std::vector<int>& ind) {
    for (std::size_t v = 0; v < outd.size(); ++v)
        if (outd[v] != 0 && ind[v] != 0) return false;
    return true;
}

int edge_index(const Graph& g, int u, int v) {
    const auto [lo, hi] = std::minmax(u, v);
    const auto& edges = g.edges();
    const auto it = std::find(edges.begin(), edges.end(), std::pair{lo, hi});
    return static_cast<int>(it - edges.begin());
}

// Source endpoint of edge e under the direction mask.
int arc_src(const Graph& g, std::uint64_t mask, int e) {
    const auto& [lo, hi] = g.edges()[e];
    return (mask >> e & 1) ? hi : lo;
}
int arc_dst(const Graph& g, std::uint64_t mask, int e) {
    const auto& [lo, hi] = g.edges()[e];
    return (mask >> e & 1) ? lo : hi;
}

std::vector<Graph> all_cacti(int n) {
    std::vector<Graph> out;
    for (int r = 0; 2 * r <= n - 1; ++r) {
        auto part = enumerate_cacti(n, r);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// Global exhaustive maximum over a graph family (exact mode), with the
// maximizer classes and their representative arc strings.
struct FamilyScan {
    BigInt global = -1;
    std::map<CanonicalLabel, std::string> witness_arcs;
    std::uint64_t labeled = 0;
    std::uint64_t searched = 0;
    std::vector<BigInt> per_graph;
};

FamilyScan scan_family(const std::vector<Graph>& graphs, const Exponent& a, int workers) {
    std::vector<ExtremalResult> results(graphs.size());
    parallel_for(graphs.size(), workers,
                 [&](std::size_t i) { results[i] = max_orientation_exhaustive(graphs[i], a); });
    FamilyScan s;
    s.per_graph.reserve(results.size());
    for (const auto& res : results) {
        s.searched += res.searched;
        const BigInt v = res.max_value.doubled();
        s.per_graph.push_back(v);
        if (v > s.global) {
            s.global = v;
            s.witness_arcs.clear();
            s.labeled = 0;
        }
        if (v == s.global) {
            for (const auto& w : res.witnesses) s.witness_arcs.emplace(w.label, arcs_string(w.digraph));
            s.labeled += res.labeled_max_count;
        }
    }
    return s;
}

// Checks bound attainment and witness-set agreement against the
// constructed extremal family; emits one table row.
MaxTableRow check_extremal(Unit& u, const VerifyOptions& opt, const std::string& prefix, int n,
                           int r, const Exponent& a, const std::vector<Graph>& graphs,
                           const BigInt& bound2, const ExtremalFamily& family, int workers) {
    const FamilyScan scan = scan_family(graphs, a, workers);
    u.instances += scan.searched;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi)
        if (scan.per_graph[gi] > bound2)
            u.violation(opt.violation_cap, prefix + "#" + std::to_string(gi),
                        "orientation maximum " + val_str(scan.per_graph[gi]) + " exceeds bound " +
                            val_str(bound2) + "; edges " + edges_string(graphs[gi]));
    if (scan.global != bound2)
        u.violation(opt.violation_cap, prefix,
                    "global maximum " + val_str(scan.global) + " != bound " + val_str(bound2));

    std::map<CanonicalLabel, std::string> fam;
    for (const auto& dg : family.digraphs) fam.emplace(canonical_label(dg), arcs_string(dg));
    std::uint64_t confirmed = 0;
    for (const auto& dg : family.digraphs)
        if (scan.witness_arcs.count(canonical_label(dg))) ++confirmed;
    bool set_equal = fam.size() == scan.witness_arcs.size();
    for (const auto& [label, arcs] : fam)
        if (!scan.witness_arcs.count(label)) {
            set_equal = false;
            u.violation(opt.violation_cap, prefix,
                        "constructed extremal orientation is not a maximizer; arcs " + arcs);
        }
    for (const auto& [label, arcs] : scan.witness_arcs) {
        if (!fam.count(label)) {
            set_equal = false;
            u.violation(opt.violation_cap, prefix,
                        "maximizer outside the constructed extremal family; arcs " + arcs);
        }
        u.equality(opt.equality_case_cap, prefix + "/max=" + val_str(scan.global) + "/arcs=" + arcs,
                   fam.count(label) ? "in G*(n,r)" : "outside G*(n,r)");
    }

    MaxTableRow row;
    row.n = n;
    row.r = r;
    row.a = a.to_string();
    row.bound = val_str(bound2);
    row.achieved = val_str(scan.global);
    row.witness_count = confirmed;
    row.witness_classes = scan.witness_arcs.size();
    row.witness_labeled_count = scan.labeled;
    row.match = scan.global == bound2 && set_equal;
    return row;
}

// Floating-mode variant: inequality and attainment within tolerance only.
MaxTableRow check_extremal_float(Unit& u, const VerifyOptions& opt, const std::string& prefix,
                                 int n, int r, const Exponent& a,
                                 const std::vector<Graph>& graphs, double bound_value,
                                 int workers) {
    std::vector<ExtremalResult> results(graphs.size());
    parallel_for(graphs.size(), workers,
                 [&](std::size_t i) { results[i] = max_orientation_exhaustive(graphs[i], a); });
    double global = 0;
    bool any = false;
    for (std::size_t gi = 0; gi < results.size(); ++gi) {
        u.instances += results[gi].searched;
        const double v = results[gi].max_value.approx();
        if (v > bound_value + kFloatTolerance)
            u.violation(opt.violation_cap, prefix + "#" + std::to_string(gi),
                        "orientation maximum " + f12(v) + " exceeds bound " + f12(bound_value) +
                            "; edges " + edges_string(graphs[gi]));
        if (!any || v > global) global = v;
        any = true;
    }
    MaxTableRow row;
    row.n = n;
    row.r = r;
    row.a = a.to_string();
    row.bound = f12(bound_value);
    row.achieved = f12(global);
    row.match = std::fabs(global - bound_value) <= kFloatTolerance;
    return row;
}

}  // namespace

VerificationReport verify_orientation_bound(int n_max, const std::vector<Exponent>& a_list,
                                            const VerifyOptions& options) {
    if (n_max < 1 || n_max > 7)
        throw std::invalid_argument("verify_orientation_bound: n_max must be in [1, 7]");
    if (a_list.empty()) throw std::invalid_argument("verify_orientation_bound: empty exponent list");
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.claim = "bound";
    rep.grid = "connected graphs n<=" + std::to_string(std::min(n_max, 6)) +
               (n_max >= 7 ? ", cacti n=7" : "") + "; a in " + a_list_str(a_list);
    std::map<std::string, std::uint64_t> counters;
    for (int n = 1; n <= n_max; ++n) {
        const auto graphs = n <= 6 ? enumerate_connected_graphs(n) : all_cacti(n);
        counters["graphs(n=" + std::to_string(n) + ")"] += graphs.size();
        run_units(rep, options, counters, graphs.size(), [&](std::size_t gi) {
            const Graph& g = graphs[gi];
            Unit u;
            const std::string prefix = "n=" + std::to_string(n) + "#" + std::to_string(gi);
            for (const auto& a : a_list) {
                const DegreeEvaluator ev(a, std::max(1, n - 1));
                const std::string aid = prefix + "/a=" + a.to_string();
                if (a.is_exact()) {
                    BigInt sum_g = 0;
                    for (int v = 0; v < n; ++v) sum_g += ev.pow_a1(g.degree(v));
                    sweep_orientations(g, [&](std::uint64_t mask, const std::vector<int>& outd,
                                              const std::vector<int>& ind) {
                        ++u.instances;
                        const BigInt d2 = ev.doubled_from_degrees(outd, ind);
                        const bool eq = d2 == sum_g;
                        const bool ss = degrees_sink_source(outd, ind);
                        if (d2 > sum_g)
                            u.violation(options.violation_cap, aid + "/mask=" + std::to_string(mask),
                                        "2R(D)=" + d2.str() + " exceeds R(G)=" + sum_g.str() +
                                            "; edges " + edges_string(g) + "; arcs " +
                                            mask_arcs(g, mask));
                        if (eq != ss)
                            u.violation(options.violation_cap, aid + "/mask=" + std::to_string(mask),
                                        std::string(eq ? "equality without a sink-source orientation"
                                                       : "sink-source orientation below R(G)/2") +
                                            "; edges " + edges_string(g) + "; arcs " +
                                            mask_arcs(g, mask));
                        if (eq)
                            u.equality(options.equality_case_cap,
                                       aid + "/mask=" + std::to_string(mask), "sink-source");
                    });
                } else {
                    double sum_g = 0;
                    for (int v = 0; v < n; ++v) sum_g += ev.fpow_a1(g.degree(v));
                    sweep_orientations(g, [&](std::uint64_t mask, const std::vector<int>& outd,
                                              const std::vector<int>& ind) {
                        ++u.instances;
                        const double val = ev.value_from_degrees(outd, ind);
                        if (val > sum_g / 2 + kFloatTolerance)
                            u.violation(options.violation_cap, aid + "/mask=" + std::to_string(mask),
                                        "R(D)=" + f12(val) + " exceeds R(G)/2=" + f12(sum_g / 2) +
                                            "; edges " + edges_string(g));
                    });
                }
            }
            return u;
        });
    }
    finish(rep, std::move(counters), t0);
    return rep;
}

VerificationReport verify_sink_source_count(int n_max, const VerifyOptions& options) {
    if (n_max < 1 || n_max > 7)
        throw std::invalid_argument("verify_sink_source_count: n_max must be in [1, 7]");
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.claim = "sink-source";
    rep.grid = "connected graphs n<=" + std::to_string(n_max);
    std::map<std::string, std::uint64_t> counters;
    for (int n = 1; n <= n_max; ++n) {
        const auto graphs = enumerate_connected_graphs(n);
        run_units(rep, options, counters, graphs.size(), [&](std::size_t gi) {
            const Graph& g = graphs[gi];
            Unit u;
            ++u.instances;
            const std::string prefix = "n=" + std::to_string(n) + "#" + std::to_string(gi);
            const bool bip = bipartition(g).has_value();
            u.counters[(bip ? "bipartite(n=" : "non-bipartite(n=") + std::to_string(n) + ")"] += 1;
            const auto ss = sink_source_orientations(g);
            std::uint64_t constructive = 0;
            if (!ss.empty())
                constructive = ss.size() == 2 && ss[0].arcs() == ss[1].arcs() ? 1 : ss.size();
            const auto& edges = g.edges();
            const int m = g.edge_count();
            std::uint64_t filtered = 0;
            for (std::uint64_t mask = 0, total = std::uint64_t{1} << m; mask < total; ++mask) {
                unsigned outf = 0, inf = 0;
                bool ok = true;
                for (int e = 0; e < m; ++e) {
                    const auto& [lo, hi] = edges[e];
                    if (mask >> e & 1) {
                        outf |= 1u << hi;
                        inf |= 1u << lo;
                    } else {
                        outf |= 1u << lo;
                        inf |= 1u << hi;
                    }
                    if (outf & inf) {
                        ok = false;
                        break;
                    }
                }
                if (ok) ++filtered;
            }
            if (constructive != filtered)
                u.violation(options.violation_cap, prefix,
                            "constructive count " + std::to_string(constructive) +
                                " != filtered count " + std::to_string(filtered) + "; edges " +
                                edges_string(g));
            if (bip && m >= 1 && filtered != 2)
                u.violation(options.violation_cap, prefix,
                            "bipartite graph has " + std::to_string(filtered) +
                                " sink-source orientations, expected 2; edges " + edges_string(g));
            if (!bip && filtered != 0)
                u.violation(options.violation_cap, prefix,
                            "non-bipartite graph has " + std::to_string(filtered) +
                                " sink-source orientations, expected 0; edges " + edges_string(g));
            return u;
        });
    }
    finish(rep, std::move(counters), t0);
    return rep;
}

VerificationReport verify_transformation_A(int n_max, const std::vector<Exponent>& a_list,
                                           const VerifyOptions& options) {
    if (n_max < 6 || n_max > 8)
        throw std::invalid_argument("verify_transformation_A: n_max must be in [6, 8]");
    if (a_list.empty()) throw std::invalid_argument("verify_transformation_A: empty exponent list");
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.claim = "transform-a";
    rep.grid = "cacti n in [6," + std::to_string(n_max) + "], r>=2, min degree 2; a in " +
               a_list_str(a_list);
    std::map<std::string, std::uint64_t> counters;
    for (int n = 6; n <= n_max; ++n) {
        for (int r = 2; 2 * r <= n - 1; ++r) {
            const auto graphs = enumerate_cacti(n, r);
            run_units(rep, options, counters, graphs.size(), [&](std::size_t gi) {
                const Graph& g = graphs[gi];
                Unit u;
                if (g.min_degree() < 2) return u;
                struct Triple {
                    int u0, u1, u2;
                };
                std::vector<Triple> triples;
                for (int u0 = 0; u0 < n; ++u0) {
                    if (g.degree(u0) != 2) continue;
                    const int x = g.neighbors(u0)[0];
                    const int y = g.neighbors(u0)[1];
                    for (const auto& [u1, u2] : {std::pair{x, y}, std::pair{y, x}})
                        if (g.degree(u1) == 2 && g.degree(u2) >= 3 && !g.has_edge(u1, u2))
                            triples.push_back({u0, u1, u2});
                }
                if (triples.empty()) return u;
                u.counters["qualifying-graphs(n=" + std::to_string(n) + ")"] += 1;
                u.counters["qualifying-triples(n=" + std::to_string(n) + ")"] += triples.size();
                const std::string prefix =
                    "n=" + std::to_string(n) + ",r=" + std::to_string(r) + "#" + std::to_string(gi);
                for (const auto& t : triples) {
                    const int e01 = edge_index(g, t.u0, t.u1);
                    const int e02 = edge_index(g, t.u0, t.u2);
                    const int d = g.degree(t.u2);
                    const std::string tid = prefix + "/t=(" + std::to_string(t.u0) + "," +
                                            std::to_string(t.u1) + "," + std::to_string(t.u2) + ")";
                    for (const auto& a : a_list) {
                        const DegreeEvaluator ev(a, n - 1);
                        const std::string aid = tid + "/a=" + a.to_string();
                        if (a.is_exact()) {
                            const BigInt rhs = ev.pow_a1(2) - 1 + ev.pow_a1(d) - ev.pow_a1(d - 1);
                            sweep_orientations(g, [&](std::uint64_t mask,
                                                      const std::vector<int>& outd,
                                                      const std::vector<int>& ind) {
                                const BigInt v_d = ev.doubled_from_degrees(outd, ind);
                                auto o = outd;
                                auto i = ind;
                                const int s01 = arc_src(g, mask, e01), d01 = arc_dst(g, mask, e01);
                                const int s02 = arc_src(g, mask, e02), d02 = arc_dst(g, mask, e02);
                                --o[s01];
                                --i[d01];
                                --o[s02];
                                --i[d02];
                                const bool u1_to_u0 = s01 == t.u1;
                                const bool u2_to_u0 = s02 == t.u2;
                                for (int dir = 0; dir < 2; ++dir) {
                                    const int s = dir == 0 ? t.u1 : t.u2;
                                    const int e = dir == 0 ? t.u2 : t.u1;
                                    ++o[s];
                                    ++i[e];
                                    const BigInt v_dp = ev.doubled_from_degrees(o, i);
                                    --o[s];
                                    --i[e];
                                    ++u.instances;
                                    const BigInt diff = v_d - v_dp;
                                    const bool cfg1 =
                                        u1_to_u0 && u2_to_u0 && dir == 0 && outd[t.u2] == d;
                                    const bool cfg2 =
                                        !u1_to_u0 && !u2_to_u0 && dir == 1 && ind[t.u2] == d;
                                    const bool cfg3 = !u1_to_u0 && u2_to_u0 && dir == 0 &&
                                                      ind[t.u1] == 2 && outd[t.u2] == d;
                                    const bool cfg4 = u1_to_u0 && !u2_to_u0 && dir == 1 &&
                                                      outd[t.u1] == 2 && ind[t.u2] == d;
                                    const bool cfg = cfg1 || cfg2 || cfg3 || cfg4;
                                    const bool eq = diff == rhs;
                                    const std::string inst = aid + "/mask=" + std::to_string(mask) +
                                                             (dir == 0 ? "/u1u2" : "/u2u1");
                                    if (diff > rhs)
                                        u.violation(options.violation_cap, inst,
                                                    "2[R(D)-R(D')]=" + diff.str() +
                                                        " exceeds 2*bound=" + rhs.str() +
                                                        "; edges " + edges_string(g) + "; arcs " +
                                                        mask_arcs(g, mask));
                                    if (eq != cfg)
                                        u.violation(options.violation_cap, inst,
                                                    std::string(
                                                        eq ? "equality outside the four configurations"
                                                           : "configuration without equality") +
                                                        "; edges " + edges_string(g) + "; arcs " +
                                                        mask_arcs(g, mask));
                                    if (eq)
                                        u.equality(options.equality_case_cap, inst,
                                                   cfg1   ? "A-config-1"
                                                   : cfg2 ? "A-config-2"
                                                   : cfg3 ? "A-config-3"
                                                   : cfg4 ? "A-config-4"
                                                          : "A-uncharacterized");
                                }
                            });
                        } else {
                            const double rhsv =
                                (ev.fpow_a1(2) - 1 + ev.fpow_a1(d) - ev.fpow_a1(d - 1)) / 2;
                            sweep_orientations(g, [&](std::uint64_t mask,
                                                      const std::vector<int>& outd,
                                                      const std::vector<int>& ind) {
                                const double v_d = ev.value_from_degrees(outd, ind);
                                auto o = outd;
                                auto i = ind;
                                const int s01 = arc_src(g, mask, e01), d01 = arc_dst(g, mask, e01);
                                const int s02 = arc_src(g, mask, e02), d02 = arc_dst(g, mask, e02);
                                --o[s01];
                                --i[d01];
                                --o[s02];
                                --i[d02];
                                for (int dir = 0; dir < 2; ++dir) {
                                    const int s = dir == 0 ? t.u1 : t.u2;
                                    const int e = dir == 0 ? t.u2 : t.u1;
                                    ++o[s];
                                    ++i[e];
                                    const double v_dp = ev.value_from_degrees(o, i);
                                    --o[s];
                                    --i[e];
                                    ++u.instances;
                                    if (v_d - v_dp > rhsv + kFloatTolerance)
                                        u.violation(options.violation_cap,
                                                    aid + "/mask=" + std::to_string(mask) +
                                                        (dir == 0 ? "/u1u2" : "/u2u1"),
                                                    "R(D)-R(D')=" + f12(v_d - v_dp) +
                                                        " exceeds bound " + f12(rhsv) + "; edges " +
                                                        edges_string(g));
                                }
                            });
                        }
                    }
                }
                return u;
            });
        }
    }
    finish(rep, std::move(counters), t0);
    return rep;
}

VerificationReport verify_transformation_B(int n_max, const std::vector<Exponent>& a_list,
                                           const VerifyOptions& options) {
    if (n_max < 6 || n_max > 8)
        throw std::invalid_argument("verify_transformation_B: n_max must be in [6, 8]");
    if (a_list.empty()) throw std::invalid_argument("verify_transformation_B: empty exponent list");
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.claim = "transform-b";
    rep.grid = "cacti n in [6," + std::to_string(n_max) + "], r>=2, min degree 2; a in " +
               a_list_str(a_list);
    std::map<std::string, std::uint64_t> counters;
    for (int n = 6; n <= n_max; ++n) {
        for (int r = 2; 2 * r <= n - 1; ++r) {
            const auto graphs = enumerate_cacti(n, r);
            run_units(rep, options, counters, graphs.size(), [&](std::size_t gi) {
                const Graph& g = graphs[gi];
                Unit u;
                if (g.min_degree() < 2) return u;
                struct Triple {
                    int u0, u1, u2;
                };
                std::vector<Triple> triples;
                for (const auto& [p, q] : g.edges()) {
                    if (g.degree(p) != 2 || g.degree(q) != 2) continue;
                    const int x = g.neighbors(p)[0] == q ? g.neighbors(p)[1] : g.neighbors(p)[0];
                    const int y = g.neighbors(q)[0] == p ? g.neighbors(q)[1] : g.neighbors(q)[0];
                    if (x == y && g.degree(x) >= 3) triples.push_back({p, q, x});
                }
                if (triples.empty()) return u;
                u.counters["qualifying-graphs(n=" + std::to_string(n) + ")"] += 1;
                u.counters["qualifying-triples(n=" + std::to_string(n) + ")"] += triples.size();
                const std::string prefix =
                    "n=" + std::to_string(n) + ",r=" + std::to_string(r) + "#" + std::to_string(gi);
                for (const auto& t : triples) {
                    const int e01 = edge_index(g, t.u0, t.u1);
                    const int e02 = edge_index(g, t.u0, t.u2);
                    const int e12 = edge_index(g, t.u1, t.u2);
                    const int d = g.degree(t.u2);
                    const std::string tid = prefix + "/t=(" + std::to_string(t.u0) + "," +
                                            std::to_string(t.u1) + "," + std::to_string(t.u2) + ")";
                    for (const auto& a : a_list) {
                        const DegreeEvaluator ev(a, n - 1);
                        const std::string aid = tid + "/a=" + a.to_string();
                        if (a.is_exact()) {
                            const BigInt rhs = ev.pow_a1(2) + 2 + ev.pow_a1(d) - ev.pow_a1(d - 2);
                            sweep_orientations(g, [&](std::uint64_t mask,
                                                      const std::vector<int>& outd,
                                                      const std::vector<int>& ind) {
                                ++u.instances;
                                const BigInt v_d = ev.doubled_from_degrees(outd, ind);
                                auto o = outd;
                                auto i = ind;
                                for (const int e : {e01, e02, e12}) {
                                    --o[arc_src(g, mask, e)];
                                    --i[arc_dst(g, mask, e)];
                                }
                                const BigInt v_dp = ev.doubled_from_degrees(o, i);
                                const BigInt diff = v_d - v_dp;
                                const bool eq = diff == rhs;
                                const bool out_sat = outd[t.u2] == d;
                                const bool in_sat = ind[t.u2] == d;
                                const std::string inst = aid + "/mask=" + std::to_string(mask);
                                if (diff > rhs)
                                    u.violation(options.violation_cap, inst,
                                                "2[R(D)-R(D')]=" + diff.str() +
                                                    " exceeds 2*bound=" + rhs.str() + "; edges " +
                                                    edges_string(g) + "; arcs " +
                                                    mask_arcs(g, mask));
                                if (eq != (out_sat || in_sat))
                                    u.violation(options.violation_cap, inst,
                                                std::string(eq ? "equality without u2 saturation"
                                                               : "u2 saturation without equality") +
                                                    "; edges " + edges_string(g) + "; arcs " +
                                                    mask_arcs(g, mask));
                                if (eq)
                                    u.equality(options.equality_case_cap, inst,
                                               in_sat ? "d-(u2)=d_G(u2)" : "d+(u2)=d_G(u2)");
                            });
                        } else {
                            const double rhsv =
                                (ev.fpow_a1(2) + 2 + ev.fpow_a1(d) - ev.fpow_a1(d - 2)) / 2;
                            sweep_orientations(g, [&](std::uint64_t mask,
                                                      const std::vector<int>& outd,
                                                      const std::vector<int>& ind) {
                                ++u.instances;
                                const double v_d = ev.value_from_degrees(outd, ind);
                                auto o = outd;
                                auto i = ind;
                                for (const int e : {e01, e02, e12}) {
                                    --o[arc_src(g, mask, e)];
                                    --i[arc_dst(g, mask, e)];
                                }
                                const double v_dp = ev.value_from_degrees(o, i);
                                if (v_d - v_dp > rhsv + kFloatTolerance)
                                    u.violation(options.violation_cap,
                                                aid + "/mask=" + std::to_string(mask),
                                                "R(D)-R(D')=" + f12(v_d - v_dp) + " exceeds bound " +
                                                    f12(rhsv) + "; edges " + edges_string(g));
                            });
                        }
                    }
                }
                return u;
            });
        }
    }
    finish(rep, std::move(counters), t0);
    return rep;
}

VerificationReport verify_pendant_deletion(int n_max, const std::vector<Exponent>& a_list,
                                           const VerifyOptions& options) {
    if (n_max < 2 || n_max > 7)
        throw std::invalid_argument("verify_pendant_deletion: n_max must be in [2, 7]");
    if (a_list.empty()) throw std::invalid_argument("verify_pendant_deletion: empty exponent list");
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.claim = "pendant";
    rep.grid = "connected graphs n<=" + std::to_string(n_max) + " with a pendant; a in " +
               a_list_str(a_list);
    std::map<std::string, std::uint64_t> counters;
    for (int n = 2; n <= n_max; ++n) {
        const auto graphs = enumerate_connected_graphs(n);
        run_units(rep, options, counters, graphs.size(), [&](std::size_t gi) {
            const Graph& g = graphs[gi];
            Unit u;
            std::vector<std::pair<int, int>> pendants;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) == 1) pendants.push_back({v, g.neighbors(v)[0]});
            if (pendants.empty()) return u;
            u.counters["pendant-choices(n=" + std::to_string(n) + ")"] += pendants.size();
            const std::string prefix = "n=" + std::to_string(n) + "#" + std::to_string(gi);
            for (const auto& [pu, pv] : pendants) {
                const int e_uv = edge_index(g, pu, pv);
                const int d = g.degree(pv);
                const std::string pid =
                    prefix + "/pendant=(" + std::to_string(pu) + "," + std::to_string(pv) + ")";
                for (const auto& a : a_list) {
                    const DegreeEvaluator ev(a, std::max(1, n - 1));
                    const std::string aid = pid + "/a=" + a.to_string();
                    if (a.is_exact()) {
                        const BigInt rhs = 1 + ev.pow_a1(d) - ev.pow_a1(d - 1);
                        sweep_orientations(g, [&](std::uint64_t mask, const std::vector<int>& outd,
                                                  const std::vector<int>& ind) {
                            ++u.instances;
                            const BigInt v_d = ev.doubled_from_degrees(outd, ind);
                            auto o = outd;
                            auto i = ind;
                            --o[arc_src(g, mask, e_uv)];
                            --i[arc_dst(g, mask, e_uv)];
                            const BigInt v_dp = ev.doubled_from_degrees(o, i);
                            const BigInt diff = v_d - v_dp;
                            const bool eq = diff == rhs;
                            const bool sat = std::max(outd[pv], ind[pv]) == d;
                            const std::string inst = aid + "/mask=" + std::to_string(mask);
                            if (diff > rhs)
                                u.violation(options.violation_cap, inst,
                                            "2[R(D)-R(D')]=" + diff.str() +
                                                " exceeds 2*bound=" + rhs.str() + "; edges " +
                                                edges_string(g) + "; arcs " + mask_arcs(g, mask));
                            if (eq != sat)
                                u.violation(options.violation_cap, inst,
                                            std::string(eq ? "equality without degree saturation"
                                                           : "degree saturation without equality") +
                                                "; edges " + edges_string(g) + "; arcs " +
                                                mask_arcs(g, mask));
                            if (eq)
                                u.equality(options.equality_case_cap, inst,
                                           "max(d+(v),d-(v))=d_G(v)");
                        });
                    } else {
                        const double rhsv = (1 + ev.fpow_a1(d) - ev.fpow_a1(d - 1)) / 2;
                        sweep_orientations(g, [&](std::uint64_t mask, const std::vector<int>& outd,
                                                  const std::vector<int>& ind) {
                            ++u.instances;
                            const double v_d = ev.value_from_degrees(outd, ind);
                            auto o = outd;
                            auto i = ind;
                            --o[arc_src(g, mask, e_uv)];
                            --i[arc_dst(g, mask, e_uv)];
                            const double v_dp = ev.value_from_degrees(o, i);
                            if (v_d - v_dp > rhsv + kFloatTolerance)
                                u.violation(options.violation_cap,
                                            aid + "/mask=" + std::to_string(mask),
                                            "R(D)-R(D')=" + f12(v_d - v_dp) + " exceeds bound " +
                                                f12(rhsv) + "; edges " + edges_string(g));
                        });
                    }
                }
            }
            return u;
        });
    }
    finish(rep, std::move(counters), t0);
    return rep;
}

VerificationReport verify_base_catalogs(const std::vector<Exponent>& a_list,
                                        const VerifyOptions& options) {
    if (a_list.empty()) throw std::invalid_argument("verify_base_catalogs: empty exponent list");
    for (const auto& a : a_list)
        if (a.is_exact() && (a.integer() < 1 || a.integer() > 3))
            throw std::invalid_argument("verify_base_catalogs: exact a must be in {1, 2, 3}");
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.claim = "catalogs";
    rep.grid = "trees n<=9; unicyclic n<=8; G1; G2; a in " + a_list_str(a_list);
    std::map<std::string, std::uint64_t> counters;

    // Trees: undirected maximum is the star, oriented maximum its two
    // sink-source orientations.
    for (int n = 2; n <= 9; ++n) {
        const auto trees = enumerate_cacti(n, 0);
        counters["trees(n=" + std::to_string(n) + ")"] += trees.size();
        const CanonicalLabel star_label = canonical_label(build_G0(n, 0));
        for (const auto& a : a_list) {
            Unit u;
            const std::string prefix = "trees/n=" + std::to_string(n) + "/a=" + a.to_string();
            if (a.is_exact()) {
                const DegreeEvaluator ev(a, n - 1);
                const BigInt expected = ev.pow_a1(n - 1) + (n - 1);
                BigInt best = -1;
                std::vector<std::size_t> argmax;
                for (std::size_t ti = 0; ti < trees.size(); ++ti) {
                    ++u.instances;
                    BigInt s = 0;
                    for (int v = 0; v < n; ++v) s += ev.pow_a1(trees[ti].degree(v));
                    if (s > best) {
                        best = s;
                        argmax.clear();
                    }
                    if (s == best) argmax.push_back(ti);
                }
                if (best != expected)
                    u.violation(options.violation_cap, prefix + "/undirected",
                                "tree maximum " + best.str() + " != " + expected.str());
                for (const std::size_t ti : argmax)
                    if (canonical_label(trees[ti]) != star_label)
                        u.violation(options.violation_cap, prefix + "/undirected",
                                    "non-star tree attains the maximum; edges " +
                                        edges_string(trees[ti]));
                if (argmax.size() != 1)
                    u.violation(options.violation_cap, prefix + "/undirected",
                                std::to_string(argmax.size()) + " maximizing trees, expected 1");
                rep.max_tables.push_back(check_extremal(u, options, prefix, n, 0, a, trees,
                                                        theorem_bound(n, 0, a).doubled(),
                                                        extremal_set(n, 0, a), options.workers));
            } else {
                rep.max_tables.push_back(check_extremal_float(
                    u, options, prefix, n, 0, a, trees,
                    theorem_bound(n, 0, a).approx(), options.workers));
            }
            fold(rep, options, counters, std::move(u));
        }
    }

    // G1: full orientation catalog of the triangle with a pendant edge.
    const Graph g1 = fixtures().at("G1");
    for (const auto& a : a_list) {
        Unit u;
        const std::string prefix = "G1/a=" + a.to_string();
        if (a.is_exact()) {
            const DegreeEvaluator ev(a, 3);
            const BigInt p2 = ev.pow_a1(2);  // 2^{a+1}
            const BigInt v_max = ev.pow_a1(3) + p2 + 3;
            const std::vector<BigInt> catalog = {v_max, 4 + 2 * p2, 2 + 3 * p2};
            std::map<BigInt, std::pair<std::uint64_t, std::uint64_t>> seen;  // value -> (count, mask)
            sweep_orientations(g1, [&](std::uint64_t mask, const std::vector<int>& outd,
                                       const std::vector<int>& ind) {
                ++u.instances;
                const BigInt d2 = ev.doubled_from_degrees(outd, ind);
                const auto it = seen.emplace(d2, std::pair<std::uint64_t, std::uint64_t>{0, mask}).first;
                ++it->second.first;
            });
            u.counters["G1-distinct-values(a=" + a.to_string() + ")"] = seen.size();
            for (const auto& [value, info] : seen)
                if (std::find(catalog.begin(), catalog.end(), value) == catalog.end())
                    u.violation(options.violation_cap, prefix,
                                "orientation value " + val_str(value) + " (x" +
                                    std::to_string(info.first) +
                                    ") outside the three-value catalog; arcs " +
                                    mask_arcs(g1, info.second));
            for (const auto& value : catalog)
                if (!seen.count(value))
                    u.violation(options.violation_cap, prefix,
                                "catalog value " + val_str(value) + " not realized");
            const auto res = max_orientation_exhaustive(g1, a);
            if (res.max_value.doubled() != v_max)
                u.violation(options.violation_cap, prefix,
                            "maximum " + res.max_value.to_string() + " != " + val_str(v_max));
            if (res.witnesses.size() != 2)
                u.violation(options.violation_cap, prefix,
                            std::to_string(res.witnesses.size()) +
                                " non-isomorphic maximizers, expected 2");
        } else {
            const auto res = max_orientation_exhaustive(g1, a);
            const double bound =
                (std::pow(3.0, a.value() + 1) + std::pow(2.0, a.value() + 1) + 3) / 2;
            if (res.max_value.approx() > bound + kFloatTolerance)
                u.violation(options.violation_cap, prefix,
                            "maximum " + f12(res.max_value.approx()) + " exceeds " + f12(bound));
        }
        fold(rep, options, counters, std::move(u));
    }

    // Unicyclic cacti: oriented maximum and witness sets.
    for (int n = 3; n <= 8; ++n) {
        const auto cacti = enumerate_cacti(n, 1);
        counters["unicyclic(n=" + std::to_string(n) + ")"] += cacti.size();
        for (const auto& a : a_list) {
            Unit u;
            const std::string prefix = "unicyclic/n=" + std::to_string(n) + "/a=" + a.to_string();
            if (a.is_exact())
                rep.max_tables.push_back(check_extremal(u, options, prefix, n, 1, a, cacti,
                                                        theorem_bound(n, 1, a).doubled(),
                                                        extremal_set(n, 1, a), options.workers));
            else
                rep.max_tables.push_back(check_extremal_float(
                    u, options, prefix, n, 1, a, cacti,
                    theorem_bound(n, 1, a).approx(), options.workers));
            fold(rep, options, counters, std::move(u));
        }
    }

    // G2: full orientation catalog of the two triangles sharing a hub.
    const Graph g2 = fixtures().at("G2");
    for (const auto& a : a_list) {
        Unit u;
        const std::string prefix = "G2/a=" + a.to_string();
        if (a.is_exact()) {
            const DegreeEvaluator ev(a, 4);
            const BigInt p2 = ev.pow_a1(2);
            const BigInt p3 = ev.pow_a1(3);
            const BigInt v_max = ev.pow_a1(4) + 2 * p2 + 4;
            const std::vector<BigInt> catalog = {8 + 2 * p2, 7 + p3 + p2, 4 + 4 * p2,
                                                 3 + 3 * p2 + p3, 6 * p2, v_max};
            std::map<BigInt, std::pair<std::uint64_t, std::uint64_t>> seen;
            sweep_orientations(g2, [&](std::uint64_t mask, const std::vector<int>& outd,
                                       const std::vector<int>& ind) {
                ++u.instances;
                const BigInt d2 = ev.doubled_from_degrees(outd, ind);
                const auto it = seen.emplace(d2, std::pair<std::uint64_t, std::uint64_t>{0, mask}).first;
                ++it->second.first;
            });
            u.counters["G2-distinct-values(a=" + a.to_string() + ")"] = seen.size();
            for (const auto& [value, info] : seen)
                if (std::find(catalog.begin(), catalog.end(), value) == catalog.end())
                    u.violation(options.violation_cap, prefix,
                                "orientation value " + val_str(value) + " (x" +
                                    std::to_string(info.first) +
                                    ") outside the six-formula catalog; arcs " +
                                    mask_arcs(g2, info.second));
            for (const auto& value : catalog)
                if (!seen.count(value))
                    u.violation(options.violation_cap, prefix,
                                "catalog value " + val_str(value) + " not realized");
            rep.max_tables.push_back(check_extremal(u, options, prefix, 5, 2, a, {g2},
                                                    theorem_bound(5, 2, a).doubled(),
                                                    extremal_set(5, 2, a), options.workers));
        } else {
            rep.max_tables.push_back(check_extremal_float(u, options, prefix, 5, 2, a, {g2},
                                                          theorem_bound(5, 2, a).approx(),
                                                          options.workers));
        }
        fold(rep, options, counters, std::move(u));
    }

    finish(rep, std::move(counters), t0);
    return rep;
}

VerificationReport verify_theorem(int n_max, int r_max, const std::vector<Exponent>& a_list,
                                  const VerifyOptions& options) {
    if (n_max < 2 || n_max > 8)
        throw std::invalid_argument("verify_theorem: n_max must be in [2, 8]");
    if (r_max < 0 || r_max > 3)
        throw std::invalid_argument("verify_theorem: r_max must be in [0, 3]");
    if (a_list.empty()) throw std::invalid_argument("verify_theorem: empty exponent list");
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.claim = "theorem";
    rep.grid = "cacti n in [2," + std::to_string(n_max) + "], r<=" + std::to_string(r_max) +
               "; a in " + a_list_str(a_list);
    std::map<std::string, std::uint64_t> counters;
    for (int n = 2; n <= n_max; ++n) {
        for (int r = 0; r <= r_max && 2 * r <= n - 1; ++r) {
            const auto cacti = enumerate_cacti(n, r);
            counters["cacti(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ")"] +=
                cacti.size();
            for (const auto& a : a_list) {
                Unit u;
                const std::string prefix =
                    "n=" + std::to_string(n) + ",r=" + std::to_string(r) + "/a=" + a.to_string();
                if (a.is_exact())
                    rep.max_tables.push_back(check_extremal(u, options, prefix, n, r, a, cacti,
                                                            theorem_bound(n, r, a).doubled(),
                                                            extremal_set(n, r, a),
                                                            options.workers));
                else
                    rep.max_tables.push_back(check_extremal_float(
                        u, options, prefix, n, r, a, cacti, theorem_bound(n, r, a).approx(),
                        options.workers));
                fold(rep, options, counters, std::move(u));
            }
        }
    }
    finish(rep, std::move(counters), t0);
    return rep;
}

VerificationReport verify_appendix_positivity(int grid_points, const VerifyOptions& options) {
    if (grid_points < 1000)
        throw std::invalid_argument("verify_appendix_positivity: grid_points must be >= 1000");
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.claim = "appendix";
    rep.grid = "E1 on [1,2], E2 on [1,3]; " + std::to_string(grid_points) + " grid points";
    std::map<std::string, std::uint64_t> counters;

    struct Term {
        double coef;
        double base;
    };
    struct Expr {
        std::string name;
        double lo, hi;
        std::vector<Term> terms;
    };
    const std::vector<Expr> exprs = {
        {"E1", 1.0, 2.0, {{std::log(3.0), 3.0}, {-3.0 * std::log(2.0), 2.0}}},
        {"E2",
         1.0,
         3.0,
         {{std::log(5.0), 5.0},
          {-2.0 * std::log(4.0), 4.0},
          {std::log(3.0), 3.0},
          {-std::log(2.0), 2.0}}}};

    const auto eval = [](const Expr& e, double x) {
        double v = 0;
        for (const auto& t : e.terms) v += t.coef * std::pow(t.base, x + 1);
        return v;
    };
    // On [s, t] every base^{x+1} is increasing, so positive terms take
    // their minimum at s and negative terms at t.
    const auto lower_bound_on = [](const Expr& e, double s, double t) {
        double v = 0;
        for (const auto& tm : e.terms) v += tm.coef * std::pow(tm.base, (tm.coef > 0 ? s : t) + 1);
        return v;
    };

    Unit u;
    for (const auto& e : exprs) {
        double min_val = 0, min_at = e.lo;
        bool first = true;
        std::vector<double> xs(grid_points);
        for (int i = 0; i < grid_points; ++i)
            xs[i] = e.lo + (e.hi - e.lo) * i / (grid_points - 1);
        for (const double x : xs) {
            ++u.instances;
            const double v = eval(e, x);
            if (v <= 0)
                u.violation(options.violation_cap, e.name + "/a=" + f12(x),
                            "expression value " + f12(v) + " is not positive");
            if (first || v < min_val) {
                min_val = v;
                min_at = x;
                first = false;
            }
        }
        double min_lb = 0;
        bool first_lb = true;
        for (int i = 0; i + 1 < grid_points; ++i) {
            ++u.instances;
            const double lb = lower_bound_on(e, xs[i], xs[i + 1]);
            if (lb <= 0)
                u.violation(options.violation_cap,
                            e.name + "/segment=[" + f12(xs[i]) + "," + f12(xs[i + 1]) + "]",
                            "interval lower bound " + f12(lb) +
                                " is not positive (refine the grid)");
            if (first_lb || lb < min_lb) {
                min_lb = lb;
                first_lb = false;
            }
        }
        rep.notes.push_back(e.name + ": grid minimum " + f12(min_val) + " at a=" + f12(min_at) +
                            "; certified interval lower bound " + f12(min_lb));
    }
    fold(rep, options, counters, std::move(u));
    finish(rep, std::move(counters), t0);
    return rep;
}

}  // namespace zorc
