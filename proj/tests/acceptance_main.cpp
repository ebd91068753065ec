// Acceptance battery: one line per criterion, nonzero exit when any fails.
// Each criterion re-derives its verdict from the library at run time; no
// result is hard-coded beyond the published closed forms being tested.

#include <chrono>
#include <cstdio>
#include <exception>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "zorc/factory.hpp"
#include "zorc/graph.hpp"
#include "zorc/index.hpp"
#include "zorc/search.hpp"
#include "zorc/verify.hpp"

using namespace zorc;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

const std::vector<Exponent> kA123 = {Exponent::exact(1), Exponent::exact(2), Exponent::exact(3)};
const std::vector<Exponent> kA12 = {Exponent::exact(1), Exponent::exact(2)};

VerifyOptions options() {
    VerifyOptions opt;
    opt.workers = 8;
    return opt;
}

const MaxTableRow* find_row(const VerificationReport& rep, int n, int r, const std::string& a) {
    for (const MaxTableRow& m : rep.max_tables)
        if (m.n == n && m.r == r && m.a == a) return &m;
    return nullptr;
}

std::string halved_set(const std::set<BigInt>& doubled) {
    std::string out = "{";
    bool first = true;
    for (const BigInt& v : doubled) {
        if (!first) out += ",";
        out += IndexValue::exact_doubled(v).to_string();
        first = false;
    }
    return out + "}";
}

// 1. Closed-form maximum and witness sets over the full cactus grid.
Verdict criterion_theorem() {
    VerificationReport rep = verify_theorem(8, 3, kA123, options());
    std::size_t rows = 0, matched = 0;
    for (const MaxTableRow& m : rep.max_tables) {
        if (m.n < 3) continue;
        ++rows;
        if (m.match) ++matched;
    }
    const MaxTableRow* w1 = find_row(rep, 4, 1, "1");
    const MaxTableRow* w2 = find_row(rep, 4, 1, "2");
    Verdict v;
    v.pass = rep.passed() && rows == matched && w1 && w1->witness_count == 4 && w2 &&
             w2->witness_count == 2;
    std::ostringstream d;
    d << "closed-form maximum over all cacti, n in [3,8], r <= 3, a in {1,2,3}: " << matched << "/"
      << rows << " grid rows match with exact witness sets; " << (w1 ? w1->witness_count : 0)
      << " witnesses at (4,1,1) and " << (w2 ? w2->witness_count : 0) << " at (4,1,2)";
    v.detail = d.str();
    return v;
}

// 2. Orientation bound with exact equality characterization.
Verdict criterion_bound() {
    VerificationReport rep = verify_orientation_bound(6, kA123, options());
    Verdict v;
    v.pass = rep.passed();
    std::ostringstream d;
    d << "2R(D) <= R(G) over every orientation of every connected graph, n <= 6, a in {1,2,3}: "
      << rep.violation_count << " violations in " << rep.instances
      << " checks; equality set == sink-source set both ways";
    v.detail = d.str();
    return v;
}

// 3. Sink-source orientation counts.
Verdict criterion_sink_source() {
    VerificationReport rep = verify_sink_source_count(7, options());
    Verdict v;
    v.pass = rep.passed();
    std::ostringstream d;
    d << "bipartite connected graphs have exactly 2 sink-source orientations, others 0, n <= 7: "
      << rep.violation_count << " violations over " << rep.instances << " graphs";
    v.detail = d.str();
    return v;
}

// 4. Published value catalogs of the two base graphs.
Verdict criterion_catalogs_base() {
    const Exponent a1 = Exponent::exact(1);

    Graph g1 = fixtures().at("G1");
    std::set<BigInt> v1;
    for (const Digraph& d : enumerate_orientations(g1))
        v1.insert(index_digraph(d, a1).doubled());
    const std::set<BigInt> want1 = {BigInt(12), BigInt(14), BigInt(16)};  // halved: {6,7,8}
    ExtremalResult r1 = max_orientation_exhaustive(g1, a1);
    const bool clause1 =
        v1 == want1 && r1.max_value.doubled() == 16 && r1.witnesses.size() == 2;

    Graph g2 = fixtures().at("G2");
    std::set<BigInt> v2;
    for (const Digraph& d : enumerate_orientations(g2))
        v2.insert(index_digraph(d, a1).doubled());
    ExtremalResult r2 = max_orientation_exhaustive(g2, a1);
    const bool clause2 = r2.max_value.doubled() == 28 && r2.witnesses.size() == 2 &&
                         v2.count(BigInt(16)) && v2.count(BigInt(20)) && v2.count(BigInt(24));

    Verdict v;
    v.pass = clause1 && clause2;
    std::ostringstream d;
    d << "4-vertex base at a=1: expected value set {6,7,8}, computed " << halved_set(v1)
      << " with maximum " << r1.max_value.to_string() << " and " << r1.witnesses.size()
      << " maximizer classes";
    if (!clause1 && v1.size() == 4 && v1.count(BigInt(10)))
        d << " (the directed-triangle-with-pendant class, value 5, is absent from the expected "
             "three-value catalog)";
    d << "; 5-vertex base at a=1: maximum " << r2.max_value.to_string() << " with "
      << r2.witnesses.size() << " maximizer classes, values 8, 10, 12 "
      << (clause2 ? "realized" : "NOT all realized");
    v.detail = d.str();
    return v;
}

// 5. The two local move bounds with exact equality characterizations.
Verdict criterion_transformations() {
    VerificationReport a = verify_transformation_A(8, kA12, options());
    VerificationReport b = verify_transformation_B(8, kA12, options());
    Verdict v;
    v.pass = a.passed() && b.passed();
    std::ostringstream d;
    d << "local move bounds on cacti, n in [6,8], a in {1,2}: pendant-plus-neighbor move "
      << a.violation_count << " violations in " << a.instances << " checks ("
      << a.equality_count << " equality cases, all in the four arc patterns); "
      << "triangle-contraction move " << b.violation_count << " violations in " << b.instances
      << " checks (" << b.equality_count << " equality cases, all degree-saturated)";
    v.detail = d.str();
    return v;
}

// 6. Pendant-deletion bound with exact equality characterization.
Verdict criterion_pendant() {
    VerificationReport rep = verify_pendant_deletion(6, kA123, options());
    Verdict v;
    v.pass = rep.passed();
    std::ostringstream d;
    d << "pendant-deletion bound over all connected graphs, n <= 6, a in {1,2,3}: "
      << rep.violation_count << " violations in " << rep.instances
      << " checks; equality iff one direction at the neighbor is saturated";
    v.detail = d.str();
    return v;
}

// 7. Tree and unicyclic base cases (the tree/unicyclic part of the catalog run).
Verdict criterion_tree_unicyclic() {
    VerificationReport rep = verify_base_catalogs(kA123, options());
    std::size_t rows = 0, matched = 0;
    for (const MaxTableRow& m : rep.max_tables) {
        if (m.r > 1) continue;  // r = 0 trees, r = 1 unicyclic
        ++rows;
        if (m.match) ++matched;
    }
    std::size_t off_scope_violations = 0;
    for (const Violation& viol : rep.violations)
        if (viol.instance.rfind("trees/", 0) == 0 || viol.instance.rfind("unicyclic/", 0) == 0)
            ++off_scope_violations;
    Verdict v;
    v.pass = rows == matched && rows > 0 && off_scope_violations == 0;
    std::ostringstream d;
    d << "undirected tree maximum star-only (n <= 9) and oriented unicyclic maximum with witness "
         "sets (n <= 8), a in {1,2,3}: "
      << matched << "/" << rows << " rows match, " << off_scope_violations << " violations";
    v.detail = d.str();
    return v;
}

// 8. Positivity of the two derivative expressions.
Verdict criterion_appendix() {
    VerificationReport rep = verify_appendix_positivity(10000, options());
    Verdict v;
    v.pass = rep.passed() && rep.notes.size() == 2;
    std::ostringstream d;
    d << "strict positivity on 10000-point grids plus interval lower bounds";
    for (const std::string& note : rep.notes) d << "; " << note;
    v.detail = d.str();
    return v;
}

// 9. Branch-and-bound equivalence with active pruning.
Verdict criterion_bnb() {
    std::size_t checked = 0, mismatched = 0, pruned_large = 0;
    for (int n = 2; n <= 7; ++n) {
        for (int r = 0; r <= 2 && 2 * r <= n - 1; ++r) {
            for (const Graph& g : enumerate_cacti(n, r)) {
                for (int ai : {1, 2}) {
                    const Exponent a = Exponent::exact(ai);
                    ExtremalResult ex = max_orientation_exhaustive(g, a);
                    ExtremalResult bb = max_orientation_bnb(g, a);
                    ++checked;
                    std::set<std::string> exl, bbl;
                    for (const Witness& w : ex.witnesses) exl.insert(w.label.bytes);
                    for (const Witness& w : bb.witnesses) bbl.insert(w.label.bytes);
                    if (!IndexValue::equal(ex.max_value, bb.max_value) || exl != bbl ||
                        ex.labeled_max_count != bb.labeled_max_count)
                        ++mismatched;
                    if (g.edge_count() >= 8 && bb.pruned > 0) ++pruned_large;
                }
            }
        }
    }
    Verdict v;
    v.pass = mismatched == 0 && pruned_large > 0;
    std::ostringstream d;
    d << "branch-and-bound vs exhaustive on all cacti, n <= 7, r <= 2, a in {1,2}: " << mismatched
      << " mismatches in " << checked << " searches (values, witness labels, multiplicities); "
      << pruned_large << " instances with m >= 8 pruned at least one subtree";
    v.detail = d.str();
    return v;
}

// 10. Enumeration counts against the published sequences.
Verdict criterion_counts() {
    const std::vector<std::size_t> trees = {1, 1, 2, 3, 6, 11, 23};
    bool ok = true;
    std::ostringstream got;
    for (int n = 2; n <= 8; ++n) {
        std::size_t c = enumerate_cacti(n, 0).size();
        if (c != trees[n - 2]) ok = false;
        got << (n > 2 ? "," : "") << c;
    }
    std::size_t c41 = enumerate_cacti(4, 1).size();
    std::size_t c52 = enumerate_cacti(5, 2).size();
    ok = ok && c41 == 2 && c52 == 1;
    Verdict v;
    v.pass = ok;
    std::ostringstream d;
    d << "tree counts n=2..8 are " << got.str() << " (want 1,1,2,3,6,11,23); "
      << c41 << " cacti at (4,1) (want 2); " << c52 << " at (5,2) (want 1)";
    v.detail = d.str();
    return v;
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    struct Entry {
        const char* name;
        Verdict (*run)();
    };
    const Entry entries[] = {
        {"theorem reproduction", criterion_theorem},
        {"orientation bound", criterion_bound},
        {"sink-source counts", criterion_sink_source},
        {"base-graph catalogs", criterion_catalogs_base},
        {"transformation bounds", criterion_transformations},
        {"pendant deletion", criterion_pendant},
        {"tree/unicyclic bases", criterion_tree_unicyclic},
        {"appendix positivity", criterion_appendix},
        {"oracle equivalence", criterion_bnb},
        {"structural counts", criterion_counts},
    };

    int failures = 0;
    int number = 0;
    for (const Entry& entry : entries) {
        ++number;
        const auto start = Clock::now();
        Verdict v;
        try {
            v = entry.run();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
        if (!v.pass) ++failures;
        std::printf("criterion %2d [%s] %-22s (%lld ms) %s\n", number, v.pass ? "PASS" : "FAIL",
                    entry.name, static_cast<long long>(ms), v.detail.c_str());
    }
    std::printf("acceptance: %d/10 criteria passed\n", 10 - failures);
    return failures;
}
