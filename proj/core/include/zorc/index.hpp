#ifndef ZORC_INDEX_HPP
#define ZORC_INDEX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zorc/graph.hpp"

namespace zorc {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr double kFloatTolerance = 1e-9;

// Per-arc exponent a >= 1. Exact mode requires an integer a and drives
// big-integer evaluation; floating mode evaluates in double.
class Exponent {
public:
    static Exponent exact(int a);
    static Exponent floating(double a);

    bool is_exact() const { return exact_; }
    int integer() const;
    double value() const { return value_; }
    std::string to_string() const;

private:
    Exponent(bool exact, int int_a, double value) : exact_(exact), int_a_(int_a), value_(value) {}
    bool exact_;
    int int_a_;
    double value_;
};

// Index value R. Exact mode stores the doubled value 2R as a big integer
// (all per-arc contributions are integers); floating mode stores R as a
// double compared with absolute tolerance 1e-9.
class IndexValue {
public:
    static IndexValue exact_doubled(BigInt doubled);
    static IndexValue floating(double value);

    bool is_exact() const { return exact_; }
    const BigInt& doubled() const;
    double approx() const;

    // "p/2" for odd doubled values, plain integer otherwise; floating
    // values use 12 significant digits.
    std::string to_string() const;

    static bool equal(const IndexValue& a, const IndexValue& b);
    static bool less(const IndexValue& a, const IndexValue& b);

private:
    IndexValue(bool exact, BigInt doubled, double value)
        : exact_(exact), doubled_(std::move(doubled)), value_(value) {}
    bool exact_;
    BigInt doubled_;
    double value_;
};

// Power tables x^a and x^(a+1) for x in [0, max_degree], shared by the
// index evaluators and the branch-and-bound bound.
class DegreeEvaluator {
public:
    DegreeEvaluator(const Exponent& a, int max_degree);

    const Exponent& exponent() const { return a_; }
    int max_degree() const { return max_degree_; }

    const BigInt& pow_a(int x) const { return pow_a_[x]; }
    const BigInt& pow_a1(int x) const { return pow_a1_[x]; }
    double fpow_a(int x) const { return fpow_a_[x]; }
    double fpow_a1(int x) const { return fpow_a1_[x]; }

    // 2R from degree sequences: sum over v of (d+)^{a+1} + (d-)^{a+1}.
    BigInt doubled_from_degrees(const std::vector<int>& out_deg, const std::vector<int>& in_deg) const;
    double value_from_degrees(const std::vector<int>& out_deg, const std::vector<int>& in_deg) const;

private:
    Exponent a_;
    int max_degree_;
    std::vector<BigInt> pow_a_, pow_a1_;
    std::vector<double> fpow_a_, fpow_a1_;
};

// R(D) = 1/2 * sum over arcs uv of (d+_u)^a + (d-_v)^a, with 0^a = 0.
IndexValue index_digraph(const Digraph& d, const Exponent& a);

// R(G) = sum over v of d(v)^{a+1}, equal to the edge sum of d_u^a + d_v^a.
IndexValue index_graph(const Graph& g, const Exponent& a);

// 1/2 * [ (n-1)^{a+1} + n - 1 + 2r * 2^a ]; requires n >= 2 and
// 0 <= r <= floor((n-1)/2).
IndexValue theorem_bound(int n, int r, const Exponent& a);
bool feasible_cactus_params(int n, int r);

// Vertex-degree-based arc weight phi(i, j); must be defined on every
// ordered degree pair the instance needs.
class VdbFunction {
public:
    static VdbFunction from_table(std::map<std::pair<int, int>, double> table);
    static VdbFunction from_function(int max_degree, const std::function<double(int, int)>& phi);

    double at(int i, int j) const;
    bool defined(int i, int j) const;

private:
    std::map<std::pair<int, int>, double> table_;
};

// 1/2 * sum over arcs uv of phi(d+_u, d-_v).
double vdb_index(const Digraph& d, const VdbFunction& phi);

}  // namespace zorc

#endif
