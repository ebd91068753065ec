#include "zorc/index.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace zorc {

Exponent Exponent::exact(int a) {
    if (a < 1) throw std::invalid_argument("exponent a must be at least 1");
    return Exponent(true, a, static_cast<double>(a));
}

Exponent Exponent::floating(double a) {
    if (!(a >= 1.0)) throw std::invalid_argument("exponent a must be at least 1");
    return Exponent(false, 0, a);
}

int Exponent::integer() const {
    if (!exact_) throw std::logic_error("floating exponent has no integer value");
    return int_a_;
}

std::string Exponent::to_string() const {
    if (exact_) return std::to_string(int_a_);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", value_);
    return buf;
}

IndexValue IndexValue::exact_doubled(BigInt doubled) {
    double approx = static_cast<double>(doubled) / 2.0;
    return IndexValue(true, std::move(doubled), approx);
}

IndexValue IndexValue::floating(double value) { return IndexValue(false, BigInt(0), value); }

const BigInt& IndexValue::doubled() const {
    if (!exact_) throw std::logic_error("floating index value has no exact doubled form");
    return doubled_;
}

double IndexValue::approx() const { return value_; }

std::string IndexValue::to_string() const {
    if (exact_) {
        if (doubled_ % 2 == 0) return BigInt(doubled_ / 2).str();
        return doubled_.str() + "/2";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value_);
    return buf;
}

bool IndexValue::equal(const IndexValue& a, const IndexValue& b) {
    if (a.exact_ && b.exact_) return a.doubled_ == b.doubled_;
    return std::fabs(a.approx() - b.approx()) <= kFloatTolerance;
}

bool IndexValue::less(const IndexValue& a, const IndexValue& b) {
    if (a.exact_ && b.exact_) return a.doubled_ < b.doubled_;
    return a.approx() < b.approx() - kFloatTolerance;
}

DegreeEvaluator::DegreeEvaluator(const Exponent& a, int max_degree) : a_(a), max_degree_(max_degree) {
    if (max_degree < 0) throw std::invalid_argument("negative max degree");
    fpow_a_.resize(max_degree + 1);
    fpow_a1_.resize(max_degree + 1);
    for (int x = 0; x <= max_degree; ++x) {
        fpow_a_[x] = x == 0 ? 0.0 : std::pow(x, a.value());
        fpow_a1_[x] = x == 0 ? 0.0 : std::pow(x, a.value() + 1.0);
    }
    if (a.is_exact()) {
        pow_a_.resize(max_degree + 1);
        pow_a1_.resize(max_degree + 1);
        for (int x = 0; x <= max_degree; ++x) {
            pow_a_[x] = x == 0 ? BigInt(0) : boost::multiprecision::pow(BigInt(x), static_cast<unsigned>(a.integer()));
            pow_a1_[x] = pow_a_[x] * x;
        }
    }
}

BigInt DegreeEvaluator::doubled_from_degrees(const std::vector<int>& out_deg,
                                             const std::vector<int>& in_deg) const {
    BigInt total = 0;
    for (std::size_t v = 0; v < out_deg.size(); ++v) {
        total += pow_a1_[out_deg[v]];
        total += pow_a1_[in_deg[v]];
    }
    return total;
}

double DegreeEvaluator::value_from_degrees(const std::vector<int>& out_deg,
                                           const std::vector<int>& in_deg) const {
    double total = 0;
    for (std::size_t v = 0; v < out_deg.size(); ++v) {
        total += fpow_a1_[out_deg[v]];
        total += fpow_a1_[in_deg[v]];
    }
    return total / 2.0;
}

IndexValue index_digraph(const Digraph& d, const Exponent& a) {
    int max_deg = 0;
    for (int v = 0; v < d.vertex_count(); ++v) {
        max_deg = std::max({max_deg, d.out_degree(v), d.in_degree(v)});
    }
    DegreeEvaluator eval(a, max_deg);
    if (a.is_exact()) {
        BigInt doubled = 0;
        for (const auto& [u, v] : d.arcs()) {
            doubled += eval.pow_a(d.out_degree(u));
            doubled += eval.pow_a(d.in_degree(v));
        }
        return IndexValue::exact_doubled(std::move(doubled));
    }
    double total = 0;
    for (const auto& [u, v] : d.arcs()) {
        total += eval.fpow_a(d.out_degree(u));
        total += eval.fpow_a(d.in_degree(v));
    }
    return IndexValue::floating(total / 2.0);
}

IndexValue index_graph(const Graph& g, const Exponent& a) {
    DegreeEvaluator eval(a, g.max_degree());
    if (a.is_exact()) {
        BigInt total = 0;
        for (int v = 0; v < g.vertex_count(); ++v) total += eval.pow_a1(g.degree(v));
        return IndexValue::exact_doubled(total * 2);
    }
    double total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) total += eval.fpow_a1(g.degree(v));
    return IndexValue::floating(total);
}

bool feasible_cactus_params(int n, int r) { return n >= 1 && r >= 0 && 2 * r <= n - 1; }

IndexValue theorem_bound(int n, int r, const Exponent& a) {
    if (n < 2 || !feasible_cactus_params(n, r)) {
        throw std::invalid_argument("infeasible parameters n=" + std::to_string(n) +
                                    " r=" + std::to_string(r));
    }
    if (a.is_exact()) {
        DegreeEvaluator eval(a, std::max(n - 1, 2));
        BigInt doubled = eval.pow_a1(n - 1) + (n - 1) + BigInt(2 * r) * eval.pow_a(2);
        return IndexValue::exact_doubled(std::move(doubled));
    }
    double doubled = std::pow(n - 1, a.value() + 1.0) + (n - 1) + 2.0 * r * std::pow(2.0, a.value());
    return IndexValue::floating(doubled / 2.0);
}

VdbFunction VdbFunction::from_table(std::map<std::pair<int, int>, double> table) {
    VdbFunction f;
    f.table_ = std::move(table);
    return f;
}

VdbFunction VdbFunction::from_function(int max_degree, const std::function<double(int, int)>& phi) {
    std::map<std::pair<int, int>, double> table;
    for (int i = 0; i <= max_degree; ++i) {
        for (int j = 0; j <= max_degree; ++j) table[{i, j}] = phi(i, j);
    }
    return from_table(std::move(table));
}

double VdbFunction::at(int i, int j) const {
    auto it = table_.find({i, j});
    if (it == table_.end()) {
        throw std::out_of_range("phi undefined at degree pair (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
    }
    return it->second;
}

bool VdbFunction::defined(int i, int j) const { return table_.count({i, j}) > 0; }

double vdb_index(const Digraph& d, const VdbFunction& phi) {
    double total = 0;
    for (const auto& [u, v] : d.arcs()) total += phi.at(d.out_degree(u), d.in_degree(v));
    return total / 2.0;
}

}  // namespace zorc
