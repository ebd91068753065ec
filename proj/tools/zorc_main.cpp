// Command-line front end: index evaluation, orientation search, cactus
// generation, extremal construction, and the verification suites.
// Exit codes: 0 success / all checks passed, 1 verification violations,
// 2 usage or input errors.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zorc/canonical.hpp"
#include "zorc/edgelist.hpp"
#include "zorc/factory.hpp"
#include "zorc/graph.hpp"
#include "zorc/index.hpp"
#include "zorc/report.hpp"
#include "zorc/search.hpp"
#include "zorc/verify.hpp"

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<zorc::Exponent> parse_a_list(const std::string& list, const std::string& mode) {
    if (mode != "exact" && mode != "float")
        throw UsageError("--mode must be 'exact' or 'float'");
    std::vector<zorc::Exponent> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        double value = 0;
        try {
            value = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw UsageError("--a: cannot parse '" + item + "'");
        }
        if (pos != item.size()) throw UsageError("--a: cannot parse '" + item + "'");
        const bool integral = value == static_cast<long long>(value);
        if (mode == "exact") {
            if (!integral)
                throw UsageError("--a: exact mode requires integer exponents, got '" + item + "'");
            out.push_back(zorc::Exponent::exact(static_cast<int>(value)));
        } else {
            out.push_back(zorc::Exponent::floating(value));
        }
    }
    if (out.empty()) throw UsageError("--a: empty exponent list");
    return out;
}

zorc::ReportFormat parse_format_flag(const std::string& name) {
    const auto fmt = zorc::parse_format(name);
    if (!fmt) throw UsageError("--format must be json, csv, or text");
    return *fmt;
}

// Writes through to --out when given, stdout otherwise.
class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("--out: cannot open '" + path + "' for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int run_index(const std::string& graph_path, const std::string& digraph_path,
              const std::string& a_flag, const std::string& mode) {
    if (graph_path.empty() == digraph_path.empty())
        throw UsageError("index: pass exactly one of --graph or --digraph");
    const auto a_list = parse_a_list(a_flag, mode);
    for (const auto& a : a_list) {
        zorc::IndexValue value = zorc::IndexValue::floating(0);
        if (!graph_path.empty())
            value = zorc::index_graph(zorc::parse_graph_file(graph_path), a);
        else
            value = zorc::index_digraph(zorc::parse_digraph_file(digraph_path), a);
        if (a_list.size() > 1) std::cout << "a=" << a.to_string() << ": ";
        std::cout << "R = " << value.to_string() << '\n';
    }
    return 0;
}

int run_orient_max(const std::string& graph_path, const std::string& a_flag,
                   const std::string& mode, const std::string& algo, int workers,
                   bool halve_reversal) {
    if (graph_path.empty()) throw UsageError("orient-max: --graph is required");
    if (algo != "exhaustive" && algo != "bnb")
        throw UsageError("--algo must be 'exhaustive' or 'bnb'");
    const auto a_list = parse_a_list(a_flag, mode);
    const auto g = zorc::parse_graph_file(graph_path);
    for (const auto& a : a_list) {
        const auto res = algo == "bnb"
                             ? zorc::max_orientation_bnb(g, a)
                             : zorc::max_orientation_exhaustive(g, a, workers, halve_reversal);
        if (a_list.size() > 1) std::cout << "a=" << a.to_string() << ": ";
        std::cout << "max = " << res.max_value.to_string() << ", witnesses = "
                  << res.witnesses.size() << '\n';
    }
    return 0;
}

int run_gen_cacti(int n_max, int r_max, const std::string& out_dir) {
    if (n_max < 1 || n_max > zorc::kCactusMaxVertices)
        throw UsageError("gen-cacti: --n-max must be in [1, " +
                         std::to_string(zorc::kCactusMaxVertices) + "]");
    const std::filesystem::path dir(out_dir.empty() ? "." : out_dir);
    std::filesystem::create_directories(dir);
    for (int n = 1; n <= n_max; ++n) {
        for (int r = 0; 2 * r <= n - 1 && (r_max < 0 || r <= r_max); ++r) {
            const auto cacti = zorc::enumerate_cacti(n, r);
            for (std::size_t i = 0; i < cacti.size(); ++i) {
                const auto path = dir / ("cactus_n" + std::to_string(n) + "_r" + std::to_string(r) +
                                         "_" + std::to_string(i) + ".txt");
                std::ofstream f(path);
                if (!f) throw UsageError("gen-cacti: cannot write '" + path.string() + "'");
                zorc::write_graph(f, cacti[i]);
            }
            std::cout << "n=" << n << " r=" << r << ": " << cacti.size() << '\n';
        }
    }
    return 0;
}

int run_construct_extremal(int n_max, int r_max, const std::string& a_flag,
                           const std::string& mode, const std::string& out_dir) {
    if (n_max < 2 || n_max > zorc::kCactusMaxVertices)
        throw UsageError("construct-extremal: --n-max must be in [2, " +
                         std::to_string(zorc::kCactusMaxVertices) + "]");
    const auto a_list = parse_a_list(a_flag, mode);
    const std::filesystem::path dir(out_dir.empty() ? "." : out_dir);
    std::filesystem::create_directories(dir);
    for (int n = 2; n <= n_max; ++n) {
        for (int r = 0; 2 * r <= n - 1 && (r_max < 0 || r <= r_max); ++r) {
            for (const auto& a : a_list) {
                const auto family = zorc::extremal_set(n, r, a);
                for (std::size_t i = 0; i < family.digraphs.size(); ++i) {
                    const auto path =
                        dir / ("extremal_n" + std::to_string(n) + "_r" + std::to_string(r) + "_a" +
                               a.to_string() + "_" + std::to_string(i) + ".txt");
                    std::ofstream f(path);
                    if (!f)
                        throw UsageError("construct-extremal: cannot write '" + path.string() + "'");
                    zorc::write_digraph(f, family.digraphs[i]);
                }
                std::cout << "n=" << n << " r=" << r << " a=" << a.to_string() << ": "
                          << family.digraphs.size() << " orientations, R = "
                          << zorc::theorem_bound(n, r, a).to_string() << '\n';
            }
        }
    }
    return 0;
}

int run_verify(const std::string& claim, int n_max, int r_max, std::string a_flag,
               const std::string& mode, int workers, int grid_points,
               const std::string& format_flag, const std::string& out_path) {
    const auto format = parse_format_flag(format_flag);
    zorc::VerifyOptions opt;
    opt.workers = workers;
    // Per-claim grid defaults; negative sentinels mean "not passed".
    const auto pick = [](int flag, int fallback) { return flag < 0 ? fallback : flag; };

    std::vector<zorc::VerificationReport> reports;
    const auto run_one = [&](const std::string& c) {
        if (c == "bound") {
            if (a_flag.empty()) a_flag = "1,2,3";
            reports.push_back(
                zorc::verify_orientation_bound(pick(n_max, 6), parse_a_list(a_flag, mode), opt));
        } else if (c == "sink-source") {
            reports.push_back(zorc::verify_sink_source_count(pick(n_max, 7), opt));
        } else if (c == "transform-a") {
            if (a_flag.empty()) a_flag = "1,2";
            reports.push_back(
                zorc::verify_transformation_A(pick(n_max, 8), parse_a_list(a_flag, mode), opt));
        } else if (c == "transform-b") {
            if (a_flag.empty()) a_flag = "1,2";
            reports.push_back(
                zorc::verify_transformation_B(pick(n_max, 8), parse_a_list(a_flag, mode), opt));
        } else if (c == "pendant") {
            if (a_flag.empty()) a_flag = "1,2,3";
            reports.push_back(
                zorc::verify_pendant_deletion(pick(n_max, 6), parse_a_list(a_flag, mode), opt));
        } else if (c == "catalogs") {
            if (a_flag.empty()) a_flag = "1,2,3";
            reports.push_back(zorc::verify_base_catalogs(parse_a_list(a_flag, mode), opt));
        } else if (c == "theorem") {
            if (a_flag.empty()) a_flag = "1,2,3";
            reports.push_back(zorc::verify_theorem(pick(n_max, 8), pick(r_max, 3),
                                                   parse_a_list(a_flag, mode), opt));
        } else if (c == "appendix") {
            reports.push_back(zorc::verify_appendix_positivity(pick(grid_points, 10000), opt));
        } else {
            throw UsageError("verify: unknown claim '" + c +
                             "' (bound, sink-source, transform-a, transform-b, pendant, catalogs, "
                             "theorem, appendix, all)");
        }
    };
    if (claim == "all") {
        const std::string saved = a_flag;
        for (const auto& c : {"bound", "sink-source", "transform-a", "transform-b", "pendant",
                              "catalogs", "theorem", "appendix"}) {
            a_flag = saved;
            run_one(c);
        }
    } else {
        run_one(claim);
    }

    OutputSink sink(out_path);
    if (reports.size() == 1)
        zorc::emit_report(reports.front(), format, sink.stream());
    else
        zorc::emit_reports(reports, format, sink.stream());
    for (const auto& rep : reports)
        if (!rep.passed()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zeroth-order general Randic index of graph orientations: "
                 "indices, extremal searches, cactus catalogs, claim verification"};
    app.require_subcommand(1);

    std::string graph_path, digraph_path, a_flag, out_path;
    std::string mode = "exact", format_flag = "json", algo = "exhaustive", claim;
    int n_max = -1, r_max = -1, workers = 1, grid_points = -1;
    bool halve_reversal = false;

    auto* c_index = app.add_subcommand("index", "Evaluate the index of one graph or digraph");
    c_index->add_option("--graph", graph_path, "undirected edge-list file");
    c_index->add_option("--digraph", digraph_path, "arc-list file");
    c_index->add_option("--a", a_flag, "comma-separated exponents (default 1)");
    c_index->add_option("--mode", mode, "exact|float");

    auto* c_max = app.add_subcommand("orient-max", "Maximize the index over all orientations");
    c_max->add_option("--graph", graph_path, "undirected edge-list file")->required();
    c_max->add_option("--a", a_flag, "comma-separated exponents (default 1)");
    c_max->add_option("--mode", mode, "exact|float");
    c_max->add_option("--algo", algo, "exhaustive|bnb");
    c_max->add_option("--workers", workers, "worker threads");
    c_max->add_flag("--halve-reversal", halve_reversal,
                    "search one orientation per mutually reverse pair");

    auto* c_gen = app.add_subcommand("gen-cacti", "Write all non-isomorphic cacti as files");
    c_gen->add_option("--n-max", n_max, "largest vertex count")->required();
    c_gen->add_option("--r-max", r_max, "largest cycle count (default: all feasible)");
    c_gen->add_option("--out", out_path, "output directory (default .)");

    auto* c_ext = app.add_subcommand("construct-extremal", "Write the extremal orientations");
    c_ext->add_option("--n-max", n_max, "largest vertex count")->required();
    c_ext->add_option("--r-max", r_max, "largest cycle count (default: all feasible)");
    c_ext->add_option("--a", a_flag, "comma-separated exponents (default 1)");
    c_ext->add_option("--mode", mode, "exact|float");
    c_ext->add_option("--out", out_path, "output directory (default .)");

    auto* c_verify = app.add_subcommand("verify", "Machine-check one claim or the whole battery");
    c_verify
        ->add_option("claim", claim,
                     "bound|sink-source|transform-a|transform-b|pendant|catalogs|theorem|appendix|all")
        ->required();
    c_verify->add_option("--n-max", n_max, "grid cap (claim-specific default)");
    c_verify->add_option("--r-max", r_max, "cycle cap (theorem only, default 3)");
    c_verify->add_option("--a", a_flag, "comma-separated exponents (claim-specific default)");
    c_verify->add_option("--mode", mode, "exact|float");
    c_verify->add_option("--workers", workers, "worker threads");
    c_verify->add_option("--grid-points", grid_points, "appendix grid size (default 10000)");
    c_verify->add_option("--format", format_flag, "json|csv|text (default json)");
    c_verify->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (a_flag.empty() && (c_index->parsed() || c_max->parsed() || c_ext->parsed()))
            a_flag = "1";
        if (c_index->parsed()) return run_index(graph_path, digraph_path, a_flag, mode);
        if (c_max->parsed())
            return run_orient_max(graph_path, a_flag, mode, algo, workers, halve_reversal);
        if (c_gen->parsed()) return run_gen_cacti(n_max, r_max, out_path);
        if (c_ext->parsed())
            return run_construct_extremal(n_max, r_max, a_flag, mode, out_path);
        if (c_verify->parsed())
            return run_verify(claim, n_max, r_max, a_flag, mode, workers, grid_points, format_flag,
                              out_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const zorc::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
