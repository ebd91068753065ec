#include "zorc/report.hpp"

#include <json.hpp>
#include <ostream>

namespace zorc {
namespace {

nlohmann::json row_json(const MaxTableRow& row) {
    return {{"n", row.n},
            {"r", row.r},
            {"a", row.a},
            {"bound", row.bound},
            {"achieved_max", row.achieved},
            {"witness_count", row.witness_count},
            {"witness_classes", row.witness_classes},
            {"witness_labeled_count", row.witness_labeled_count},
            {"match", row.match}};
}

nlohmann::json report_json(const VerificationReport& rep) {
    nlohmann::json j;
    j["claim"] = rep.claim;
    j["grid"] = rep.grid;
    j["instances"] = rep.instances;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : rep.violations)
        j["violations"].push_back({{"instance", v.instance}, {"detail", v.detail}});
    j["violation_count"] = rep.violation_count;
    j["equality_cases"] = nlohmann::json::array();
    for (const auto& e : rep.equality_cases)
        j["equality_cases"].push_back({{"instance", e.instance}, {"tag", e.tag}});
    j["equality_count"] = rep.equality_count;
    j["max_tables"] = nlohmann::json::array();
    for (const auto& row : rep.max_tables) j["max_tables"].push_back(row_json(row));
    j["counters"] = nlohmann::json::object();
    for (const auto& [k, c] : rep.counters) j["counters"][k] = c;
    j["notes"] = rep.notes;
    j["passed"] = rep.passed();
    j["wall_ms"] = rep.wall_ms;
    return j;
}

constexpr const char* kCsvHeader = "n,r,a,bound,achieved_max,witness_count,match\n";

void emit_csv_rows(const VerificationReport& rep, std::ostream& out) {
    for (const auto& row : rep.max_tables)
        out << row.n << ',' << row.r << ',' << row.a << ',' << row.bound << ',' << row.achieved
            << ',' << row.witness_count << ',' << (row.match ? "true" : "false") << '\n';
}

void emit_text(const VerificationReport& rep, std::ostream& out) {
    out << "claim: " << rep.claim << '\n';
    out << "grid: " << rep.grid << '\n';
    out << "instances: " << rep.instances << '\n';
    out << "violations: " << rep.violation_count << '\n';
    for (const auto& v : rep.violations)
        out << "  " << v.instance << ": " << v.detail << '\n';
    out << "equality cases: " << rep.equality_count << '\n';
    if (!rep.counters.empty()) {
        out << "counters:\n";
        for (const auto& [k, c] : rep.counters) out << "  " << k << ": " << c << '\n';
    }
    if (!rep.max_tables.empty()) {
        out << "max table:\n";
        for (const auto& row : rep.max_tables)
            out << "  n=" << row.n << " r=" << row.r << " a=" << row.a << " bound=" << row.bound
                << " achieved=" << row.achieved << " witnesses=" << row.witness_count
                << " classes=" << row.witness_classes << " labeled=" << row.witness_labeled_count
                << " match=" << (row.match ? "true" : "false") << '\n';
    }
    for (const auto& note : rep.notes) out << "note: " << note << '\n';
    out << "wall_ms: " << rep.wall_ms << '\n';
    out << "verdict: " << (rep.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace

std::optional<ReportFormat> parse_format(std::string_view name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    if (name == "text") return ReportFormat::text;
    return std::nullopt;
}

void emit_report(const VerificationReport& report, ReportFormat format, std::ostream& out) {
    switch (format) {
        case ReportFormat::json:
            out << report_json(report).dump(2) << '\n';
            break;
        case ReportFormat::csv:
            out << kCsvHeader;
            emit_csv_rows(report, out);
            break;
        case ReportFormat::text:
            emit_text(report, out);
            break;
    }
}

void emit_reports(const std::vector<VerificationReport>& reports, ReportFormat format,
                  std::ostream& out) {
    switch (format) {
        case ReportFormat::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& rep : reports) arr.push_back(report_json(rep));
            out << arr.dump(2) << '\n';
            break;
        }
        case ReportFormat::csv:
            out << kCsvHeader;
            for (const auto& rep : reports) emit_csv_rows(rep, out);
            break;
        case ReportFormat::text:
            for (std::size_t i = 0; i < reports.size(); ++i) {
                if (i) out << '\n';
                emit_text(reports[i], out);
            }
            break;
    }
}

}  // namespace zorc
