#ifndef ZORC_REPORT_HPP
#define ZORC_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "zorc/verify.hpp"

namespace zorc {

enum class ReportFormat { json, csv, text };

std::optional<ReportFormat> parse_format(std::string_view name);

// json: the full report object; csv: header plus one line per max-table
// row (n,r,a,bound,achieved_max,witness_count,match); text: human summary.
// Output is byte-deterministic for a fixed report except for the wall_ms
// field (json/text only).
void emit_report(const VerificationReport& report, ReportFormat format, std::ostream& out);

// json: array of report objects; csv: single header, rows concatenated;
// text: sections separated by a blank line.
void emit_reports(const std::vector<VerificationReport>& reports, ReportFormat format,
                  std::ostream& out);

}  // namespace zorc

#endif
