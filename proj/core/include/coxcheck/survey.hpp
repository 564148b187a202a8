#pragma once

// Exhaustive census of qualifying weighted projective planes up to a weight
// bound: deduplicated by unordered triple, deterministic under any worker
// count, and rendered as CSV, JSON, or a markdown table.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxcheck/wps.hpp"

namespace coxcheck {

struct SurveyResult {
  std::int64_t bound = 0;
  std::vector<PlaneRecord> records;  // sorted by canonical triple
  std::string dedup_mode = "unordered-triple-gcd1";
  double elapsed_seconds = 0.0;
};

// Scans all unordered triples {a, b, c} with 1 <= a <= b <= c <= bound and
// gcd(a, b, c) = 1, keeping those with a passing orientation.  Work is
// partitioned by ranges of the largest weight; the merged output does not
// depend on jobs.  Throws std::invalid_argument when bound or jobs < 1.
SurveyResult enumerate_qualifying(std::int64_t bound, int jobs = 1);

// True iff every record's plane admits exactly one w < 1 relation up to the
// a<->b / e<->f swap, across all orientations of its triple.
bool uniqueness_audit(const SurveyResult& result);

// Counts under alternative deduplication conventions, for reporting when the
// canonical census is contested.
struct CensusBreakdown {
  std::int64_t unordered_triples = 0;
  std::int64_t passing_orientations = 0;
  std::int64_t orientation_relation_pairs = 0;
};
CensusBreakdown census_breakdown(const SurveyResult& result);

enum class ReportFormat { csv, json, md };

std::optional<ReportFormat> parse_report_format(const std::string& name);

// CSV: columns a,b,c,e,f,g,w,n with w as "p/q".  JSON: array of objects in
// the full report schema.  Markdown: the two-column table "P(a,b,c) |
// (e, f, -g)".
std::string emit_report(const SurveyResult& result, ReportFormat format);

// The report-schema JSON object for one plane.
std::string plane_record_to_json(const PlaneRecord& record);

}  // namespace coxcheck
