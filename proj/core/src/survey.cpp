#include "coxcheck/survey.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "coxcheck/numbers.hpp"

namespace coxcheck {

namespace {

std::vector<std::array<std::int64_t, 3>> distinct_orientations(
    const std::array<std::int64_t, 3>& triple) {
  std::array<std::int64_t, 3> p = triple;
  std::sort(p.begin(), p.end());
  std::set<std::array<std::int64_t, 3>> seen;
  do {
    seen.insert(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return {seen.begin(), seen.end()};
}

// All qualifying records whose largest weight falls in [from, to].
std::vector<PlaneRecord> scan_by_largest(std::int64_t from, std::int64_t to) {
  std::vector<PlaneRecord> out;
  for (std::int64_t c = from; c <= to; ++c) {
    for (std::int64_t a = 1; a <= c; ++a) {
      for (std::int64_t b = a; b <= c; ++b) {
        if (gcd_i64(gcd_i64(a, b), c) != 1) continue;
        if (auto record = qualifies(a, b, c)) {
          out.push_back(std::move(*record));
        }
      }
    }
  }
  return out;
}

}  // namespace

SurveyResult enumerate_qualifying(std::int64_t bound, int jobs) {
  if (bound < 1) {
    throw std::invalid_argument("enumerate_qualifying: bound must be >= 1");
  }
  if (jobs < 1) {
    throw std::invalid_argument("enumerate_qualifying: jobs must be >= 1");
  }
  const auto start = std::chrono::steady_clock::now();

  SurveyResult result;
  result.bound = bound;

  const int workers =
      static_cast<int>(std::min<std::int64_t>(jobs, bound));
  if (workers <= 1) {
    result.records = scan_by_largest(1, bound);
  } else {
    // Contiguous ranges of the largest weight; uneven tail goes to the last.
    std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
    const std::int64_t step = bound / workers;
    std::int64_t next = 1;
    for (int k = 0; k < workers; ++k) {
      const std::int64_t hi = (k == workers - 1) ? bound : next + step - 1;
      ranges.push_back({next, hi});
      next = hi + 1;
    }
    std::vector<std::vector<PlaneRecord>> partials(ranges.size());
    std::vector<std::exception_ptr> errors(ranges.size());
    std::vector<std::thread> threads;
    threads.reserve(ranges.size());
    for (std::size_t k = 0; k < ranges.size(); ++k) {
      threads.emplace_back([&, k] {
        try {
          partials[k] = scan_by_largest(ranges[k].first, ranges[k].second);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    }
    for (std::thread& th : threads) th.join();
    for (const std::exception_ptr& err : errors) {
      if (err) std::rethrow_exception(err);
    }
    for (std::vector<PlaneRecord>& part : partials) {
      for (PlaneRecord& record : part) {
        result.records.push_back(std::move(record));
      }
    }
  }

  std::sort(result.records.begin(), result.records.end(),
            [](const PlaneRecord& lhs, const PlaneRecord& rhs) {
              return lhs.triple < rhs.triple;
            });
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

bool uniqueness_audit(const SurveyResult& result) {
  for (const PlaneRecord& record : result.records) {
    std::set<CanonicalRelation> canonical;
    for (const auto& orientation : distinct_orientations(record.triple)) {
      Weights wts(orientation[0], orientation[1], orientation[2]);
      for (const Relation& rel : find_relations(wts)) {
        canonical.insert(canonical_relation(wts, rel));
      }
    }
    if (canonical.size() != 1) return false;
  }
  return true;
}

CensusBreakdown census_breakdown(const SurveyResult& result) {
  CensusBreakdown breakdown;
  breakdown.unordered_triples =
      static_cast<std::int64_t>(result.records.size());
  for (const PlaneRecord& record : result.records) {
    for (const auto& orientation : distinct_orientations(record.triple)) {
      Weights wts(orientation[0], orientation[1], orientation[2]);
      bool any = false;
      for (const Relation& rel : find_relations(wts)) {
        if (check_wps_criterion(wts, rel).passes) {
          any = true;
          ++breakdown.orientation_relation_pairs;
        }
      }
      if (any) ++breakdown.passing_orientations;
    }
  }
  return breakdown;
}

std::optional<ReportFormat> parse_report_format(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  if (name == "md") return ReportFormat::md;
  return std::nullopt;
}

namespace {

nlohmann::ordered_json plane_record_json(const PlaneRecord& record) {
  nlohmann::ordered_json out;
  out["a"] = record.orientation.a;
  out["b"] = record.orientation.b;
  out["c"] = record.orientation.c;
  out["e"] = record.relation.e;
  out["f"] = record.relation.f;
  out["g"] = record.relation.g;
  out["w"] = rational_to_string(record.report.w);
  out["n"] = record.report.n;
  out["delta"] = record.report.delta_set;
  out["gamma"] = record.report.gamma_set;
  out["passes"] = record.report.passes;
  return out;
}

}  // namespace

std::string plane_record_to_json(const PlaneRecord& record) {
  return plane_record_json(record).dump();
}

std::string emit_report(const SurveyResult& result, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::csv: {
      out << "a,b,c,e,f,g,w,n\n";
      for (const PlaneRecord& record : result.records) {
        out << record.orientation.a << ',' << record.orientation.b << ','
            << record.orientation.c << ',' << record.relation.e << ','
            << record.relation.f << ',' << record.relation.g << ','
            << rational_to_string(record.report.w) << ',' << record.report.n
            << '\n';
      }
      return out.str();
    }
    case ReportFormat::json: {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (const PlaneRecord& record : result.records) {
        doc.push_back(plane_record_json(record));
      }
      return doc.dump(2) + "\n";
    }
    case ReportFormat::md: {
      out << "| P(a,b,c) | (e, f, -g) |\n| --- | --- |\n";
      for (const PlaneRecord& record : result.records) {
        out << "| P(" << record.orientation.a << ',' << record.orientation.b
            << ',' << record.orientation.c << ") | (" << record.relation.e
            << ", " << record.relation.f << ", -" << record.relation.g
            << ") |\n";
      }
      return out.str();
    }
  }
  throw std::invalid_argument("emit_report: unknown format");
}

}  // namespace coxcheck
