// Command-line front end for the criterion library.
//
// Exit codes: 0 when the queried criterion passes/verifies, 1 when the run
// succeeds with a negative verdict, 2 on usage errors (including invalid
// mathematical input), 3 on internal errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxcheck/jet.hpp"
#include "coxcheck/moduli.hpp"
#include "coxcheck/survey.hpp"
#include "coxcheck/triangle.hpp"
#include "coxcheck/wps.hpp"

namespace {

using coxcheck::BigInt;
using coxcheck::Rational;
using json = nlohmann::ordered_json;

struct GlobalOpts {
  bool as_json = false;
  bool no_timing = false;
  std::uint64_t seed = coxcheck::kDefaultSeed;
};

Rational parse_slope(const std::string& text) {
  auto value = coxcheck::parse_rational(text);
  if (!value) {
    throw std::invalid_argument("'" + text +
                                "' is not a rational (expected p or p/q)");
  }
  return *value;
}

coxcheck::Triangle triangle_from_args(const std::vector<std::string>& slopes) {
  return coxcheck::triangle_from_slopes(
      parse_slope(slopes[0]), parse_slope(slopes[1]), parse_slope(slopes[2]));
}

const char* yes_no(bool value) { return value ? "yes" : "no"; }

void print_triangle_report(const coxcheck::Triangle& t,
                           const coxcheck::TriangleReport& report) {
  using coxcheck::rational_to_string;
  std::cout << "slopes: s1 = " << rational_to_string(t.s1)
            << ", s2 = " << rational_to_string(t.s2)
            << ", s3 = " << rational_to_string(t.s3) << "\n";
  std::cout << "vertices: (0, 0), (" << rational_to_string(Rational(t.x1()))
            << ", " << rational_to_string(Rational(t.y1())) << "), ("
            << rational_to_string(Rational(t.x2())) << ", "
            << rational_to_string(Rational(t.y2())) << ")\n";
  std::cout << "w = " << rational_to_string(report.w)
            << "  (w < 1: " << yes_no(report.cond1) << ")\n";
  std::cout << "n = " << report.n
            << "  matching count on the other side: " << report.cond2_count
            << " (" << yes_no(report.cond2_count_ok)
            << ")  n*s2 non-integral: " << yes_no(report.cond2_nonintegral_ok)
            << "\n";
  std::cout << "passes: " << yes_no(report.passes) << "\n";
}

void print_wps_report(const coxcheck::Weights& wts,
                      const coxcheck::Relation& rel,
                      const coxcheck::WpsReport& report) {
  std::cout << "P(" << wts.a << ", " << wts.b << ", " << wts.c
            << ")  relation (" << rel.e << ", " << rel.f << ", -" << rel.g
            << ")\n";
  std::cout << "w = " << coxcheck::rational_to_string(report.w)
            << "  (w < 1: " << yes_no(report.cond1) << ")\n";
  std::cout << "delta set:";
  for (std::int64_t d : report.delta_set) std::cout << ' ' << d;
  std::cout << "  (n = " << report.n << ")\n";
  std::cout << "gamma set:";
  for (std::int64_t g : report.gamma_set) std::cout << ' ' << g;
  std::cout << "  (count matches: " << yes_no(report.cond2_count_ok)
            << ", residue condition: " << yes_no(report.cond2_mod_ok) << ")\n";
  std::cout << "passes: " << yes_no(report.passes) << "\n";
}

int run_check_triangle(const std::vector<std::string>& slopes,
                       const GlobalOpts& global) {
  coxcheck::Triangle t = triangle_from_args(slopes);
  coxcheck::TriangleReport report = coxcheck::check_triangle_criterion(t);
  coxcheck::NormalFan fan = coxcheck::normal_fan_rays(t);
  BigInt mult = coxcheck::minimal_multiple(t);
  if (global.as_json) {
    json doc = json::parse(coxcheck::triangle_report_to_json(t, report));
    doc["normal_fan"] = json::parse(coxcheck::normal_fan_to_json(fan));
    doc["minimal_multiple"] = coxcheck::fits_i64(mult)
                                  ? json(coxcheck::to_i64(mult))
                                  : json(mult.get_str());
    std::cout << doc.dump() << "\n";
  } else {
    print_triangle_report(t, report);
    std::cout << "normal fan rays: (" << fan.rays[0].first << ", "
              << fan.rays[0].second << "), (" << fan.rays[1].first << ", "
              << fan.rays[1].second << "), (" << fan.rays[2].first << ", "
              << fan.rays[2].second << ")\n";
    std::cout << "fan weights: (" << fan.weights[0] << ", " << fan.weights[1]
              << ", " << fan.weights[2] << ")  sublattice index: " << fan.index
              << "\n";
    std::cout << "minimal integral multiple: " << mult << "\n";
  }
  return report.passes ? 0 : 1;
}

int run_check_wps(std::int64_t a, std::int64_t b, std::int64_t c,
                  const std::vector<std::int64_t>& rel,
                  const GlobalOpts& global) {
  if (!rel.empty()) {
    coxcheck::Weights wts(a, b, c);
    coxcheck::Relation relation(rel[0], rel[1], rel[2]);
    coxcheck::WpsReport report = coxcheck::check_wps_criterion(wts, relation);
    if (global.as_json) {
      std::array<std::int64_t, 3> triple{a, b, c};
      std::sort(triple.begin(), triple.end());
      coxcheck::PlaneRecord record{triple, wts, relation, report};
      std::cout << coxcheck::plane_record_to_json(record) << "\n";
    } else {
      print_wps_report(wts, relation, report);
    }
    return report.passes ? 0 : 1;
  }
  auto record = coxcheck::qualifies(a, b, c);
  if (!record) {
    if (global.as_json) {
      std::array<std::int64_t, 3> triple{a, b, c};
      std::sort(triple.begin(), triple.end());
      json doc;
      doc["triple"] = triple;
      doc["qualifies"] = false;
      std::cout << doc.dump() << "\n";
    } else {
      std::cout << "no qualifying orientation for {" << a << ", " << b << ", "
                << c << "}\n";
    }
    return 1;
  }
  if (global.as_json) {
    std::cout << coxcheck::plane_record_to_json(*record) << "\n";
  } else {
    std::cout << "qualifying orientation found:\n";
    print_wps_report(record->orientation, record->relation, record->report);
  }
  return 0;
}

int run_find_relation(std::int64_t a, std::int64_t b, std::int64_t c,
                      const GlobalOpts& global) {
  coxcheck::Weights wts(a, b, c);
  std::vector<coxcheck::Relation> relations = coxcheck::find_relations(wts);
  if (global.as_json) {
    json doc = json::array();
    for (const coxcheck::Relation& rel : relations) {
      Rational w(BigInt(rel.g) * rel.g * c, BigInt(a) * b);
      w.canonicalize();
      json row;
      row["e"] = rel.e;
      row["f"] = rel.f;
      row["g"] = rel.g;
      row["w"] = coxcheck::rational_to_string(w);
      doc.push_back(row);
    }
    std::cout << doc.dump() << "\n";
  } else if (relations.empty()) {
    std::cout << "no relation with w < 1 for P(" << a << ", " << b << ", " << c
              << ")\n";
  } else {
    for (const coxcheck::Relation& rel : relations) {
      Rational w(BigInt(rel.g) * rel.g * c, BigInt(a) * b);
      w.canonicalize();
      std::cout << "(" << rel.e << ", " << rel.f << ", -" << rel.g
                << ")  w = " << coxcheck::rational_to_string(w) << "\n";
    }
  }
  return relations.empty() ? 1 : 0;
}

int run_enumerate(std::int64_t max, const std::string& format_name,
                  const std::string& out_path, int jobs,
                  const GlobalOpts& global) {
  auto format = coxcheck::parse_report_format(format_name);
  if (!format) {
    throw std::invalid_argument("unknown report format '" + format_name + "'");
  }
  coxcheck::SurveyResult result = coxcheck::enumerate_qualifying(max, jobs);
  std::string report = coxcheck::emit_report(result, *format);
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      throw std::invalid_argument("cannot open '" + out_path +
                                  "' for writing");
    }
    file << report;
    if (!file) throw std::runtime_error("failed writing '" + out_path + "'");
  }
  if (global.as_json) {
    json doc;
    doc["bound"] = result.bound;
    doc["count"] = result.records.size();
    doc["dedup_mode"] = result.dedup_mode;
    if (!out_path.empty()) {
      doc["out"] = out_path;
    } else {
      json records = json::array();
      for (const coxcheck::PlaneRecord& record : result.records) {
        records.push_back(json::parse(coxcheck::plane_record_to_json(record)));
      }
      doc["records"] = std::move(records);
    }
    if (!global.no_timing) doc["elapsed_seconds"] = result.elapsed_seconds;
    std::cout << doc.dump() << "\n";
  } else if (!out_path.empty()) {
    std::cout << "wrote " << result.records.size() << " records to "
              << out_path;
    if (!global.no_timing) {
      std::cout << " (" << result.elapsed_seconds << "s)";
    }
    std::cout << "\n";
  } else {
    std::cout << report;
  }
  return 0;
}

int run_oracle_lemma22(std::int64_t n, std::int64_t a, std::int64_t b,
                       const GlobalOpts& global) {
  coxcheck::Lemma22Result result = coxcheck::verify_lemma22(n, a, b);
  if (global.as_json) {
    json doc;
    doc["n"] = n;
    doc["a"] = a;
    doc["b"] = b;
    doc["annihilates_s2"] = result.annihilates;
    doc["s1_value"] = coxcheck::rational_to_string(result.s1_value);
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "annihilates the staircase monomials: "
              << yes_no(result.annihilates) << "\n";
    std::cout << "value on the extra monomial: "
              << coxcheck::rational_to_string(result.s1_value) << "\n";
  }
  return result.annihilates ? 0 : 1;
}

int run_oracle_full(const std::vector<std::string>& slopes,
                    std::int64_t multiple, const std::string& mode_name,
                    int primes, const GlobalOpts& global) {
  coxcheck::Triangle t = triangle_from_args(slopes);
  BigInt m = multiple > 0 ? BigInt(multiple) : coxcheck::minimal_multiple(t);
  coxcheck::OracleMode mode = mode_name == "modular"
                                  ? coxcheck::OracleMode::modular
                                  : coxcheck::OracleMode::exact;
  coxcheck::Verdict verdict =
      coxcheck::vanishing_oracle(t, m, mode, primes, global.seed);
  if (global.as_json) {
    std::cout << verdict.to_json(!global.no_timing) << "\n";
  } else {
    std::cout << "m = " << verdict.m << ", W = " << verdict.order
              << ", system " << verdict.rows << " x " << verdict.cols << "\n";
    std::cout << "mode: " << coxcheck::to_string(verdict.mode)
              << "  method: " << verdict.method << "\n";
    if (!verdict.primes.empty()) {
      std::cout << "primes:";
      for (std::uint64_t p : verdict.primes) std::cout << ' ' << p;
      std::cout << "\n";
    }
    std::cout << "rank = " << verdict.rank
              << ", rank with vertex row = " << verdict.rank_extended << "\n";
    std::cout << "forced vanishing at the vertex: "
              << yes_no(verdict.forced_vanishing) << "\n";
    std::cout << "column sums forced: " << yes_no(verdict.column_sums_forced)
              << "\n";
    if (!global.no_timing) {
      std::cout << "elapsed: " << verdict.elapsed_seconds << "s\n";
    }
  }
  return verdict.forced_vanishing && verdict.column_sums_forced ? 0 : 1;
}

int run_oracle_remark26(const std::vector<std::string>& slopes,
                        std::int64_t multiple, const GlobalOpts& global) {
  coxcheck::Triangle t = triangle_from_args(slopes);
  BigInt m = multiple > 0 ? BigInt(multiple) : coxcheck::minimal_multiple(t);
  bool holds = coxcheck::remark26_check(t, m);
  if (global.as_json) {
    json doc;
    doc["m"] = coxcheck::fits_i64(m) ? json(coxcheck::to_i64(m))
                                     : json(m.get_str());
    doc["holds"] = holds;
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "single-derivative vertex check at m = " << m << ": "
              << yes_no(holds) << "\n";
  }
  return holds ? 0 : 1;
}

int run_gnw(int variant, std::int64_t from, std::int64_t to,
            const GlobalOpts& global) {
  std::int64_t minimum = variant == 1 ? 4 : 3;
  if (from < minimum) {
    throw std::invalid_argument("variant " + std::to_string(variant) +
                                " starts at N = " + std::to_string(minimum));
  }
  if (from > to) throw std::invalid_argument("--from exceeds --to");
  bool all_pass = true;
  json rows = json::array();
  for (std::int64_t N = from; N <= to; ++N) {
    if (variant == 1 && N % 3 == 0) continue;
    auto [wts, rel] = coxcheck::gnw_family(N, variant);
    coxcheck::WpsReport report = coxcheck::check_wps_criterion(wts, rel);
    all_pass = all_pass && report.passes;
    if (global.as_json) {
      json row;
      row["N"] = N;
      row["a"] = wts.a;
      row["b"] = wts.b;
      row["c"] = wts.c;
      row["e"] = rel.e;
      row["f"] = rel.f;
      row["g"] = rel.g;
      row["w"] = coxcheck::rational_to_string(report.w);
      row["n"] = report.n;
      row["passes"] = report.passes;
      rows.push_back(row);
    } else {
      std::cout << "N = " << N << ": P(" << wts.a << ", " << wts.b << ", "
                << wts.c << ")  relation (" << rel.e << ", " << rel.f << ", -"
                << rel.g << ")  w = " << coxcheck::rational_to_string(report.w)
                << "  n = " << report.n << "  passes: "
                << yes_no(report.passes) << "\n";
    }
  }
  if (global.as_json) std::cout << rows.dump() << "\n";
  return all_pass ? 0 : 1;
}

json builtin_report_json(const coxcheck::BuiltinReport& report) {
  json doc;
  doc["w_combination_ok"] = report.w_combination_ok;
  doc["determinant_ok"] = report.determinant_ok;
  doc["identity_ok"] = report.identity_ok;
  doc["coefficients_ok"] = report.coefficients_ok;
  doc["rays_count_ok"] = report.rays_count_ok;
  json combo = json::array();
  for (const BigInt& coeff : report.combination) {
    combo.push_back(coxcheck::fits_i64(coeff) ? json(coxcheck::to_i64(coeff))
                                              : json(coeff.get_str()));
  }
  doc["combination"] = std::move(combo);
  doc["passes"] = report.passes;
  return doc;
}

void print_config_report(const coxcheck::ConfigReport& report) {
  std::cout << "basis vectors are rays: " << yes_no(report.basis_are_rays)
            << "\n";
  std::cout << "basis has full rank: " << yes_no(report.rank_ok) << "\n";
  std::cout << "sublattice saturated (invariant factors";
  for (const BigInt& f : report.invariant_factors) std::cout << ' ' << f;
  std::cout << "): " << yes_no(report.saturated) << "\n";
  std::cout << "basis + u, v, w generate the full lattice: "
            << yes_no(report.quotient_generated) << "\n";
  std::cout << "weight relation holds modulo the sublattice: "
            << yes_no(report.relation_holds) << "\n";
  std::cout << "passes: " << yes_no(report.passes) << "\n";
}

int run_moduli_verify13(const GlobalOpts& global) {
  coxcheck::BuiltinReport report = coxcheck::verify_builtin();
  if (global.as_json) {
    json doc;
    doc["config"] = json::parse(coxcheck::config_report_to_json(report.config));
    doc["builtin"] = builtin_report_json(report);
    std::cout << doc.dump() << "\n";
  } else {
    print_config_report(report.config);
    std::cout << "displayed combination for w: "
              << yes_no(report.w_combination_ok) << "\n";
    std::cout << "determinant of the extended matrix is 1: "
              << yes_no(report.determinant_ok) << "\n";
    std::cout << "weighted identity re-verified: " << yes_no(report.identity_ok)
              << "\n";
    std::cout << "combination coefficients re-derived:";
    for (const BigInt& coeff : report.combination) std::cout << ' ' << coeff;
    std::cout << " (" << yes_no(report.coefficients_ok) << ")\n";
    std::cout << "ray count for n = 13 is 2046: "
              << yes_no(report.rays_count_ok) << "\n";
    std::cout << "passes: " << yes_no(report.passes) << "\n";
  }
  return report.passes ? 0 : 1;
}

int run_moduli_check(const std::string& path, const GlobalOpts& global) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  coxcheck::Configuration cfg =
      coxcheck::configuration_from_json(buffer.str());
  coxcheck::ConfigReport report = coxcheck::check_configuration(cfg);
  if (global.as_json) {
    std::cout << coxcheck::config_report_to_json(report) << "\n";
  } else {
    print_config_report(report);
  }
  return report.passes ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checker for the width/column criterion on blown-up "
               "toric surfaces and weighted projective planes"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts global;
  app.add_flag("--json", global.as_json, "emit machine-readable JSON");
  app.add_flag("--no-timing", global.no_timing,
               "omit timing fields for reproducible output");
  app.add_option("--seed", global.seed,
                 "seed for the modular oracle's prime sampling");

  int exit_code = 0;

  // check-triangle S1 S2 S3
  auto* check_triangle =
      app.add_subcommand("check-triangle",
                         "evaluate the slope criterion for a triangle");
  check_triangle->fallthrough();
  std::vector<std::string> ct_slopes;
  check_triangle
      ->add_option("slopes", ct_slopes,
                   "three ascending rationals s1 s2 s3 (use -- before "
                   "negatives)")
      ->required()
      ->expected(3);
  check_triangle->callback(
      [&] { exit_code = run_check_triangle(ct_slopes, global); });

  // check-wps A B C [--rel E F G]
  auto* check_wps = app.add_subcommand(
      "check-wps", "evaluate the criterion for a weighted projective plane");
  check_wps->fallthrough();
  std::int64_t wa = 0, wb = 0, wc = 0;
  std::vector<std::int64_t> wrel;
  check_wps->add_option("a", wa, "first weight")->required();
  check_wps->add_option("b", wb, "second weight")->required();
  check_wps->add_option("c", wc, "third weight")->required();
  check_wps
      ->add_option("--rel", wrel,
                   "relation coefficients e f g with a*e + b*f = c*g "
                   "(omit to search orientations)")
      ->expected(3);
  check_wps->callback(
      [&] { exit_code = run_check_wps(wa, wb, wc, wrel, global); });

  // find-relation A B C
  auto* find_rel = app.add_subcommand(
      "find-relation", "list the w < 1 relations of a weight triple");
  find_rel->fallthrough();
  std::int64_t fa = 0, fb = 0, fc = 0;
  find_rel->add_option("a", fa, "first weight")->required();
  find_rel->add_option("b", fb, "second weight")->required();
  find_rel->add_option("c", fc, "third weight")->required();
  find_rel->callback(
      [&] { exit_code = run_find_relation(fa, fb, fc, global); });

  // enumerate --max N [--format csv|json|md] [--out FILE] [--jobs K]
  auto* enumerate = app.add_subcommand(
      "enumerate", "search all coprime weight triples up to a bound");
  enumerate->fallthrough();
  std::int64_t en_max = 0;
  std::string en_format = "csv";
  std::string en_out;
  int en_jobs = 1;
  enumerate->add_option("--max", en_max, "largest weight to consider")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--format", en_format, "report format")
      ->check(CLI::IsMember({"csv", "json", "md"}));
  enumerate->add_option("--out", en_out, "write the report to this file");
  enumerate->add_option("--jobs", en_jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  enumerate->callback([&] {
    exit_code = run_enumerate(en_max, en_format, en_out, en_jobs, global);
  });

  // oracle {lemma22 | full | remark26}
  auto* oracle =
      app.add_subcommand("oracle", "linear-algebra verification oracles");
  oracle->require_subcommand(1);
  oracle->fallthrough();

  auto* lemma22 = oracle->add_subcommand(
      "lemma22", "verify the derivative annihilator on its staircase");
  lemma22->fallthrough();
  std::int64_t l22_n = 0, l22_a = 0, l22_b = 0;
  lemma22->add_option("--n", l22_n, "staircase size")
      ->required()
      ->check(CLI::PositiveNumber);
  lemma22->add_option("--a", l22_a, "pole order")
      ->required()
      ->check(CLI::PositiveNumber);
  lemma22->add_option("--b", l22_b, "leading power")
      ->required()
      ->check(CLI::PositiveNumber);
  lemma22->callback(
      [&] { exit_code = run_oracle_lemma22(l22_n, l22_a, l22_b, global); });

  auto* full = oracle->add_subcommand(
      "full", "decide whether the jet constraints force vertex vanishing");
  full->fallthrough();
  std::vector<std::string> full_slopes;
  std::int64_t full_multiple = 0;
  std::string full_mode = "exact";
  int full_primes = 2;
  full->add_option("--slopes", full_slopes,
                   "three ascending rationals (comma-separate after = for "
                   "negatives)")
      ->required()
      ->expected(3)
      ->delimiter(',');
  full->add_option("--multiple", full_multiple,
                   "dilation factor m (default: the minimal multiple)")
      ->check(CLI::PositiveNumber);
  full->add_option("--mode", full_mode, "arithmetic mode")
      ->check(CLI::IsMember({"exact", "modular"}));
  full->add_option("--primes", full_primes,
                   "independent primes in modular mode")
      ->check(CLI::PositiveNumber);
  full->callback([&] {
    exit_code = run_oracle_full(full_slopes, full_multiple, full_mode,
                                full_primes, global);
  });

  auto* remark26 = oracle->add_subcommand(
      "remark26", "single-derivative shortcut for n = 1 triangles");
  remark26->fallthrough();
  std::vector<std::string> r26_slopes;
  std::int64_t r26_multiple = 0;
  remark26->add_option("--slopes", r26_slopes,
                       "three ascending rationals (comma-separate after = "
                       "for negatives)")
      ->required()
      ->expected(3)
      ->delimiter(',');
  remark26->add_option("--multiple", r26_multiple,
                       "dilation factor m (default: the minimal multiple)")
      ->check(CLI::PositiveNumber);
  remark26->callback([&] {
    exit_code = run_oracle_remark26(r26_slopes, r26_multiple, global);
  });

  // gnw --variant 1|2 --from N1 --to N2
  auto* gnw = app.add_subcommand(
      "gnw", "check members of the two infinite plane families");
  gnw->fallthrough();
  int gnw_variant = 0;
  std::int64_t gnw_from = 0, gnw_to = 0;
  gnw->add_option("--variant", gnw_variant, "family variant")
      ->required()
      ->check(CLI::Range(1, 2));
  gnw->add_option("--from", gnw_from, "first N")->required();
  gnw->add_option("--to", gnw_to, "last N")->required();
  gnw->callback(
      [&] { exit_code = run_gnw(gnw_variant, gnw_from, gnw_to, global); });

  // moduli {verify-n13 | check --file F}
  auto* moduli =
      app.add_subcommand("moduli", "lattice configuration checks");
  moduli->require_subcommand(1);
  moduli->fallthrough();

  auto* verify13 = moduli->add_subcommand(
      "verify-n13", "re-verify the built-in 13-point configuration");
  verify13->fallthrough();
  verify13->callback([&] { exit_code = run_moduli_verify13(global); });

  auto* mcheck = moduli->add_subcommand(
      "check", "check a configuration from a JSON file");
  mcheck->fallthrough();
  std::string mcheck_file;
  mcheck->add_option("--file", mcheck_file, "configuration JSON")
      ->required()
      ->check(CLI::ExistingFile);
  mcheck->callback([&] { exit_code = run_moduli_check(mcheck_file, global); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
