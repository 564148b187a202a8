#include "coxcheck/moduli.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace coxcheck {

namespace {

std::vector<BigInt> unit_vector(std::size_t dim, std::size_t index) {
  std::vector<BigInt> v(dim, BigInt(0));
  v.at(index) = 1;
  return v;
}

std::vector<BigInt> combine(
    const std::vector<std::pair<BigInt, const std::vector<BigInt>*>>& terms) {
  std::vector<BigInt> acc(terms.at(0).second->size(), BigInt(0));
  for (const auto& [coeff, vec] : terms) {
    for (std::size_t k = 0; k < acc.size(); ++k) {
      acc[k] += coeff * (*vec)[k];
    }
  }
  return acc;
}

bool all_factors_one(const std::vector<BigInt>& factors, std::size_t expected) {
  if (factors.size() != expected) return false;
  return std::all_of(factors.begin(), factors.end(),
                     [](const BigInt& f) { return f == 1; });
}

}  // namespace

bool is_ray_vector(const std::vector<BigInt>& v) {
  bool any_nonzero = false;
  bool ok_pos = true, ok_neg = true;
  for (const BigInt& e : v) {
    if (e != 0) any_nonzero = true;
    if (e != 0 && e != 1) ok_pos = false;
    if (e != 0 && e != -1) ok_neg = false;
  }
  return any_nonzero && (ok_pos || ok_neg);
}

std::vector<std::vector<BigInt>> sigma_rays(std::int64_t n) {
  if (n < 5) {
    throw std::invalid_argument("sigma_rays: needs n >= 5");
  }
  const std::int64_t dim = n - 3;
  if (dim > 24) {
    throw std::overflow_error("sigma_rays: ray count is astronomically large");
  }
  const std::uint64_t limit = std::uint64_t{1} << dim;
  std::vector<std::vector<BigInt>> rays;
  rays.reserve(2 * (limit - 1));
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    std::vector<BigInt> ray(static_cast<std::size_t>(dim));
    for (std::int64_t k = 0; k < dim; ++k) {
      ray[static_cast<std::size_t>(k)] = (mask >> k) & 1 ? 1 : 0;
    }
    rays.push_back(std::move(ray));
  }
  const std::size_t positives = rays.size();
  for (std::size_t idx = 0; idx < positives; ++idx) {
    std::vector<BigInt> neg = rays[idx];
    for (BigInt& e : neg) e = -e;
    rays.push_back(std::move(neg));
  }
  return rays;
}

ConfigReport check_configuration(const Configuration& cfg) {
  if (cfg.n < 7) {
    throw std::invalid_argument("check_configuration: needs n >= 7");
  }
  const std::size_t dim = static_cast<std::size_t>(cfg.n - 3);
  const std::size_t rank_target = static_cast<std::size_t>(cfg.n - 5);
  if (cfg.basis.size() != rank_target) {
    throw std::invalid_argument(
        "check_configuration: basis must contain n-5 vectors");
  }
  for (const auto& vec : cfg.basis) {
    if (vec.size() != dim) {
      throw std::invalid_argument(
          "check_configuration: basis vector dimension mismatch");
    }
  }
  if (cfg.u.size() != dim || cfg.v.size() != dim || cfg.w.size() != dim) {
    throw std::invalid_argument(
        "check_configuration: u, v, w dimension mismatch");
  }
  const BigInt &a = cfg.weights[0], &b = cfg.weights[1], &c = cfg.weights[2];
  if (a <= 0 || b <= 0 || c <= 0) {
    throw std::invalid_argument(
        "check_configuration: weights must be positive");
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 1) {
    throw std::invalid_argument(
        "check_configuration: weights must have gcd 1");
  }

  ConfigReport report;
  report.basis_are_rays =
      std::all_of(cfg.basis.begin(), cfg.basis.end(), is_ray_vector);

  IntMatrix basis_matrix = IntMatrix::from_columns(cfg.basis);
  report.rank_ok = rank_over_q(basis_matrix) == rank_target;
  report.invariant_factors =
      smith_normal_form(basis_matrix).invariant_factors();
  report.saturated = all_factors_one(report.invariant_factors, rank_target);

  std::vector<std::vector<BigInt>> extended = cfg.basis;
  extended.push_back(cfg.u);
  extended.push_back(cfg.v);
  extended.push_back(cfg.w);
  IntMatrix extended_matrix = IntMatrix::from_columns(extended);
  report.quotient_generated = all_factors_one(
      smith_normal_form(extended_matrix).invariant_factors(), dim);

  std::vector<BigInt> target =
      combine({{a, &cfg.u}, {b, &cfg.v}, {c, &cfg.w}});
  RatMatrix system = RatMatrix::from_int(basis_matrix);
  std::vector<Rational> rhs;
  rhs.reserve(dim);
  for (const BigInt& e : target) rhs.push_back(Rational(e));
  auto solution = solve_rational(system, rhs);
  bool rational_member = solution.has_value();
  bool integral_member = false;
  if (solution) {
    integral_member = std::all_of(solution->begin(), solution->end(),
                                  [](const Rational& q) {
                                    return is_integer(q);
                                  });
  }
  // With a saturated full-column-rank basis the solution is unique and
  // rational membership already forces integrality; both routes must agree.
  if (report.rank_ok && report.saturated &&
      rational_member != integral_member) {
    throw std::logic_error(
        "check_configuration: saturation contradicts the integrality of the "
        "solved combination");
  }
  report.relation_holds = integral_member;

  report.passes = report.basis_are_rays && report.rank_ok &&
                  report.saturated && report.quotient_generated &&
                  report.relation_holds;
  return report;
}

namespace {

// The ten displayed vectors; the first eight form the sublattice basis.
std::vector<std::vector<BigInt>> builtin_vectors_13() {
  const std::size_t dim = 10;
  auto e = [&](std::size_t k) { return unit_vector(dim, k - 1); };
  auto sum = [&](std::initializer_list<std::size_t> idx) {
    std::vector<BigInt> v(dim, BigInt(0));
    for (std::size_t k : idx) v[k - 1] += 1;
    return v;
  };
  return {
      sum({1, 5}),                 // a1
      sum({1, 2, 6}),              // a2
      sum({1, 2, 3, 7}),           // a3
      sum({1, 2, 3, 4, 8}),        // a4
      sum({1, 2, 3, 4, 9}),        // a5
      sum({1, 2, 3, 4, 10}),       // a6
      sum({5, 6, 7, 8, 9, 10}),    // a7
      sum({4, 5, 7}),              // a8
      e(1),                        // a9
      e(4),                        // a10
  };
}

}  // namespace

Configuration builtin_example_13() {
  Configuration cfg;
  cfg.n = 13;
  auto vectors = builtin_vectors_13();
  cfg.basis.assign(vectors.begin(), vectors.begin() + 8);
  cfg.u = unit_vector(10, 0);                  // e1
  cfg.v = unit_vector(10, 1);                  // e2
  cfg.w = std::vector<BigInt>(10, BigInt(0));  // e3 + e5 + e6
  cfg.w[2] = 1;
  cfg.w[4] = 1;
  cfg.w[5] = 1;
  cfg.weights = {BigInt(26), BigInt(15), BigInt(7)};
  return cfg;
}

BuiltinReport verify_builtin() {
  Configuration cfg = builtin_example_13();
  BuiltinReport report;
  report.config = check_configuration(cfg);

  const auto vectors = builtin_vectors_13();
  const auto& a1 = vectors[0];
  const auto& a2 = vectors[1];
  const auto& a3 = vectors[2];
  const auto& a7 = vectors[6];
  const auto& a8 = vectors[7];
  const auto& a10 = vectors[9];

  // w = -4u - 2v + 2a1 + a2 + a3 - a8 + a10 = e3 + e5 + e6.
  std::vector<BigInt> w_combo = combine({{BigInt(-4), &cfg.u},
                                         {BigInt(-2), &cfg.v},
                                         {BigInt(2), &a1},
                                         {BigInt(1), &a2},
                                         {BigInt(1), &a3},
                                         {BigInt(-1), &a8},
                                         {BigInt(1), &a10}});
  report.w_combination_ok = w_combo == cfg.w;

  report.determinant_ok = integer_determinant(IntMatrix::from_columns(vectors)) == 1;

  std::vector<BigInt> lhs = combine(
      {{BigInt(26), &cfg.u}, {BigInt(15), &cfg.v}, {BigInt(7), &cfg.w}});
  std::vector<BigInt> rhs = combine({{BigInt(11), &a1},
                                     {BigInt(8), &a2},
                                     {BigInt(4), &a3},
                                     {BigInt(1), &vectors[3]},
                                     {BigInt(1), &vectors[4]},
                                     {BigInt(1), &vectors[5]},
                                     {BigInt(-1), &a7},
                                     {BigInt(-3), &a8}});
  report.identity_ok = lhs == rhs;

  RatMatrix system = RatMatrix::from_int(IntMatrix::from_columns(cfg.basis));
  std::vector<Rational> target;
  target.reserve(lhs.size());
  for (const BigInt& e : lhs) target.push_back(Rational(e));
  auto solution = solve_rational(system, target);
  const std::vector<BigInt> expected = {BigInt(11), BigInt(8),  BigInt(4),
                                        BigInt(1),  BigInt(1),  BigInt(1),
                                        BigInt(-1), BigInt(-3)};
  report.coefficients_ok = false;
  if (solution && solution->size() == expected.size()) {
    report.coefficients_ok = true;
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (!is_integer((*solution)[k])) {
        report.coefficients_ok = false;
        break;
      }
      report.combination.push_back(floor_rat((*solution)[k]));
      if (report.combination.back() != expected[k]) {
        report.coefficients_ok = false;
      }
    }
  }

  report.rays_count_ok = sigma_rays(13).size() == 2046;
  report.passes = report.config.passes && report.w_combination_ok &&
                  report.determinant_ok && report.identity_ok &&
                  report.coefficients_ok && report.rays_count_ok;
  return report;
}

namespace {

std::vector<BigInt> parse_vector(const nlohmann::json& node,
                                 const char* what) {
  if (!node.is_array()) {
    throw std::invalid_argument(std::string("configuration JSON: ") + what +
                                " must be an array of integers");
  }
  std::vector<BigInt> out;
  out.reserve(node.size());
  for (const auto& entry : node) {
    if (!entry.is_number_integer()) {
      throw std::invalid_argument(std::string("configuration JSON: ") + what +
                                  " must contain integers only");
    }
    out.push_back(BigInt(entry.get<std::int64_t>()));
  }
  return out;
}

}  // namespace

Configuration configuration_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument(std::string("configuration JSON: ") +
                                err.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("configuration JSON: expected an object");
  }
  for (const char* key : {"n", "basis", "u", "v", "w", "weights"}) {
    if (!doc.contains(key)) {
      throw std::invalid_argument(
          std::string("configuration JSON: missing field '") + key + "'");
    }
  }
  Configuration cfg;
  if (!doc["n"].is_number_integer()) {
    throw std::invalid_argument("configuration JSON: n must be an integer");
  }
  cfg.n = doc["n"].get<std::int64_t>();
  if (!doc["basis"].is_array()) {
    throw std::invalid_argument(
        "configuration JSON: basis must be an array of vectors");
  }
  for (const auto& vec : doc["basis"]) {
    cfg.basis.push_back(parse_vector(vec, "basis vector"));
  }
  cfg.u = parse_vector(doc["u"], "u");
  cfg.v = parse_vector(doc["v"], "v");
  cfg.w = parse_vector(doc["w"], "w");
  std::vector<BigInt> weights = parse_vector(doc["weights"], "weights");
  if (weights.size() != 3) {
    throw std::invalid_argument(
        "configuration JSON: weights must be [a, b, c]");
  }
  cfg.weights = {weights[0], weights[1], weights[2]};
  return cfg;
}

namespace {

nlohmann::ordered_json vector_to_json(const std::vector<BigInt>& v) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const BigInt& e : v) {
    if (!fits_i64(e)) {
      throw std::overflow_error(
          "configuration JSON: entry does not fit in 64 bits");
    }
    arr.push_back(to_i64(e));
  }
  return arr;
}

}  // namespace

std::string configuration_to_json(const Configuration& cfg) {
  nlohmann::ordered_json out;
  out["n"] = cfg.n;
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  for (const auto& vec : cfg.basis) basis.push_back(vector_to_json(vec));
  out["basis"] = basis;
  out["u"] = vector_to_json(cfg.u);
  out["v"] = vector_to_json(cfg.v);
  out["w"] = vector_to_json(cfg.w);
  out["weights"] = vector_to_json(
      {cfg.weights[0], cfg.weights[1], cfg.weights[2]});
  return out.dump();
}

std::string config_report_to_json(const ConfigReport& report) {
  nlohmann::ordered_json out;
  out["basis_are_rays"] = report.basis_are_rays;
  out["rank_ok"] = report.rank_ok;
  out["saturated"] = report.saturated;
  out["quotient_generated"] = report.quotient_generated;
  out["relation_holds"] = report.relation_holds;
  out["passes"] = report.passes;
  nlohmann::ordered_json factors = nlohmann::ordered_json::array();
  for (const BigInt& f : report.invariant_factors) {
    if (fits_i64(f)) {
      factors.push_back(to_i64(f));
    } else {
      factors.push_back(f.get_str());  // too large for a JSON number
    }
  }
  out["invariant_factors"] = factors;
  return out.dump();
}

}  // namespace coxcheck
