#include "coxcheck/jet.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include <json.hpp>

namespace coxcheck {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

BigInt rational_as_integer(const Rational& q, const char* context) {
  if (!is_integer(q)) {
    throw std::invalid_argument(std::string(context) +
                                ": expected an integral value; m is not a "
                                "valid multiple of this triangle");
  }
  return floor_rat(q);
}

std::int64_t as_i64(const BigInt& v, const char* context) {
  if (!fits_i64(v)) {
    throw std::overflow_error(std::string(context) +
                              ": value does not fit in 64 bits");
  }
  return to_i64(v);
}

// Montgomery form of a signed 64-bit value.
std::uint64_t mont_signed(const Montgomery& field, std::int64_t v) {
  const std::int64_t n = static_cast<std::int64_t>(field.modulus());
  std::int64_t r = v % n;
  if (r < 0) r += n;
  return field.to_mont(static_cast<std::uint64_t>(r));
}

}  // namespace

DerivativeOp::DerivativeOp(std::vector<DerivativeTerm> terms)
    : terms_(std::move(terms)) {
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (const DerivativeTerm& term : terms_) {
    if (term.p < 0 || term.q < 0) {
      throw std::invalid_argument(
          "DerivativeOp: derivative orders must be non-negative");
    }
    if (!seen.insert({term.p, term.q}).second) {
      throw std::invalid_argument(
          "DerivativeOp: duplicate (p, q) derivative term");
    }
  }
}

Rational eval_derivative_at_t0(const DerivativeOp& op, const Monomial& mono) {
  Rational total(0);
  for (const DerivativeTerm& term : op.terms()) {
    BigInt fx = falling_factorial(BigInt(mono.i),
                                  static_cast<unsigned long>(term.p));
    if (fx == 0) continue;
    BigInt fy = falling_factorial(BigInt(mono.j),
                                  static_cast<unsigned long>(term.q));
    if (fy == 0) continue;
    total += term.coeff * Rational(fx * fy);
  }
  return total;
}

DerivativeOp lemma22_operator(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (n < 1 || a < 1 || b < 1) {
    throw std::invalid_argument("lemma22_operator: needs n, a, b >= 1");
  }
  std::vector<DerivativeTerm> terms;
  terms.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int64_t i = 0; i <= n; ++i) {
    const unsigned long len = static_cast<unsigned long>(n - i);
    Rational alpha = Rational(falling_factorial(BigInt(b + n - i - 1), len)) /
                     Rational(falling_factorial(BigInt(a + n - i - 1), len));
    alpha *= Rational(binomial(static_cast<long>(n), static_cast<long>(i)));
    alpha.canonicalize();
    terms.push_back({alpha, n - i, i});
  }
  return DerivativeOp(std::move(terms));
}

Lemma22Result verify_lemma22(std::int64_t n, std::int64_t a, std::int64_t b) {
  DerivativeOp op = lemma22_operator(n, a, b);
  Lemma22Result result;
  result.annihilates = true;
  for (std::int64_t j = 0; j < n; ++j) {
    if (eval_derivative_at_t0(op, Monomial{-a, b + j}) != 0) {
      result.annihilates = false;
      break;
    }
  }
  result.s1_value = eval_derivative_at_t0(op, Monomial{-(a + 1), b + n + 1});
  return result;
}

bool verify_lemma25(std::int64_t n, std::int64_t b) {
  if (n < 1 || b < 1) {
    throw std::invalid_argument("verify_lemma25: needs n, b >= 1");
  }
  std::vector<DerivativeTerm> terms;
  for (std::int64_t i = 0; i <= n; ++i) {
    const unsigned long len = static_cast<unsigned long>(n - i);
    Rational beta(falling_factorial(BigInt(b + n - i - 1), len) *
                  binomial(static_cast<long>(n), static_cast<long>(i)));
    if (i % 2 == 1) beta = -beta;
    terms.push_back({beta, 0, i});
  }
  DerivativeOp op(std::move(terms));
  for (std::int64_t j = 0; j < n; ++j) {
    if (eval_derivative_at_t0(op, Monomial{0, b + j}) != 0) return false;
  }
  return true;
}

bool verify_lemma23(const std::vector<Rational>& p_coeffs, std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("verify_lemma23: needs n >= 1");
  }
  std::int64_t degree = -1;
  for (std::size_t k = 0; k < p_coeffs.size(); ++k) {
    if (p_coeffs[k] != 0) degree = static_cast<std::int64_t>(k);
  }
  if (degree >= n) {
    throw std::invalid_argument(
        "verify_lemma23: polynomial degree must be less than n");
  }
  auto value_at = [&](std::int64_t x) {
    Rational acc(0);
    for (std::size_t k = p_coeffs.size(); k-- > 0;) {
      acc = acc * Rational(BigInt(x)) + p_coeffs[k];
    }
    return acc;
  };
  Rational total(0);
  for (std::int64_t i = 0; i <= n; ++i) {
    Rational term = value_at(i) *
                    Rational(binomial(static_cast<long>(n),
                                      static_cast<long>(i)));
    if (i % 2 == 1) term = -term;
    total += term;
  }
  return total == 0;
}

std::pair<Triangle, BigInt> normalize_for_proof(const Triangle& t) {
  if (is_integer(t.s2)) {
    throw std::invalid_argument(
        "normalize_for_proof: s2 is an integer, no shear places it in "
        "(-2, -1)");
  }
  BigInt shift = BigInt(-2) - floor_rat(t.s2);
  Triangle sheared = shear(t, shift);
  if (!(Rational(-2) < sheared.s2 && sheared.s2 < Rational(-1))) {
    throw std::logic_error("normalize_for_proof: shear missed (-2, -1)");
  }
  return {sheared, shift};
}

bool right_columns_profile(const Triangle& t, const BigInt& m) {
  TriangleReport rep = check_triangle_criterion(t);
  if (!rep.passes) {
    throw std::invalid_argument(
        "right_columns_profile: triangle must pass the criterion");
  }
  auto [tn, shift] = normalize_for_proof(t);
  (void)shift;
  LatticeSample sample = lattice_points(tn, m);
  const std::int64_t w = as_i64(sample.W, "right_columns_profile");
  const std::int64_t n = as_i64(rep.n, "right_columns_profile");

  const Rational mq{Rational(m)};
  BigInt lx = rational_as_integer(mq * tn.x1(), "right_columns_profile");
  BigInt rx = rational_as_integer(mq * tn.x2(), "right_columns_profile");
  BigInt ry = rational_as_integer(mq * tn.y2(), "right_columns_profile");
  BigInt dx = BigInt(-2) - lx;
  BigInt dy = -ry;
  if (rx + dx != w - 2 || ry + dy != 0) {
    throw std::logic_error(
        "right_columns_profile: translated right vertex is misplaced");
  }

  std::vector<std::pair<std::int64_t, std::int64_t>> got;
  for (const auto& [x, y] : sample.points) {
    const std::int64_t tx = as_i64(BigInt(x) + dx, "right_columns_profile");
    const std::int64_t ty = as_i64(BigInt(y) + dy, "right_columns_profile");
    if (tx >= w - n - 1) got.push_back({tx, ty});
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> want;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; i + j < n; ++j) {
      want.push_back({w - n - 1 + i, j});
    }
  }
  return got == want;
}

JetSystem::JetSystem(const Triangle& t, const BigInt& m,
                     const std::pair<BigInt, BigInt>& offset)
    : triangle_(t), m_(m) {
  LatticeSample sample = lattice_points(t, m);
  w_ = as_i64(sample.W, "JetSystem");
  if (w_ < 2) {
    throw std::invalid_argument(
        "JetSystem: W = m*width must be at least 2; the order-(W-1) jet "
        "imposes no constraints otherwise");
  }
  points_.reserve(sample.points.size());
  for (const auto& [x, y] : sample.points) {
    points_.push_back({as_i64(BigInt(x) + offset.first, "JetSystem"),
                       as_i64(BigInt(y) + offset.second, "JetSystem")});
  }
  const Rational mq{Rational(m)};
  BigInt vx = rational_as_integer(mq * t.x1(), "JetSystem") + offset.first;
  BigInt vy = rational_as_integer(mq * t.y1(), "JetSystem") + offset.second;
  const std::pair<std::int64_t, std::int64_t> vertex{as_i64(vx, "JetSystem"),
                                                     as_i64(vy, "JetSystem")};
  auto it = std::lower_bound(points_.begin(), points_.end(), vertex);
  if (it == points_.end() || *it != vertex) {
    throw std::logic_error("JetSystem: vertex is not among the lattice points");
  }
  vertex_index_ = static_cast<std::size_t>(it - points_.begin());
}

std::size_t JetSystem::row_index(std::int64_t p, std::int64_t q) const {
  if (p < 0 || q < 0 || p + q > w_ - 1) {
    throw std::out_of_range("JetSystem::row_index: need p, q >= 0, p+q <= W-1");
  }
  return static_cast<std::size_t>(p * w_ - p * (p - 1) / 2 + q);
}

std::vector<BigInt> JetSystem::exact_row(std::int64_t p, std::int64_t q) const {
  (void)row_index(p, q);  // validates the range
  std::unordered_map<std::int64_t, BigInt> fx, fy;
  std::vector<BigInt> row;
  row.reserve(points_.size());
  for (const auto& [x, y] : points_) {
    auto itx = fx.find(x);
    if (itx == fx.end()) {
      itx = fx.emplace(x, falling_factorial(BigInt(x),
                                            static_cast<unsigned long>(p)))
                .first;
    }
    auto ity = fy.find(y);
    if (ity == fy.end()) {
      ity = fy.emplace(y, falling_factorial(BigInt(y),
                                            static_cast<unsigned long>(q)))
                .first;
    }
    row.push_back(itx->second * ity->second);
  }
  return row;
}

ModMatrix JetSystem::to_mod_matrix(std::uint64_t prime) const {
  ModMatrix M(prime, rows(), cols());
  const Montgomery& field = M.field();
  const std::size_t w = static_cast<std::size_t>(w_);

  // Falling factorials [v]_p for p < W over each distinct coordinate value,
  // built once per value via [v]_{p+1} = [v]_p * (v - p).
  std::vector<std::int64_t> xs, ys;
  for (const auto& [x, y] : points_) {
    xs.push_back(x);
    ys.push_back(y);
  }
  auto dedup = [](std::vector<std::int64_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(xs);
  dedup(ys);
  auto build_tables = [&](const std::vector<std::int64_t>& values) {
    std::vector<std::vector<std::uint64_t>> tables(
        w, std::vector<std::uint64_t>(values.size()));
    for (std::size_t k = 0; k < values.size(); ++k) {
      std::uint64_t acc = field.one();
      for (std::size_t p = 0; p < w; ++p) {
        tables[p][k] = acc;
        const __int128 shifted =
            static_cast<__int128>(values[k]) - static_cast<__int128>(p);
        acc = field.mul(acc, mont_signed(field,
                                         static_cast<std::int64_t>(shifted)));
      }
    }
    return tables;
  };
  const auto fx = build_tables(xs);
  const auto fy = build_tables(ys);

  std::unordered_map<std::int64_t, std::size_t> xi, yi;
  for (std::size_t k = 0; k < xs.size(); ++k) xi[xs[k]] = k;
  for (std::size_t k = 0; k < ys.size(); ++k) yi[ys[k]] = k;
  std::vector<std::size_t> cx, cy;
  cx.reserve(points_.size());
  cy.reserve(points_.size());
  for (const auto& [x, y] : points_) {
    cx.push_back(xi[x]);
    cy.push_back(yi[y]);
  }

  std::size_t r = 0;
  for (std::size_t p = 0; p < w; ++p) {
    for (std::size_t q = 0; q + p < w; ++q) {
      std::uint64_t* row = M.row_data(r++);
      for (std::size_t c = 0; c < points_.size(); ++c) {
        row[c] = field.mul(fx[p][cx[c]], fy[q][cy[c]]);
      }
    }
  }
  return M;
}

std::string to_string(OracleMode mode) {
  return mode == OracleMode::exact ? "exact" : "modular";
}

std::string Verdict::to_json(bool include_timing) const {
  nlohmann::ordered_json out;
  out["m"] = m;
  out["W"] = order;
  out["rows"] = rows;
  out["cols"] = cols;
  out["mode"] = coxcheck::to_string(mode);
  out["method"] = method;
  out["primes"] = primes;
  out["rank"] = rank;
  out["rank_extended"] = rank_extended;
  out["forced_vanishing"] = forced_vanishing;
  out["column_sums_forced"] = column_sums_forced;
  if (include_timing) out["elapsed_seconds"] = elapsed_seconds;
  return out.dump();
}

namespace {

// Exact certificate that the annihilator combination of the top-order rows
// (W-1-i, i), i = 0..n, evaluates to zero off the vertex and nonzero at it;
// this exhibits the vertex functional inside the row span over the rationals.
bool witness_certifies(const JetSystem& js, std::int64_t n, std::int64_t a,
                       std::int64_t b) {
  const std::int64_t w = js.order();
  if (n < 1 || n >= w) return false;

  std::vector<Rational> alpha;
  alpha.reserve(static_cast<std::size_t>(n) + 1);
  const DerivativeOp op = lemma22_operator(n, a, b);
  for (const DerivativeTerm& term : op.terms()) {
    alpha.push_back(term.coeff);  // term for d_x^{n-i} d_y^i carries alpha_i
  }
  BigInt scale(1);
  for (const Rational& al : alpha) {
    BigInt den = al.get_den();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<BigInt> coeff;
  coeff.reserve(alpha.size());
  for (const Rational& al : alpha) {
    Rational scaled = al * Rational(scale);
    scaled.canonicalize();
    coeff.push_back(floor_rat(scaled));
  }

  // Tail falling factorials [x]_{W-1-i} for i = 0..n and heads [y]_i.
  std::unordered_map<std::int64_t, std::vector<BigInt>> tails, heads;
  for (const auto& [x, y] : js.points()) {
    if (!tails.count(x)) {
      std::vector<BigInt> tail(static_cast<std::size_t>(n) + 1);
      BigInt acc(1);
      for (std::int64_t l = 0; l < w - 1; ++l) {
        if (l >= w - 1 - n) tail[static_cast<std::size_t>(w - 1 - l)] = acc;
        acc *= BigInt(x) - l;
      }
      tail[0] = acc;  // [x]_{W-1}
      tails.emplace(x, std::move(tail));
    }
    if (!heads.count(y)) {
      std::vector<BigInt> head(static_cast<std::size_t>(n) + 1);
      BigInt acc(1);
      for (std::int64_t i = 0; i <= n; ++i) {
        head[static_cast<std::size_t>(i)] = acc;
        acc *= BigInt(y) - i;
      }
      heads.emplace(y, std::move(head));
    }
  }

  bool vertex_nonzero = false;
  for (std::size_t idx = 0; idx < js.points().size(); ++idx) {
    const auto& [x, y] = js.points()[idx];
    const auto& tail = tails.at(x);
    const auto& head = heads.at(y);
    BigInt value(0);
    for (std::int64_t i = 0; i <= n; ++i) {
      value += coeff[static_cast<std::size_t>(i)] *
               tail[static_cast<std::size_t>(i)] *
               head[static_cast<std::size_t>(i)];
    }
    if (idx == js.vertex_index()) {
      vertex_nonzero = value != 0;
    } else if (value != 0) {
      return false;
    }
  }
  return vertex_nonzero;
}

// Exact certificate for the column-sum functionals: polynomials in x of
// degree < W realize any function on at most W column abscissas, and with
// the singleton vertex column thrown in they realize any function on W + 1;
// each column indicator is therefore a combination of the rows (l, 0) and
// the vertex functional.  Verified by an exact rank computation.
bool column_sums_certificate(const JetSystem& js) {
  std::vector<std::int64_t> xs;
  for (const auto& [x, y] : js.points()) xs.push_back(x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  const std::int64_t vx = js.points()[js.vertex_index()].first;
  std::size_t vertex_column_size = 0;
  for (const auto& [x, y] : js.points()) {
    if (x == vx) ++vertex_column_size;
  }

  const std::size_t k = xs.size();
  const std::size_t w = static_cast<std::size_t>(js.order());
  const bool need_vertex_row = k > w;
  if (need_vertex_row && vertex_column_size != 1) return false;

  RatMatrix B(k, k);
  const std::size_t poly_rows = need_vertex_row ? k - 1 : k;
  for (std::size_t l = 0; l < poly_rows; ++l) {
    for (std::size_t c = 0; c < k; ++c) {
      B.at(l, c) = Rational(falling_factorial(BigInt(xs[c]),
                                              static_cast<unsigned long>(l)));
    }
  }
  if (need_vertex_row) {
    for (std::size_t c = 0; c < k; ++c) {
      B.at(k - 1, c) = Rational(xs[c] == vx ? 1 : 0);
    }
  }
  return rref_inplace(B).rank == k;
}

struct FrameData {
  Triangle triangle;
  BigInt dx{0}, dy{0};
  bool proof_frame = false;
  TriangleReport report;
  BigInt a{0}, b{0};
};

FrameData prepare_frame(const Triangle& t, const BigInt& m) {
  FrameData frame{t, BigInt(0), BigInt(0), false, check_triangle_criterion(t),
                  BigInt(0), BigInt(0)};
  if (is_integer(t.s2)) return frame;  // raw frame; criterion cannot pass

  auto [tn, shift] = normalize_for_proof(t);
  (void)shift;
  frame.triangle = tn;
  frame.proof_frame = true;
  frame.report = check_triangle_criterion(tn);

  const Rational mq{Rational(m)};
  Rational wq = mq * width(tn);
  BigInt big_w = rational_as_integer(wq, "vanishing_oracle");
  frame.a = big_w - frame.report.n;
  frame.b = rational_as_integer(-tn.s2 * wq - Rational(frame.report.n) - 1,
                                "vanishing_oracle");
  if (frame.a <= 0 || frame.b <= 0) {
    throw std::invalid_argument(
        "vanishing_oracle: the normalized frame needs a = W-n > 0 and "
        "b = -s2*W-n-1 > 0; choose a larger m");
  }
  BigInt lx = rational_as_integer(mq * tn.x1(), "vanishing_oracle");
  BigInt ry = rational_as_integer(mq * tn.y2(), "vanishing_oracle");
  frame.dx = BigInt(-2) - lx;
  frame.dy = -ry;
  return frame;
}

struct ModularOutcome {
  std::size_t rank = 0;
  std::size_t rank_extended = 0;
  bool forced = false;
  bool column_sums = false;

  bool operator==(const ModularOutcome&) const = default;
};

ModularOutcome run_one_prime(const JetSystem& js, std::uint64_t prime) {
  ModMatrix M = js.to_mod_matrix(prime);
  const Montgomery& field = M.field();
  ModularOutcome out;
  out.rank = M.echelonize();

  std::vector<std::uint64_t> residual(js.cols(), 0);
  residual[js.vertex_index()] = field.one();
  out.forced = M.reduce_in_span(residual);
  out.rank_extended = out.rank + (out.forced ? 0 : 1);

  // Extend the echelon basis by the reduced vertex row when it is new.
  std::size_t extra_pivot = 0;
  std::vector<std::uint64_t> extra_row;
  if (!out.forced) {
    while (extra_pivot < residual.size() && residual[extra_pivot] == 0) {
      ++extra_pivot;
    }
    const std::uint64_t inv = field.inv(residual[extra_pivot]);
    extra_row.resize(residual.size());
    for (std::size_t j = 0; j < residual.size(); ++j) {
      extra_row[j] = field.mul(residual[j], inv);
    }
  }

  auto in_extended_span = [&](std::vector<std::uint64_t>& v) {
    if (M.reduce_in_span(v)) return true;
    if (extra_row.empty()) return false;
    const std::uint64_t factor = v[extra_pivot];
    if (factor != 0) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = field.sub(v[j], field.mul(factor, extra_row[j]));
      }
    }
    return std::all_of(v.begin(), v.end(),
                       [](std::uint64_t e) { return e == 0; });
  };

  out.column_sums = true;
  const auto& pts = js.points();
  std::size_t begin = 0;
  while (begin < pts.size()) {
    std::size_t end = begin;
    while (end < pts.size() && pts[end].first == pts[begin].first) ++end;
    std::vector<std::uint64_t> column(js.cols(), 0);
    for (std::size_t idx = begin; idx < end; ++idx) {
      column[idx] = field.one();
    }
    if (!in_extended_span(column)) {
      out.column_sums = false;
      break;
    }
    begin = end;
  }
  return out;
}

struct ExactElimination {
  std::size_t rank = 0;
  std::size_t rank_extended = 0;
  bool forced = false;
};

ExactElimination run_exact_elimination(const JetSystem& js) {
  const std::size_t rows = js.rows();
  const std::size_t cols = js.cols();
  RatMatrix R(rows, cols);
  const std::int64_t w = js.order();
  std::size_t r = 0;
  for (std::int64_t p = 0; p < w; ++p) {
    for (std::int64_t q = 0; p + q < w; ++q) {
      std::vector<BigInt> row = js.exact_row(p, q);
      for (std::size_t c = 0; c < cols; ++c) {
        R.at(r, c) = Rational(row[c]);
      }
      ++r;
    }
  }
  RrefSummary summary = rref_inplace(R);

  std::vector<Rational> v(cols, Rational(0));
  v[js.vertex_index()] = Rational(1);
  for (std::size_t k = 0; k < summary.rank; ++k) {
    const std::size_t pc = summary.pivot_cols[k];
    Rational factor = v[pc];
    if (factor == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) {
      v[j] -= factor * R.at(k, j);
    }
  }
  ExactElimination result;
  result.rank = summary.rank;
  result.forced = std::all_of(v.begin(), v.end(),
                              [](const Rational& e) { return e == 0; });
  result.rank_extended = result.rank + (result.forced ? 0 : 1);
  return result;
}

}  // namespace

Verdict vanishing_oracle(const Triangle& t, const BigInt& m, OracleMode mode,
                         int prime_count, std::uint64_t seed) {
  const auto start = Clock::now();
  if (mode == OracleMode::modular && prime_count < 1) {
    throw std::invalid_argument(
        "vanishing_oracle: modular mode needs at least one prime");
  }

  FrameData frame = prepare_frame(t, m);
  JetSystem js(frame.triangle, m, {frame.dx, frame.dy});

  Verdict verdict;
  verdict.mode = mode;
  verdict.m = as_i64(m, "vanishing_oracle");
  verdict.order = js.order();
  verdict.rows = js.rows();
  verdict.cols = js.cols();

  std::mt19937_64 rng(seed);

  if (mode == OracleMode::modular) {
    std::vector<std::uint64_t> primes;
    while (primes.size() < static_cast<std::size_t>(prime_count)) {
      std::uint64_t p = random_prime(rng);
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) {
        primes.push_back(p);
      }
    }
    std::vector<ModularOutcome> outcomes;
    outcomes.reserve(primes.size());
    for (std::uint64_t p : primes) {
      outcomes.push_back(run_one_prime(js, p));
    }
    for (const ModularOutcome& outcome : outcomes) {
      if (!(outcome == outcomes.front())) {
        throw std::runtime_error(
            "vanishing_oracle: modular verdicts disagree across primes; "
            "rerun in exact mode");
      }
    }
    verdict.method = "modular";
    verdict.primes = primes;
    verdict.rank = outcomes.front().rank;
    verdict.rank_extended = outcomes.front().rank_extended;
    verdict.forced_vanishing = outcomes.front().forced;
    verdict.column_sums_forced = outcomes.front().column_sums;
    verdict.elapsed_seconds = seconds_since(start);
    return verdict;
  }

  // Exact mode: try the rational witness first; its success pins
  // forced_vanishing, and a single mod-p elimination can then certify the
  // rank whenever it reaches min(rows, cols), since rank_p <= rank_Q.
  bool witness_ok = false;
  if (frame.proof_frame && frame.report.passes) {
    witness_ok = witness_certifies(js, as_i64(frame.report.n, "vanishing_oracle"),
                                   as_i64(frame.a, "vanishing_oracle"),
                                   as_i64(frame.b, "vanishing_oracle"));
  }
  if (witness_ok) {
    const std::uint64_t probe = random_prime(rng);
    ModMatrix M = js.to_mod_matrix(probe);
    const std::size_t rank_p = M.echelonize();
    if (rank_p == std::min(js.rows(), js.cols())) {
      verdict.method = "exact-witness";
      verdict.primes = {probe};
      verdict.rank = rank_p;
      verdict.rank_extended = rank_p;
      verdict.forced_vanishing = true;
      verdict.column_sums_forced = column_sums_certificate(js);
      verdict.elapsed_seconds = seconds_since(start);
      return verdict;
    }
  }

  ExactElimination elim = run_exact_elimination(js);
  verdict.method = "exact-elimination";
  verdict.rank = elim.rank;
  verdict.rank_extended = elim.rank_extended;
  verdict.forced_vanishing = elim.forced;
  verdict.column_sums_forced = column_sums_certificate(js);
  verdict.elapsed_seconds = seconds_since(start);
  return verdict;
}

bool remark26_check(const Triangle& t, const BigInt& m) {
  TriangleReport rep = check_triangle_criterion(t);
  if (!rep.passes || rep.n != 1) {
    throw std::invalid_argument(
        "remark26_check: triangle must pass the criterion with n = 1");
  }
  Triangle tr = reflect(t);
  LatticeSample sample = lattice_points(tr, m);
  const std::int64_t w = as_i64(sample.W, "remark26_check");
  if (w < 2) {
    throw std::invalid_argument("remark26_check: needs W >= 2");
  }
  const Rational mq{Rational(m)};
  BigInt rx = rational_as_integer(mq * tr.x2(), "remark26_check");
  BigInt ry = rational_as_integer(mq * tr.y2(), "remark26_check");

  // The criterion (n = 1 on the reflected side) leaves a single lattice point
  // in the column next to the right vertex; its height fixes the shear that
  // flattens the bottom-right edge.
  std::vector<BigInt> second_column;
  for (const auto& [x, y] : sample.points) {
    if (BigInt(x) == rx - 1) second_column.push_back(BigInt(y));
  }
  if (second_column.size() != 1) {
    throw std::logic_error(
        "remark26_check: expected a single point in the second column from "
        "the right");
  }
  BigInt d = second_column.front() - ry;

  Triangle tr2 = shear(tr, -d);
  LatticeSample sheared = lattice_points(tr2, m);
  BigInt rx2 = rational_as_integer(mq * tr2.x2(), "remark26_check");
  BigInt ry2 = rational_as_integer(mq * tr2.y2(), "remark26_check");
  BigInt dx = BigInt(w - 1) - rx2;
  BigInt dy = -ry2;

  BigInt lvx = rational_as_integer(mq * tr2.x1(), "remark26_check") + dx;
  BigInt lvy = rational_as_integer(mq * tr2.y1(), "remark26_check") + dy;
  if (lvx != -1) {
    throw std::logic_error("remark26_check: left vertex did not land at x=-1");
  }

  // [x]_{W-2} vanishes exactly for 0 <= x <= W-3; survivors additionally
  // need y != 0 to survive the single d_y.
  std::vector<std::pair<std::int64_t, std::int64_t>> survivors;
  for (const auto& [x, y] : sheared.points) {
    const std::int64_t tx = as_i64(BigInt(x) + dx, "remark26_check");
    const std::int64_t ty = as_i64(BigInt(y) + dy, "remark26_check");
    const bool falling_nonzero = !(0 <= tx && tx <= w - 3);
    if (falling_nonzero && ty != 0) survivors.push_back({tx, ty});
  }
  const std::pair<std::int64_t, std::int64_t> lv{
      as_i64(lvx, "remark26_check"), as_i64(lvy, "remark26_check")};
  return survivors == std::vector<std::pair<std::int64_t, std::int64_t>>{lv} &&
         lvy != 0;
}

}  // namespace coxcheck
