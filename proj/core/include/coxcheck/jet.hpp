#pragma once

// Derivative-annihilator operators and the vanishing oracle.  A lattice point
// (i, j) of the dilated triangle is identified with the monomial x^i y^j; the
// constraint "all partial derivatives of order up to W-1 vanish at (1, 1)"
// becomes a linear system on the monomial coefficients, and the oracle decides
// whether that system forces the coefficient at the outer vertex to vanish —
// with an exact rational certificate for small systems and random-prime
// modular elimination for large ones.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxcheck/matrix.hpp"
#include "coxcheck/modarith.hpp"
#include "coxcheck/numbers.hpp"
#include "coxcheck/triangle.hpp"

namespace coxcheck {

// A (possibly Laurent) monomial x^i y^j; negative exponents arise after the
// proof-frame translation.
struct Monomial {
  std::int64_t i = 0;
  std::int64_t j = 0;

  bool operator==(const Monomial&) const = default;
};

// One term coeff * d_x^p d_y^q of a constant-coefficient derivative operator.
struct DerivativeTerm {
  Rational coeff;
  std::int64_t p = 0;
  std::int64_t q = 0;

  bool operator==(const DerivativeTerm&) const = default;
};

// A finite sum of derivative terms with pairwise distinct (p, q).
class DerivativeOp {
 public:
  DerivativeOp() = default;

  // Throws std::invalid_argument on a duplicate (p, q) pair or a negative
  // derivative order.
  explicit DerivativeOp(std::vector<DerivativeTerm> terms);

  const std::vector<DerivativeTerm>& terms() const { return terms_; }

 private:
  std::vector<DerivativeTerm> terms_;
};

// Value of op applied to x^i y^j, evaluated at (1, 1):
//   sum over terms of coeff * [i]_p * [j]_q
// where [k]_l is the falling factorial k(k-1)...(k-l+1).
Rational eval_derivative_at_t0(const DerivativeOp& op, const Monomial& mono);

// D = sum_i alpha_i d_x^{n-i} d_y^i with
//   alpha_i = ([b+n-i-1]_{n-i} / [a+n-i-1]_{n-i}) * C(n, i).
// Requires n, a, b >= 1; defined even in the degenerate case a(n+1) = bn.
DerivativeOp lemma22_operator(std::int64_t n, std::int64_t a, std::int64_t b);

struct Lemma22Result {
  // D annihilates x^{-a} y^{b+j} at (1, 1) for every j = 0..n-1.
  bool annihilates = false;
  // D(x^{-(a+1)} y^{b+n+1}) at (1, 1); zero exactly when a(n+1) = bn.
  Rational s1_value;

  bool operator==(const Lemma22Result&) const = default;
};

// Evaluates the annihilator on its staircase monomials and on the monomial
// witnessing the extra vanishing order.  Requires n, a, b >= 1.
Lemma22Result verify_lemma22(std::int64_t n, std::int64_t a, std::int64_t b);

// One-variable annihilator: sum_i (-1)^i [b+n-i-1]_{n-i} C(n,i) d_y^i kills
// y^{b+j} at y = 1 for j = 0..n-1.  Requires n, b >= 1.
bool verify_lemma25(std::int64_t n, std::int64_t b);

// Alternating binomial sums kill low-degree polynomials:
//   sum_i (-1)^i p(i) C(n, i) = 0 whenever deg p < n.
// Coefficients are listed lowest degree first; trailing zeros do not raise
// the degree.  Throws std::invalid_argument when deg p >= n.
bool verify_lemma23(const std::vector<Rational>& p_coeffs, std::int64_t n);

// Applies the unique integer shear placing s2 strictly between -2 and -1;
// returns the sheared triangle and the applied shift.  Throws
// std::invalid_argument when s2 is an integer (no such shear exists).
std::pair<Triangle, BigInt> normalize_for_proof(const Triangle& t);

// After normalization and translation (left vertex abscissa at -2, right
// vertex on the x-axis), the right n columns of the m-fold triangle must
// contain exactly the staircase
//   { (W-n-1+i, j) : i, j >= 0, i + j < n }.
// Throws std::invalid_argument unless the triangle passes the criterion and
// m is a valid multiple.
bool right_columns_profile(const Triangle& t, const BigInt& m);

// The jet system of the m-fold triangle: one row per derivative d_x^p d_y^q
// with p + q <= W - 1 (ordered by p, then q), one column per lattice monomial
// (ordered lexicographically), entry [i]_p * [j]_q.  Points may be carried in
// a translated frame via the offset; the distinguished vertex column is the
// translated left vertex.
class JetSystem {
 public:
  // Throws std::invalid_argument when m is not a valid multiple or when
  // W = m * width < 2 (the system would impose no constraints), and
  // std::overflow_error when translated coordinates leave 64 bits.
  JetSystem(const Triangle& t, const BigInt& m,
            const std::pair<BigInt, BigInt>& offset = {BigInt(0), BigInt(0)});

  const Triangle& triangle() const { return triangle_; }
  const BigInt& multiple() const { return m_; }
  std::int64_t order() const { return w_; }  // W
  std::size_t rows() const {
    return static_cast<std::size_t>(w_) * (w_ + 1) / 2;
  }
  std::size_t cols() const { return points_.size(); }
  const std::vector<std::pair<std::int64_t, std::int64_t>>& points() const {
    return points_;
  }
  std::size_t vertex_index() const { return vertex_index_; }

  // Row position of the constraint d_x^p d_y^q; throws std::out_of_range
  // unless p, q >= 0 and p + q <= W - 1.
  std::size_t row_index(std::int64_t p, std::int64_t q) const;

  // Exact entries [i]_p * [j]_q across the monomial columns.
  std::vector<BigInt> exact_row(std::int64_t p, std::int64_t q) const;

  // The whole system reduced modulo a prime, entries in Montgomery form.
  ModMatrix to_mod_matrix(std::uint64_t prime) const;

 private:
  Triangle triangle_;
  BigInt m_;
  std::int64_t w_ = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> points_;
  std::size_t vertex_index_ = 0;
};

enum class OracleMode { exact, modular };

std::string to_string(OracleMode mode);

// Outcome of the vanishing oracle.  In exact mode the booleans are ground
// truth; in modular mode they hold modulo the recorded primes, which must
// agree pairwise before a verdict is issued.
struct Verdict {
  bool forced_vanishing = false;
  bool column_sums_forced = false;
  OracleMode mode = OracleMode::exact;
  std::string method;                 // certification path actually taken
  std::vector<std::uint64_t> primes;  // primes consulted, if any
  std::size_t rank = 0;               // rank of the constraint matrix
  std::size_t rank_extended = 0;      // rank with the vertex row appended
  std::int64_t m = 0;
  std::int64_t order = 0;  // W
  std::size_t rows = 0;
  std::size_t cols = 0;
  double elapsed_seconds = 0.0;

  // Deterministic field order; timing is omitted when include_timing is
  // false so that repeated runs serialize bit-identically.
  std::string to_json(bool include_timing = true) const;
};

// Decides whether the jet constraints force the vertex coefficient to vanish:
// forced_vanishing = (vertex functional lies in the row span), i.e.
// rank([M; e_vertex]) = rank(M); column_sums_forced additionally reports
// whether every column-sum functional lies in the span of the constraints
// plus the vertex row.
//
// Exact mode first attempts a rational witness (an explicit annihilator
// combination of rows equal to a nonzero multiple of the vertex functional)
// and falls back to full rational elimination; modular mode runs prime_count
// independent random primes and requires all verdicts to agree.
//
// Throws std::invalid_argument when m is invalid, W < 2, or (after
// normalization) the proof frame has a <= 0 or b <= 0 — in the latter case
// with a message asking for a larger m — and std::runtime_error when modular
// verdicts disagree.
Verdict vanishing_oracle(const Triangle& t, const BigInt& m, OracleMode mode,
                         int prime_count = 2,
                         std::uint64_t seed = kDefaultSeed);

// Direct check of the simpler n = 1 argument: after reflection, an integer
// shear, and translation of the right vertex to (W-1, 0), the derivative
// d_x^{W-2} d_y kills every lattice monomial except the left-vertex monomial
// x^{-1} y^b, on which it is nonzero.  Throws std::invalid_argument unless
// the triangle passes the criterion with n = 1 and m is a valid multiple.
bool remark26_check(const Triangle& t, const BigInt& m);

}  // namespace coxcheck
