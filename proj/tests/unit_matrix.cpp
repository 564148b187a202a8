#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <stdexcept>

#include "coxcheck/matrix.hpp"
#include "coxcheck/modarith.hpp"

using namespace coxcheck;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                        std::size_t cols, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  IntMatrix M(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) M.at(i, j) = dist(rng);
  }
  return M;
}

bool is_diagonal_with_divisibility(const IntMatrix& D) {
  for (std::size_t i = 0; i < D.rows(); ++i) {
    for (std::size_t j = 0; j < D.cols(); ++j) {
      if (i != j && D.at(i, j) != 0) return false;
    }
  }
  std::size_t k = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const BigInt& a = D.at(i, i);
    const BigInt& b = D.at(i + 1, i + 1);
    if (a < 0 || b < 0) return false;
    if (a == 0 && b != 0) return false;  // zeros must come last
    if (a != 0 && BigInt(b % a) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("identity and multiplication") {
  IntMatrix I = IntMatrix::identity(3);
  std::mt19937_64 rng(5);
  IntMatrix M = random_matrix(rng, 3, 3, -9, 9);
  CHECK(M.multiply(I) == M);
  CHECK(I.multiply(M) == M);

  IntMatrix A(2, 3), B(3, 2);
  int v = 1;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) A.at(i, j) = v++;
  v = 1;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) B.at(i, j) = v++;
  IntMatrix C = A.multiply(B);
  CHECK(C.at(0, 0) == 22);
  CHECK(C.at(0, 1) == 28);
  CHECK(C.at(1, 0) == 49);
  CHECK(C.at(1, 1) == 64);
}

TEST_CASE("transpose round trip") {
  std::mt19937_64 rng(6);
  IntMatrix M = random_matrix(rng, 4, 7, -20, 20);
  CHECK(M.transposed().transposed() == M);
  CHECK(M.transposed().rows() == 7);
}

TEST_CASE("from_columns lays out vectors as columns") {
  IntMatrix M = IntMatrix::from_columns({{BigInt(1), BigInt(2)},
                                         {BigInt(3), BigInt(4)}});
  CHECK(M.rows() == 2);
  CHECK(M.cols() == 2);
  CHECK(M.at(0, 0) == 1);
  CHECK(M.at(1, 0) == 2);
  CHECK(M.at(0, 1) == 3);
  CHECK(M.at(1, 1) == 4);
}

TEST_CASE("determinants of known matrices") {
  IntMatrix M(2, 2);
  M.at(0, 0) = 1;
  M.at(0, 1) = 2;
  M.at(1, 0) = 3;
  M.at(1, 1) = 4;
  CHECK(integer_determinant(M) == -2);
  CHECK(integer_determinant(IntMatrix::identity(5)) == 1);
  IntMatrix Z(3, 3);
  CHECK(integer_determinant(Z) == 0);
  CHECK_THROWS_AS(integer_determinant(IntMatrix(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("determinant matches cofactor expansion on random 3x3") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix M = random_matrix(rng, 3, 3, -15, 15);
    BigInt cofactor =
        M.at(0, 0) * (M.at(1, 1) * M.at(2, 2) - M.at(1, 2) * M.at(2, 1)) -
        M.at(0, 1) * (M.at(1, 0) * M.at(2, 2) - M.at(1, 2) * M.at(2, 0)) +
        M.at(0, 2) * (M.at(1, 0) * M.at(2, 1) - M.at(1, 1) * M.at(2, 0));
    CHECK(integer_determinant(M) == cofactor);
  }
}

TEST_CASE("smith normal form on known matrices") {
  IntMatrix M(2, 2);
  M.at(0, 0) = 2;
  M.at(1, 1) = 4;
  auto snf = smith_normal_form(M);
  REQUIRE(snf.invariant_factors().size() == 2);
  CHECK(snf.invariant_factors()[0] == 2);
  CHECK(snf.invariant_factors()[1] == 4);

  IntMatrix swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  auto snf2 = smith_normal_form(swap);
  CHECK(snf2.invariant_factors() == std::vector<BigInt>{BigInt(1), BigInt(1)});

  // 2x2 with entries (2,4;6,8): det -8, gcd 2 -> factors (2, 4).
  IntMatrix M3(2, 2);
  M3.at(0, 0) = 2;
  M3.at(0, 1) = 4;
  M3.at(1, 0) = 6;
  M3.at(1, 1) = 8;
  auto snf3 = smith_normal_form(M3);
  CHECK(snf3.invariant_factors() == std::vector<BigInt>{BigInt(2), BigInt(4)});
}

TEST_CASE("smith normal form fuzz: transforms, shape, determinant") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    IntMatrix M = random_matrix(rng, r, c, -50, 50);
    auto snf = smith_normal_form(M);
    CHECK(is_diagonal_with_divisibility(snf.D));
    CHECK(snf.U.multiply(M).multiply(snf.V) == snf.D);
    BigInt du = integer_determinant(snf.U);
    BigInt dv = integer_determinant(snf.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (const BigInt& f : snf.invariant_factors()) CHECK(f > 0);
    if (r == c) {
      BigInt dm = integer_determinant(M);
      BigInt dd = integer_determinant(snf.D);
      CHECK(abs(dm) == abs(dd));
    }
    CHECK(snf.invariant_factors().size() == rank_over_q(M));
  }
}

TEST_CASE("rational rank against modular rank") {
  std::mt19937_64 rng(17);
  Montgomery field((1ULL << 61) - 1);
  int agree = 0;
  const int trials = 500;
  for (int trial = 0; trial < trials; ++trial) {
    IntMatrix M = random_matrix(rng, 20, 20, -100, 100);
    std::size_t rq = rank_over_q(M);
    ModMatrix Mp = ModMatrix::from_int(M, field.modulus());
    std::size_t rp = rank_mod_p(Mp);
    CHECK(rp <= rq);  // rank can only drop modulo p
    if (rp == rq) ++agree;
  }
  CHECK(agree >= trials - 5);  // a large prime almost never loses rank
}

TEST_CASE("modular rank on low-rank products hits every rank") {
  // M = A * B with A (n x r), B (r x n) has rank exactly r for generic
  // entries; sweeping r over 0..n exercises rank-deficient elimination,
  // including the paths where a second pivot column does not exist.
  std::mt19937_64 rng(31);
  Montgomery field((1ULL << 61) - 1);
  for (int trial = 0; trial < 40; ++trial) {
    for (std::size_t r = 0; r <= 12; ++r) {
      IntMatrix A = random_matrix(rng, 12, r, -9, 9);
      IntMatrix B = random_matrix(rng, r, 12, -9, 9);
      IntMatrix M = A.multiply(B);
      std::size_t rq = rank_over_q(M);
      CHECK(rq <= r);
      ModMatrix Mp = ModMatrix::from_int(M, field.modulus());
      CHECK(rank_mod_p(Mp) == rq);  // entries are far below the prime
    }
  }
}

TEST_CASE("reduced row echelon form properties") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix M = random_matrix(rng, 6, 9, -30, 30);
    RatMatrix R = RatMatrix::from_int(M);
    auto summary = rref_inplace(R);
    CHECK(summary.rank == rank_over_q(M));
    CHECK(summary.pivot_cols.size() == summary.rank);
    for (std::size_t k = 0; k < summary.rank; ++k) {
      std::size_t col = summary.pivot_cols[k];
      CHECK(R.at(k, col) == Rational(1));
      for (std::size_t i = 0; i < R.rows(); ++i) {
        if (i != k) CHECK(R.at(i, col) == Rational(0));
      }
    }
  }
}

TEST_CASE("rational kernel vectors are annihilated") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix M = random_matrix(rng, 4, 7, -10, 10);
    RatMatrix R = RatMatrix::from_int(M);
    auto kernel = rational_kernel(R);
    CHECK(kernel.size() == 7 - rank_over_q(M));
    for (const auto& k : kernel) {
      for (std::size_t i = 0; i < 4; ++i) {
        Rational dot(0);
        for (std::size_t j = 0; j < 7; ++j) {
          dot += Rational(M.at(i, j)) * k[j];
        }
        CHECK(dot == Rational(0));
      }
    }
  }
}

TEST_CASE("rational solve finds witnesses and detects inconsistency") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::int64_t> dist(-8, 8);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix M = random_matrix(rng, 5, 4, -10, 10);
    RatMatrix R = RatMatrix::from_int(M);
    // A consistent right-hand side: M times a random vector.
    std::vector<Rational> x0(4), b(5, Rational(0));
    for (auto& x : x0) x = Rational(dist(rng));
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        b[i] += Rational(M.at(i, j)) * x0[j];
      }
    }
    auto sol = solve_rational(R, b);
    REQUIRE(sol.has_value());
    for (std::size_t i = 0; i < 5; ++i) {
      Rational dot(0);
      for (std::size_t j = 0; j < 4; ++j) {
        dot += Rational(M.at(i, j)) * (*sol)[j];
      }
      CHECK(dot == b[i]);
    }
  }

  // x = 1 and x = 2 simultaneously is inconsistent.
  RatMatrix bad(2, 1);
  bad.at(0, 0) = 1;
  bad.at(1, 0) = 1;
  CHECK_FALSE(solve_rational(bad, {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("modular span membership") {
  std::uint64_t p = (1ULL << 61) - 1;
  std::mt19937_64 rng(37);
  IntMatrix M = random_matrix(rng, 4, 6, -50, 50);
  ModMatrix Mp = ModMatrix::from_int(M, p);

  // Each row of M lies in the span; a random extra coordinate vector
  // usually does not (rank 4 < 6).
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<std::uint64_t> row(6);
    for (std::size_t j = 0; j < 6; ++j) {
      BigInt r = M.at(i, j) % p;
      if (r < 0) r += p;
      row[j] = r.get_ui();
    }
    CHECK(in_row_span_mod_p(Mp, row));
  }

  // The sum of two rows is also in the span.
  std::vector<std::uint64_t> combo(6);
  for (std::size_t j = 0; j < 6; ++j) {
    BigInt r = (M.at(0, j) + M.at(1, j)) % p;
    if (r < 0) r += p;
    combo[j] = r.get_ui();
  }
  CHECK(in_row_span_mod_p(Mp, combo));

  CHECK_THROWS_AS(in_row_span_mod_p(Mp, std::vector<std::uint64_t>(5)),
                  std::invalid_argument);
}

TEST_CASE("echelonize is idempotent and reduce_in_span consumes echelon rows") {
  std::uint64_t p = (1ULL << 61) - 1;
  std::mt19937_64 rng(41);
  IntMatrix M = random_matrix(rng, 5, 8, -30, 30);
  ModMatrix Mp = ModMatrix::from_int(M, p);
  std::size_t rank1 = Mp.echelonize();
  std::size_t rank2 = Mp.echelonize();
  CHECK(rank1 == rank2);
  CHECK(Mp.echelonized());
  CHECK(Mp.pivot_cols().size() == rank1);

  // Every original row reduces to zero against the echelon form.
  ModMatrix fresh = ModMatrix::from_int(M, p);
  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<std::uint64_t> row(fresh.row_data(i), fresh.row_data(i) + 8);
    CHECK(Mp.reduce_in_span(row));
  }
}

TEST_CASE("modular rank equals rational rank on structured input") {
  // A rank-deficient construction: third row is the sum of the first two.
  IntMatrix M(3, 4);
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<std::int64_t> dist(-9, 9);
  for (std::size_t j = 0; j < 4; ++j) {
    M.at(0, j) = dist(rng);
    M.at(1, j) = dist(rng);
    M.at(2, j) = M.at(0, j) + M.at(1, j);
  }
  CHECK(rank_over_q(M) <= 2);
  ModMatrix Mp = ModMatrix::from_int(M, (1ULL << 61) - 1);
  CHECK(rank_mod_p(Mp) == rank_over_q(M));
}
