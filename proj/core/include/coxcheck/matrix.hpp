#pragma once

// Integer, rational, and modular linear algebra: Smith normal form with
// unimodular transforms, exact determinants and kernels over the rationals,
// and mod-p rank / row-span tests used by the randomized vanishing oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxcheck/modarith.hpp"
#include "coxcheck/numbers.hpp"

namespace coxcheck {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t k);

  // Builds a matrix whose columns are the given vectors (all the same length).
  static IntMatrix from_columns(const std::vector<std::vector<BigInt>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntMatrix multiply(const IntMatrix& other) const;
  IntMatrix transposed() const;

  bool operator==(const IntMatrix& other) const = default;

  // Row-major JSON array-of-arrays, for debugging dumps.
  std::string to_json_array() const;

 private:
  std::size_t rows_, cols_;
  std::vector<BigInt> data_;
};

// Smith normal form result: U * M * V = D with U, V unimodular and D diagonal
// with nonnegative entries d_i satisfying d_i | d_{i+1}.
struct SnfResult {
  IntMatrix U, D, V;

  // The nonzero diagonal entries of D, in order.
  std::vector<BigInt> invariant_factors() const;
};

// Smith normal form via elementary row/column operations; pivots are chosen
// by minimal absolute value to bound entry growth.
SnfResult smith_normal_form(const IntMatrix& M);

// Exact determinant by fraction-free (Bareiss) elimination.  Throws
// std::invalid_argument on non-square input.
BigInt integer_determinant(const IntMatrix& M);

// Rank over the rationals.
std::size_t rank_over_q(const IntMatrix& M);

// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix from_int(const IntMatrix& M);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

// In-place reduced row echelon form; returns the rank and pivot columns.
struct RrefSummary {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};
RrefSummary rref_inplace(RatMatrix& M);

// Basis of the right null space over the rationals; empty when trivial.
std::vector<std::vector<Rational>> rational_kernel(const RatMatrix& M);

// Exact solution of M x = b, free variables set to zero; nullopt when the
// system is inconsistent.  Throws on dimension mismatch.
std::optional<std::vector<Rational>> solve_rational(
    const RatMatrix& M, const std::vector<Rational>& b);

// Dense matrix over F_p.  Entries are stored in Montgomery form; fill via
// set() / set_from_bigint().  echelonize() reduces in place to row echelon
// form with unit pivots and records the pivot columns, after which
// reduce_in_span() can test membership in the row space.
class ModMatrix {
 public:
  ModMatrix(std::uint64_t prime, std::size_t rows, std::size_t cols);

  static ModMatrix from_int(const IntMatrix& M, std::uint64_t prime);

  std::uint64_t prime() const { return mont_.modulus(); }
  const Montgomery& field() const { return mont_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // Montgomery-form accessors.
  std::uint64_t get(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, std::uint64_t mont_value) {
    data_[i * cols_ + j] = mont_value;
  }
  void set_from_bigint(std::size_t i, std::size_t j, const BigInt& v);

  std::uint64_t* row_data(std::size_t i) { return data_.data() + i * cols_; }

  // In-place elimination to row echelon form; returns the rank.  Idempotent.
  std::size_t echelonize();

  bool echelonized() const { return echelonized_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }

  // Reduces v (Montgomery form, length = cols) against the echelon rows,
  // in place.  Returns true iff the remainder is zero, i.e. v lies in the
  // row space.  Requires echelonize() to have run.
  bool reduce_in_span(std::vector<std::uint64_t>& v) const;

  // Reduces a BigInt vector mod p into Montgomery form.
  std::vector<std::uint64_t> to_mod_vector(const std::vector<BigInt>& v) const;

 private:
  Montgomery mont_;
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> data_;
  std::vector<std::size_t> pivot_cols_;
  bool echelonized_ = false;
};

// Rank of M over F_p (works on a private copy).
std::size_t rank_mod_p(const ModMatrix& M);

// True iff rank([M; v]) = rank(M) over F_p, i.e. v lies in the row span.
// v holds plain residues (not Montgomery form).  Throws on length mismatch.
bool in_row_span_mod_p(const ModMatrix& M, const std::vector<std::uint64_t>& v);

}  // namespace coxcheck
