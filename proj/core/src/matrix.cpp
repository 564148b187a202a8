#include "coxcheck/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace coxcheck {

IntMatrix IntMatrix::identity(std::size_t k) {
  IntMatrix out(k, k);
  for (std::size_t i = 0; i < k; ++i) out.at(i, i) = 1;
  return out;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<BigInt>>& cols) {
  if (cols.empty()) return IntMatrix(0, 0);
  std::size_t r = cols[0].size();
  for (const auto& c : cols) {
    if (c.size() != r) {
      throw std::invalid_argument("from_columns: ragged column lengths");
    }
  }
  IntMatrix out(r, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < r; ++i) out.at(i, j) = cols[j][i];
  }
  return out;
}

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
  if (cols_ != other.rows_) {
    throw std::invalid_argument("multiply: inner dimensions disagree");
  }
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        out.at(i, j) += a * other.at(k, j);
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

std::string IntMatrix::to_json_array() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << at(i, j).get_str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<BigInt> SnfResult::invariant_factors() const {
  std::vector<BigInt> out;
  std::size_t k = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < k; ++i) {
    if (D.at(i, i) != 0) out.push_back(D.at(i, i));
  }
  return out;
}

namespace {

// Nearest-integer quotient, which keeps remainders at most half the divisor.
BigInt rounded_quotient(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  BigInt babs = abs(b);
  if (r * 2 > babs) q += 1;
  return q;
}

void add_row_multiple(IntMatrix& M, std::size_t dst, std::size_t src,
                      const BigInt& factor) {
  for (std::size_t j = 0; j < M.cols(); ++j) {
    M.at(dst, j) += factor * M.at(src, j);
  }
}

void add_col_multiple(IntMatrix& M, std::size_t dst, std::size_t src,
                      const BigInt& factor) {
  for (std::size_t i = 0; i < M.rows(); ++i) {
    M.at(i, dst) += factor * M.at(i, src);
  }
}

void swap_rows(IntMatrix& M, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M.at(a, j), M.at(b, j));
}

void swap_cols(IntMatrix& M, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < M.rows(); ++i) std::swap(M.at(i, a), M.at(i, b));
}

// Clears row t and column t of A against the pivot A[t][t] with row/column
// operations mirrored into U and V, pulling in smaller remainders as new
// pivots until the cross is clean.  Only touches indices >= t.
void clear_cross(IntMatrix& A, IntMatrix& U, IntMatrix& V, std::size_t t) {
  for (;;) {
    bool dirty = false;
    for (std::size_t i = t + 1; i < A.rows(); ++i) {
      while (A.at(i, t) != 0) {
        BigInt q = rounded_quotient(A.at(i, t), A.at(t, t));
        if (q != 0) {
          add_row_multiple(A, i, t, -q);
          add_row_multiple(U, i, t, -q);
        }
        if (A.at(i, t) != 0) {
          swap_rows(A, i, t);
          swap_rows(U, i, t);
          dirty = true;
        }
      }
    }
    for (std::size_t j = t + 1; j < A.cols(); ++j) {
      while (A.at(t, j) != 0) {
        BigInt q = rounded_quotient(A.at(t, j), A.at(t, t));
        if (q != 0) {
          add_col_multiple(A, j, t, -q);
          add_col_multiple(V, j, t, -q);
        }
        if (A.at(t, j) != 0) {
          swap_cols(A, j, t);
          swap_cols(V, j, t);
          dirty = true;
        }
      }
    }
    if (!dirty) {
      // Column sweep may have re-dirtied the column only via pivot swaps,
      // which set dirty; a clean pass means both cross arms are zero.
      bool clean = true;
      for (std::size_t i = t + 1; i < A.rows(); ++i) {
        if (A.at(i, t) != 0) clean = false;
      }
      if (clean) return;
    }
  }
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& M) {
  IntMatrix A = M;
  IntMatrix U = IntMatrix::identity(M.rows());
  IntMatrix V = IntMatrix::identity(M.cols());
  std::size_t dim = std::min(A.rows(), A.cols());

  for (std::size_t t = 0; t < dim; ++t) {
    // Minimal-absolute-value nonzero pivot in the trailing submatrix.
    bool found = false;
    std::size_t pi = t, pj = t;
    BigInt best;
    for (std::size_t i = t; i < A.rows(); ++i) {
      for (std::size_t j = t; j < A.cols(); ++j) {
        if (A.at(i, j) == 0) continue;
        BigInt mag = abs(A.at(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    }
    if (!found) break;
    swap_rows(A, t, pi);
    swap_rows(U, t, pi);
    swap_cols(A, t, pj);
    swap_cols(V, t, pj);
    clear_cross(A, U, V, t);
  }

  // Nonnegative diagonal.
  for (std::size_t i = 0; i < dim; ++i) {
    if (A.at(i, i) < 0) {
      for (std::size_t j = 0; j < A.cols(); ++j) A.at(i, j) = -A.at(i, j);
      for (std::size_t j = 0; j < U.cols(); ++j) U.at(i, j) = -U.at(i, j);
    }
  }

  // Divisibility chain d_i | d_{i+1}: fold offending pairs back through the
  // clearing loop until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < dim; ++i) {
      const BigInt& a = A.at(i, i);
      const BigInt& b = A.at(i + 1, i + 1);
      if (a == 0 && b != 0) {
        swap_rows(A, i, i + 1);
        swap_rows(U, i, i + 1);
        swap_cols(A, i, i + 1);
        swap_cols(V, i, i + 1);
        changed = true;
        continue;
      }
      if (a != 0 && b % a != 0) {
        add_col_multiple(A, i, i + 1, 1);
        add_col_multiple(V, i, i + 1, 1);
        clear_cross(A, U, V, i);
        for (std::size_t k = i; k <= i + 1; ++k) {
          if (A.at(k, k) < 0) {
            for (std::size_t j = 0; j < A.cols(); ++j) A.at(k, j) = -A.at(k, j);
            for (std::size_t j = 0; j < U.cols(); ++j) U.at(k, j) = -U.at(k, j);
          }
        }
        changed = true;
      }
    }
  }

  return SnfResult{std::move(U), std::move(A), std::move(V)};
}

BigInt integer_determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) {
    throw std::invalid_argument("integer_determinant: matrix must be square");
  }
  std::size_t n = M.rows();
  if (n == 0) return 1;
  IntMatrix A = M;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A.at(k, k) == 0) {
      std::size_t swap = n;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (A.at(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap == n) return 0;
      swap_rows(A, k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j);
        mpz_divexact(A.at(i, j).get_mpz_t(), num.get_mpz_t(),
                     prev.get_mpz_t());
      }
      A.at(i, k) = 0;
    }
    prev = A.at(k, k);
  }
  BigInt det = A.at(n - 1, n - 1);
  return sign < 0 ? BigInt(-det) : det;
}

RatMatrix RatMatrix::from_int(const IntMatrix& M) {
  RatMatrix out(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) out.at(i, j) = M.at(i, j);
  }
  return out;
}

RrefSummary rref_inplace(RatMatrix& M) {
  RrefSummary out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < M.cols() && lead < M.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < M.rows() && M.at(piv, col) == 0) ++piv;
    if (piv == M.rows()) continue;
    if (piv != lead) {
      for (std::size_t j = col; j < M.cols(); ++j) {
        std::swap(M.at(piv, j), M.at(lead, j));
      }
    }
    Rational inv = M.at(lead, col);
    for (std::size_t j = col; j < M.cols(); ++j) M.at(lead, j) /= inv;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == lead || M.at(i, col) == 0) continue;
      Rational f = M.at(i, col);
      for (std::size_t j = col; j < M.cols(); ++j) {
        M.at(i, j) -= f * M.at(lead, j);
      }
    }
    out.pivot_cols.push_back(col);
    ++lead;
  }
  out.rank = out.pivot_cols.size();
  return out;
}

std::size_t rank_over_q(const IntMatrix& M) {
  RatMatrix R = RatMatrix::from_int(M);
  return rref_inplace(R).rank;
}

std::vector<std::vector<Rational>> rational_kernel(const RatMatrix& M) {
  RatMatrix R = M;
  RrefSummary s = rref_inplace(R);
  std::vector<bool> is_pivot(M.cols(), false);
  for (std::size_t c : s.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < M.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(M.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < s.rank; ++r) {
      v[s.pivot_cols[r]] = -R.at(r, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_rational(
    const RatMatrix& M, const std::vector<Rational>& b) {
  if (b.size() != M.rows()) {
    throw std::invalid_argument("solve_rational: rhs length mismatch");
  }
  RatMatrix aug(M.rows(), M.cols() + 1);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) aug.at(i, j) = M.at(i, j);
    aug.at(i, M.cols()) = b[i];
  }
  RrefSummary s = rref_inplace(aug);
  for (std::size_t c : s.pivot_cols) {
    if (c == M.cols()) return std::nullopt;  // pivot in the rhs column
  }
  std::vector<Rational> x(M.cols());
  for (std::size_t r = 0; r < s.rank; ++r) {
    x[s.pivot_cols[r]] = aug.at(r, M.cols());
  }
  return x;
}

ModMatrix::ModMatrix(std::uint64_t prime, std::size_t rows, std::size_t cols)
    : mont_(prime), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

ModMatrix ModMatrix::from_int(const IntMatrix& M, std::uint64_t prime) {
  ModMatrix out(prime, M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) {
      out.set_from_bigint(i, j, M.at(i, j));
    }
  }
  return out;
}

void ModMatrix::set_from_bigint(std::size_t i, std::size_t j, const BigInt& v) {
  std::uint64_t r = mpz_fdiv_ui(v.get_mpz_t(), mont_.modulus());
  data_[i * cols_ + j] = mont_.to_mont(r);
}

std::size_t ModMatrix::echelonize() {
  if (echelonized_) return pivot_cols_.size();
  // Local copy so the compiler can keep the modulus constants in registers:
  // stores through row pointers cannot alias a stack-local object.
  const Montgomery mg = mont_;
  const std::uint64_t one = mg.one();
  auto swap_rows_from = [this](std::size_t r1, std::size_t r2, std::size_t from) {
    std::swap_ranges(data_.begin() + r1 * cols_ + from,
                     data_.begin() + (r1 + 1) * cols_,
                     data_.begin() + r2 * cols_ + from);
  };
  // Panel elimination: each round selects up to two pivots and applies both to
  // every remaining row in a single pass. Pivot choice (first column with a
  // nonzero entry, topmost such row) and the row operations are exactly those
  // of one-pivot-at-a-time elimination, so the resulting echelon form is
  // identical; the fused update just halves the row traffic.
  std::size_t lead = 0;
  std::size_t col = 0;
  while (lead < rows_ && col < cols_) {
    // Pivot 1: first column at or after `col` with a nonzero entry below lead.
    std::size_t piv = rows_;
    for (; col < cols_; ++col) {
      piv = lead;
      while (piv < rows_ && data_[piv * cols_ + col] == 0) ++piv;
      if (piv < rows_) break;
    }
    if (col == cols_) break;
    const std::size_t c1 = col;
    if (piv != lead) swap_rows_from(piv, lead, c1);
    std::uint64_t* P1 = row_data(lead);
    {
      const std::uint64_t inv = mg.inv(P1[c1]);
      P1[c1] = one;
      for (std::size_t j = c1 + 1; j < cols_; ++j) P1[j] = mg.mul(P1[j], inv);
    }
    pivot_cols_.push_back(c1);
    if (lead + 1 == rows_) {
      ++lead;
      break;  // no rows left to eliminate
    }
    // Pivot 2: first column past c1 where some row below has a nonzero entry
    // *after* the still-pending P1 update (computed on the fly per candidate).
    std::size_t c2 = cols_;
    std::size_t piv2 = rows_;
    for (std::size_t c = c1 + 1; c < cols_ && c2 == cols_; ++c) {
      for (std::size_t i = lead + 1; i < rows_; ++i) {
        const std::uint64_t* R = row_data(i);
        if (mg.sub(R[c], mg.mul(R[c1], P1[c])) != 0) {
          c2 = c;
          piv2 = i;
          break;
        }
      }
    }
    if (c2 == cols_) {
      // Past c1 every column is zero once P1 is applied, so after this pending
      // update all remaining rows vanish entirely and elimination is finished.
      for (std::size_t i = lead + 1; i < rows_; ++i) {
        std::uint64_t* R = row_data(i);
        const std::uint64_t f = R[c1];
        if (f == 0) continue;
        R[c1] = 0;
        for (std::size_t j = c1 + 1; j < cols_; ++j) {
          R[j] = mg.sub(R[j], mg.mul(f, P1[j]));
        }
      }
      ++lead;
      break;
    }
    // Bring the pivot-2 row up, complete its pending P1 update, normalize it.
    if (piv2 != lead + 1) swap_rows_from(piv2, lead + 1, c1);
    std::uint64_t* P2 = row_data(lead + 1);
    {
      const std::uint64_t f = P2[c1];
      P2[c1] = 0;
      if (f != 0) {
        for (std::size_t j = c1 + 1; j < cols_; ++j) {
          P2[j] = mg.sub(P2[j], mg.mul(f, P1[j]));
        }
      }
      const std::uint64_t inv = mg.inv(P2[c2]);
      P2[c2] = one;
      for (std::size_t j = c2 + 1; j < cols_; ++j) P2[j] = mg.mul(P2[j], inv);
    }
    pivot_cols_.push_back(c2);
    // Fused rank-2 update of every remaining row. Columns strictly between c1
    // and c2 are zero after the P1 update (the pivot-2 column scan proved it),
    // so they are stored as zero directly.
    const std::uint64_t p12 = P1[c2];
    for (std::size_t i = lead + 2; i < rows_; ++i) {
      std::uint64_t* R = row_data(i);
      const std::uint64_t f1 = R[c1];
      const std::uint64_t f2 = mg.sub(R[c2], mg.mul(f1, p12));
      if (f1 == 0 && f2 == 0) continue;
      R[c1] = 0;
      for (std::size_t j = c1 + 1; j < c2; ++j) R[j] = 0;
      R[c2] = 0;
      // Unrolled by four: eight independent multiplies in flight per block.
      std::size_t j = c2 + 1;
      for (; j + 4 <= cols_; j += 4) {
        const std::uint64_t r0 = mg.sub(R[j], mg.add(mg.mul(f1, P1[j]), mg.mul(f2, P2[j])));
        const std::uint64_t r1 =
            mg.sub(R[j + 1], mg.add(mg.mul(f1, P1[j + 1]), mg.mul(f2, P2[j + 1])));
        const std::uint64_t r2 =
            mg.sub(R[j + 2], mg.add(mg.mul(f1, P1[j + 2]), mg.mul(f2, P2[j + 2])));
        const std::uint64_t r3 =
            mg.sub(R[j + 3], mg.add(mg.mul(f1, P1[j + 3]), mg.mul(f2, P2[j + 3])));
        R[j] = r0;
        R[j + 1] = r1;
        R[j + 2] = r2;
        R[j + 3] = r3;
      }
      for (; j < cols_; ++j) {
        R[j] = mg.sub(R[j], mg.add(mg.mul(f1, P1[j]), mg.mul(f2, P2[j])));
      }
    }
    lead += 2;
    col = c2 + 1;
  }
  echelonized_ = true;
  return pivot_cols_.size();
}

bool ModMatrix::reduce_in_span(std::vector<std::uint64_t>& v) const {
  if (!echelonized_) {
    throw std::logic_error("reduce_in_span: echelonize() must run first");
  }
  if (v.size() != cols_) {
    throw std::invalid_argument("reduce_in_span: length mismatch");
  }
  for (std::size_t r = 0; r < pivot_cols_.size(); ++r) {
    std::size_t c = pivot_cols_[r];
    std::uint64_t f = v[c];
    if (f == 0) continue;
    const std::uint64_t* prow = data_.data() + r * cols_;
    v[c] = 0;
    for (std::size_t j = c + 1; j < cols_; ++j) {
      v[j] = mont_.sub(v[j], mont_.mul(f, prow[j]));
    }
  }
  for (std::uint64_t x : v) {
    if (x != 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> ModMatrix::to_mod_vector(
    const std::vector<BigInt>& v) const {
  std::vector<std::uint64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = mont_.to_mont(mpz_fdiv_ui(v[i].get_mpz_t(), mont_.modulus()));
  }
  return out;
}

std::size_t rank_mod_p(const ModMatrix& M) {
  ModMatrix copy = M;
  return copy.echelonize();
}

bool in_row_span_mod_p(const ModMatrix& M,
                       const std::vector<std::uint64_t>& v) {
  if (v.size() != M.cols()) {
    throw std::invalid_argument("in_row_span_mod_p: length mismatch");
  }
  ModMatrix copy = M;
  copy.echelonize();
  std::vector<std::uint64_t> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = M.field().to_mont(v[i] % M.prime());
  }
  return copy.reduce_in_span(w);
}

}  // namespace coxcheck
