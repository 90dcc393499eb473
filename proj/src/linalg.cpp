#include "nullcert/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace nullcert {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<Rational> matrix_vector_product(const RationalMatrix& a,
                                            const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != a.cols)
    throw ContractError("matrix-vector product: size mismatch");
  std::vector<Rational> y(a.rows, Rational(0));
  for (int i = 0; i < a.rows; ++i) {
    Rational acc(0);
    for (int j = 0; j < a.cols; ++j) acc += a.at(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

namespace {

// Fraction-free (Bareiss) echelon form. Rows are pre-scaled to integers, so
// every entry along the way is a minor of the scaled matrix and the division
// by the previous pivot is exact. Pivot choice: among candidate rows, the
// entry of largest bit length wins, ties to the lowest row index.
struct Echelon {
  std::vector<std::vector<Integer>> m;  // scaled-integral rows, reduced in place
  std::vector<int> pivot_cols;          // strictly increasing
};

std::size_t bit_length(const Integer& z) {
  if (z == 0) return 0;
  return mpz_sizeinbase(z.get_mpz_t(), 2);
}

// Clears denominators row by row; extra trailing entries (an augmented
// column) take part in the scaling but are handled by the caller.
std::vector<std::vector<Integer>> scale_rows_integral(
    const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::vector<Integer>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    Integer lcm_den(1);
    for (const auto& v : row) {
      Integer l;
      mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den().get_mpz_t());
      lcm_den = l;
    }
    std::vector<Integer> scaled;
    scaled.reserve(row.size());
    for (const auto& v : row) scaled.push_back(Integer(v.get_num() * (lcm_den / v.get_den())));
    out.push_back(std::move(scaled));
  }
  return out;
}

// Eliminates over the first `elim_cols` columns; any further columns ride
// along (augmented right-hand sides).
Echelon bareiss_echelon(std::vector<std::vector<Integer>> m, int elim_cols) {
  Echelon e;
  const int nrows = static_cast<int>(m.size());
  const int ncols = nrows == 0 ? 0 : static_cast<int>(m[0].size());
  Integer prev_pivot(1);
  int next_row = 0;
  for (int col = 0; col < elim_cols && next_row < nrows; ++col) {
    int pivot_row = -1;
    std::size_t best_bits = 0;
    for (int r = next_row; r < nrows; ++r) {
      if (m[r][col] == 0) continue;
      const std::size_t bits = bit_length(m[r][col]);
      if (pivot_row == -1 || bits > best_bits) {
        pivot_row = r;
        best_bits = bits;
      }
    }
    if (pivot_row == -1) continue;
    std::swap(m[next_row], m[pivot_row]);
    const Integer pivot = m[next_row][col];
    for (int r = next_row + 1; r < nrows; ++r) {
      const Integer factor = m[r][col];
      for (int c = col + 1; c < ncols; ++c) {
        Integer t = pivot * m[r][c] - factor * m[next_row][c];
        assert(mpz_divisible_p(t.get_mpz_t(), prev_pivot.get_mpz_t()));
        mpz_divexact(m[r][c].get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      m[r][col] = 0;
    }
    prev_pivot = pivot;
    e.pivot_cols.push_back(col);
    ++next_row;
  }
  e.m = std::move(m);
  return e;
}

std::vector<std::vector<Rational>> matrix_rows(const RationalMatrix& a, bool augment,
                                               const std::vector<Rational>& b) {
  std::vector<std::vector<Rational>> rows(a.rows);
  for (int i = 0; i < a.rows; ++i) {
    rows[i].reserve(a.cols + (augment ? 1 : 0));
    for (int j = 0; j < a.cols; ++j) rows[i].push_back(a.at(i, j));
    if (augment) rows[i].push_back(b[i]);
  }
  return rows;
}

}  // namespace

std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& a,
                                                 const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows)
    throw ContractError("solve_exact: right-hand side length does not match row count");
  const auto ech = bareiss_echelon(scale_rows_integral(matrix_rows(a, true, b)), a.cols);
  const int rank = static_cast<int>(ech.pivot_cols.size());
  // A row that is zero on the coefficient side but not on the augmented
  // column certifies inconsistency.
  for (int r = rank; r < a.rows; ++r) {
    if (ech.m[r][a.cols] != 0) return std::nullopt;
  }
  std::vector<Rational> x(a.cols, Rational(0));
  for (int i = rank - 1; i >= 0; --i) {
    const int pc = ech.pivot_cols[i];
    Rational acc(ech.m[i][a.cols]);
    for (int j = pc + 1; j < a.cols; ++j) {
      if (ech.m[i][j] != 0 && x[j] != 0) acc -= Rational(ech.m[i][j]) * x[j];
    }
    x[pc] = acc / Rational(ech.m[i][pc]);
  }
  return x;
}

int rank_exact(const RationalMatrix& a) {
  if (a.rows == 0 || a.cols == 0) return 0;
  const auto ech =
      bareiss_echelon(scale_rows_integral(matrix_rows(a, false, {})), a.cols);
  return static_cast<int>(ech.pivot_cols.size());
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& a) {
  if (a.cols == 0) return {};
  if (a.rows == 0) {
    std::vector<std::vector<Rational>> basis;
    for (int j = 0; j < a.cols; ++j) {
      std::vector<Rational> v(a.cols, Rational(0));
      v[j] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  const auto ech = bareiss_echelon(scale_rows_integral(matrix_rows(a, false, {})), a.cols);
  const int rank = static_cast<int>(ech.pivot_cols.size());
  std::vector<bool> is_pivot(a.cols, false);
  for (int pc : ech.pivot_cols) is_pivot[pc] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free_col = 0; free_col < a.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(a.cols, Rational(0));
    v[free_col] = 1;
    for (int i = rank - 1; i >= 0; --i) {
      const int pc = ech.pivot_cols[i];
      if (pc > free_col) continue;
      Rational acc(0);
      for (int j = pc + 1; j < a.cols; ++j) {
        if (ech.m[i][j] != 0 && v[j] != 0) acc -= Rational(ech.m[i][j]) * v[j];
      }
      v[pc] = acc / Rational(ech.m[i][pc]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace nullcert
