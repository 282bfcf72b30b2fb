#include "lcslab/geometry/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "lcslab/error.hpp"

namespace lcs {

ExprMatrix ExprMatrix::identity(std::size_t n) {
  ExprMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Expr(1);
  return m;
}

ExprMatrix ExprMatrix::transpose() const {
  ExprMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool ExprMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

bool ExprMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Expr& e) { return e.is_zero(); });
}

ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix shape mismatch");
  ExprMatrix m(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Expr acc;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (!a(r, k).is_zero() && !b(k, c).is_zero()) acc += a(r, k) * b(k, c);
      }
      m(r, c) = std::move(acc);
    }
  }
  return m;
}

std::optional<std::size_t> choose_pivot(const ExprMatrix& m, std::size_t col, std::size_t from) {
  std::optional<std::size_t> best;
  for (std::size_t r = from; r < m.rows(); ++r) {
    const Expr& e = m(r, col);
    if (e.is_zero()) continue;
    if (!best || e.size() < m(*best, col).size()) best = r;
  }
  return best;
}

namespace {

void swap_rows(ExprMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

LinearSolution solve_system(const ExprMatrix& a, const std::vector<Expr>& b) {
  if (b.size() != a.rows()) throw Error("right-hand side length mismatch");
  const std::size_t rows = a.rows(), cols = a.cols();
  ExprMatrix m(rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = a(r, c);
    m(r, cols) = b[r];
  }
  std::vector<std::size_t> origin(rows);
  std::iota(origin.begin(), origin.end(), 0);

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    const auto p = choose_pivot(m, col, row);
    if (!p) continue;
    swap_rows(m, *p, row);
    std::swap(origin[*p], origin[row]);
    const Expr inv = m(row, col).inverse();
    for (std::size_t c = col; c <= cols; ++c) {
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Expr f = m(r, col);
      for (std::size_t c = col; c <= cols; ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }

  LinearSolution out;
  out.rank = pivot_cols.size();
  for (std::size_t r = row; r < rows; ++r) {
    if (!m(r, cols).is_zero()) {
      if (!out.inconsistent_row || origin[r] < *out.inconsistent_row) out.inconsistent_row = origin[r];
    }
  }
  if (out.inconsistent_row) return out;
  std::vector<Expr> x(cols);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = m(i, cols);
  out.values = std::move(x);
  return out;
}

std::vector<Expr> solve_square(const ExprMatrix& a, const std::vector<Expr>& b) {
  if (a.rows() != a.cols()) throw Error("matrix is not square");
  LinearSolution s = solve_system(a, b);
  if (s.rank < a.rows()) throw SingularMatrix("matrix is singular over the function field");
  return std::move(*s.values);
}

ExprMatrix inverse(const ExprMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw Error("matrix is not square");
  ExprMatrix m(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = a(r, c);
    m(r, n + r) = Expr(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    const auto p = choose_pivot(m, col, col);
    if (!p) throw SingularMatrix("matrix is singular over the function field");
    swap_rows(m, *p, col);
    const Expr inv = m(col, col).inverse();
    for (std::size_t c = col; c < 2 * n; ++c) {
      if (!m(col, c).is_zero()) m(col, c) *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      const Expr f = m(r, col);
      for (std::size_t c = col; c < 2 * n; ++c) {
        if (!m(col, c).is_zero()) m(r, c) -= f * m(col, c);
      }
    }
  }
  ExprMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = m(r, n + c);
  }
  return out;
}

Expr determinant(const ExprMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw Error("matrix is not square");
  ExprMatrix m = a;
  Expr det(1);
  for (std::size_t col = 0; col < n; ++col) {
    const auto p = choose_pivot(m, col, col);
    if (!p) return Expr();
    if (*p != col) {
      swap_rows(m, *p, col);
      det = -det;
    }
    const Expr& pivot = m(col, col);
    det *= pivot;
    const Expr inv = pivot.inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Expr f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) {
        if (!m(col, c).is_zero()) m(r, c) -= f * m(col, c);
      }
    }
  }
  return det;
}

Inertia inertia(std::vector<std::vector<mpq_class>> a) {
  const std::size_t n = a.size();
  Inertia out;
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<std::size_t> diag;
    for (std::size_t i = k; i < n && !diag; ++i) {
      if (a[i][i] != 0) diag = i;
    }
    if (!diag) {
      // All remaining diagonal entries vanish: fold a nonzero off-diagonal
      // entry onto the diagonal with a congruence (row_i += row_j, col_i += col_j).
      for (std::size_t i = k; i < n && !diag; ++i) {
        for (std::size_t j = i + 1; j < n && !diag; ++j) {
          if (a[i][j] == 0) continue;
          for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
          for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
          diag = i;
        }
      }
    }
    if (!diag) {
      out.zero += n - k;
      break;
    }
    swap_index(*diag, k);
    const mpq_class d = a[k][k];
    (d > 0 ? out.positive : out.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const mpq_class f = a[i][k] / d;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (std::size_t j = k + 1; j < n; ++j) a[k][j] = 0;
    for (std::size_t i = k + 1; i < n; ++i) a[i][k] = 0;
  }
  return out;
}

}  // namespace lcs
