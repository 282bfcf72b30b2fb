#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "lcslab/symexpr/expr.hpp"

namespace lcs {

/// Dense row-major matrix over the rational function field.
class ExprMatrix {
 public:
  ExprMatrix() = default;
  ExprMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ExprMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Expr& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Expr& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ExprMatrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;
  friend ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b);
  bool operator==(const ExprMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Expr> data_;
};

/// Index of the pivot row among rows [from, rows) of column `col`: the
/// nonzero entry of smallest canonical size, first such row on ties.
std::optional<std::size_t> choose_pivot(const ExprMatrix& m, std::size_t col, std::size_t from);

/// Result of solving a possibly over- or under-determined system A x = b.
struct LinearSolution {
  /// Present iff the system is consistent. Free unknowns are set to 0.
  std::optional<std::vector<Expr>> values;
  /// Original index of the first equation that reduces to 0 = c with c != 0.
  std::optional<std::size_t> inconsistent_row;
  std::size_t rank = 0;
};

/// Gaussian elimination over the function field (Gauss-Jordan, pivot rule
/// of `choose_pivot`).
LinearSolution solve_system(const ExprMatrix& a, const std::vector<Expr>& b);

/// Unique solution of a square system; throws SingularMatrix.
std::vector<Expr> solve_square(const ExprMatrix& a, const std::vector<Expr>& b);
/// Throws SingularMatrix.
ExprMatrix inverse(const ExprMatrix& a);
Expr determinant(const ExprMatrix& a);

/// Sylvester inertia (positive, negative, zero counts) of a symmetric
/// rational matrix, via exact symmetric congruence reduction.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  bool operator==(const Inertia&) const = default;
};
Inertia inertia(std::vector<std::vector<mpq_class>> sym);

}  // namespace lcs
