#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lcslab/geometry/linalg.hpp"
#include "lcslab/symexpr/expr.hpp"

namespace lcs {

/// A single coordinate chart. Coordinate i is Expr variable i.
class Chart {
 public:
  explicit Chart(std::vector<std::string> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  const std::vector<std::string>& coords() const noexcept { return coords_; }
  Expr coordinate(std::size_t i) const { return Expr::variable(i); }
  /// Index of a coordinate by name; throws when absent.
  std::size_t index_of(const std::string& name) const;
  /// Every coordinate set to `value` (the default signature sample point).
  std::vector<mpq_class> uniform_point(const mpq_class& value) const;

  bool operator==(const Chart&) const = default;

 private:
  std::vector<std::string> coords_;
};

/// Vector field by its components in the coordinate basis d/dx_i.
struct VectorField {
  std::vector<Expr> coeffs;

  std::size_t dim() const noexcept { return coeffs.size(); }
  bool is_zero() const;
  bool operator==(const VectorField&) const = default;
};

/// Directional derivative X(f) = sum_i X^i df/dx_i.
Expr apply(const VectorField& x, const Expr& f);

/// Coordinate components of [X, Y].
VectorField lie_bracket(const VectorField& x, const VectorField& y);

/// A global frame E_1..E_n given in the coordinate basis.
class Frame {
 public:
  /// Throws SingularMatrix unless the fields are linearly independent over
  /// the function field.
  explicit Frame(std::vector<VectorField> fields);

  std::size_t dim() const noexcept { return fields_.size(); }
  const VectorField& operator[](std::size_t i) const { return fields_[i]; }
  const std::vector<VectorField>& fields() const noexcept { return fields_; }
  /// Column i holds the coordinate components of E_i.
  const ExprMatrix& matrix() const noexcept { return matrix_; }
  /// Maps coordinate components to frame components.
  const ExprMatrix& inverse_matrix() const noexcept { return inverse_; }

  /// Frame components of a coordinate-basis field, via the cached inverse.
  std::vector<Expr> components_of(const VectorField& x) const;
  /// Coordinate components of sum_i c_i E_i.
  VectorField recompose(std::span<const Expr> c) const;

 private:
  std::vector<VectorField> fields_;
  ExprMatrix matrix_;
  ExprMatrix inverse_;
};

/// Frame components c with sum c_i E_i = X, solved by elimination.
/// Throws SingularMatrix for a dependent frame.
std::vector<Expr> decompose(const VectorField& x, const Frame& frame);

/// g(E_i, E_j) with a Lorentzian signature check at a rational point.
class FrameMetric {
 public:
  /// Throws DegenerateMetric when g is not symmetric, is singular in the
  /// function field, or does not have signature (-,+,...,+) at `sample`.
  FrameMetric(ExprMatrix g, std::span<const mpq_class> sample);

  std::size_t dim() const noexcept { return g_.rows(); }
  const ExprMatrix& matrix() const noexcept { return g_; }
  const Expr& operator()(std::size_t i, std::size_t j) const { return g_(i, j); }
  const ExprMatrix& inverse() const noexcept { return inverse_; }
  const Inertia& signature() const noexcept { return signature_; }

 private:
  ExprMatrix g_;
  ExprMatrix inverse_;
  Inertia signature_;
};

/// u^T g v for frame component lists.
Expr metric_pair(const FrameMetric& g, std::span<const Expr> u, std::span<const Expr> v);

/// Exact inverse; throws DegenerateMetric when det g vanishes identically.
ExprMatrix inverse_metric(const ExprMatrix& g);

/// Signature of a symmetric Expr matrix at a rational point.
Inertia signature_at(const ExprMatrix& g, std::span<const mpq_class> point);

/// Unit vector e_i of length n, in frame components.
std::vector<Expr> basis_vector(std::size_t n, std::size_t i);

}  // namespace lcs
