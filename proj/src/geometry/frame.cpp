#include "lcslab/geometry/frame.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "lcslab/error.hpp"
#include "lcslab/symexpr/parser.hpp"

namespace lcs {

Chart::Chart(std::vector<std::string> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error("chart needs at least one coordinate");
  if (coords_.size() > kMaxVars) throw Error("chart has too many coordinates");
  std::set<std::string> seen;
  for (const auto& c : coords_) {
    if (!is_valid_var_name(c)) throw Error("invalid coordinate name '" + c + "'");
    if (!seen.insert(c).second) throw Error("duplicate coordinate name '" + c + "'");
  }
}

std::size_t Chart::index_of(const std::string& name) const {
  auto it = std::find(coords_.begin(), coords_.end(), name);
  if (it == coords_.end()) throw Error("unknown coordinate '" + name + "'");
  return static_cast<std::size_t>(it - coords_.begin());
}

std::vector<mpq_class> Chart::uniform_point(const mpq_class& value) const {
  return std::vector<mpq_class>(coords_.size(), value);
}

bool VectorField::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Expr& e) { return e.is_zero(); });
}

Expr apply(const VectorField& x, const Expr& f) {
  Expr acc;
  if (f.is_constant()) return acc;
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i].is_zero()) continue;
    const Expr d = f.diff(i);
    if (!d.is_zero()) acc += x.coeffs[i] * d;
  }
  return acc;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  if (x.dim() != y.dim()) throw Error("vector fields live on different charts");
  VectorField out;
  out.coeffs.reserve(x.dim());
  for (std::size_t k = 0; k < x.dim(); ++k) out.coeffs.push_back(apply(x, y.coeffs[k]) - apply(y, x.coeffs[k]));
  return out;
}

Frame::Frame(std::vector<VectorField> fields) : fields_(std::move(fields)) {
  const std::size_t n = fields_.size();
  matrix_ = ExprMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (fields_[i].dim() != n) throw Error("frame field has the wrong number of components");
    for (std::size_t k = 0; k < n; ++k) matrix_(k, i) = fields_[i].coeffs[k];
  }
  inverse_ = inverse(matrix_);
}

std::vector<Expr> Frame::components_of(const VectorField& x) const {
  const std::size_t n = dim();
  std::vector<Expr> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!inverse_(i, k).is_zero() && !x.coeffs[k].is_zero()) c[i] += inverse_(i, k) * x.coeffs[k];
    }
  }
  return c;
}

VectorField Frame::recompose(std::span<const Expr> c) const {
  const std::size_t n = dim();
  VectorField v{std::vector<Expr>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (!fields_[i].coeffs[k].is_zero()) v.coeffs[k] += c[i] * fields_[i].coeffs[k];
    }
  }
  return v;
}

std::vector<Expr> decompose(const VectorField& x, const Frame& frame) {
  return solve_square(frame.matrix(), x.coeffs);
}

ExprMatrix inverse_metric(const ExprMatrix& g) {
  try {
    return inverse(g);
  } catch (const SingularMatrix&) {
    throw DegenerateMetric("metric is degenerate (determinant vanishes identically)");
  }
}

Inertia signature_at(const ExprMatrix& g, std::span<const mpq_class> point) {
  std::vector<std::vector<mpq_class>> values(g.rows(), std::vector<mpq_class>(g.cols()));
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) values[r][c] = g(r, c).eval_at(point);
  }
  return inertia(std::move(values));
}

FrameMetric::FrameMetric(ExprMatrix g, std::span<const mpq_class> sample) : g_(std::move(g)) {
  if (g_.rows() != g_.cols()) throw DegenerateMetric("metric matrix is not square");
  if (!g_.is_symmetric()) throw DegenerateMetric("metric matrix is not symmetric");
  inverse_ = inverse_metric(g_);
  try {
    signature_ = signature_at(g_, sample);
  } catch (const PoleError&) {
    throw DegenerateMetric("metric has a pole at the signature sample point");
  }
  if (signature_.zero != 0) throw DegenerateMetric("metric is degenerate at the signature sample point");
  if (signature_.negative != 1) {
    throw DegenerateMetric("metric is not Lorentzian (-,+,...,+) at the sample point: " +
                           std::to_string(signature_.negative) + " negative direction(s)");
  }
}

Expr metric_pair(const FrameMetric& g, std::span<const Expr> u, std::span<const Expr> v) {
  const std::size_t n = g.dim();
  if (u.size() != n || v.size() != n) throw Error("component list length mismatch");
  Expr acc;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero() || g(i, j).is_zero()) continue;
      acc += u[i] * g(i, j) * v[j];
    }
  }
  return acc;
}

std::vector<Expr> basis_vector(std::size_t n, std::size_t i) {
  std::vector<Expr> e(n);
  e[i] = Expr(1);
  return e;
}

}  // namespace lcs
