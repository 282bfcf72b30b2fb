#include "lcslab/geometry/manifold.hpp"

#include <utility>

namespace lcs {

Geometry::Geometry(Manifold m, Exec exec) : m_(std::move(m)) {
  g_ = metric_tensor(m_.metric);
  brackets_ = structure_constants(m_.frame, exec);
  conn_ = koszul(m_.frame, m_.metric, brackets_, exec);
  stack_ = curvature_stack(m_.frame, m_.metric, conn_, brackets_, exec);
  nabla_r_ = lcs::nabla_riemann(m_.frame, conn_, stack_.riemann13, exec);
  nabla_s_ = cov_deriv_tensor(m_.frame, conn_, stack_.ricci, exec);
}

bool Geometry::is_constant(const Expr& f) const {
  if (f.is_constant()) return true;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!derivative(i, f).is_zero()) return false;
  }
  return true;
}

}  // namespace lcs
