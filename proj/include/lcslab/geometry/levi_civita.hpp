#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lcslab/exec.hpp"
#include "lcslab/geometry/frame.hpp"
#include "lcslab/geometry/tensor.hpp"

namespace lcs {

/// Frame structure constants: [E_i, E_j] = sum_k C(i, j, k) E_k.
FrameTensor structure_constants(const Frame& frame, Exec exec = kDefaultExec);

/// Levi-Civita connection against the frame: nabla_{E_i} E_j = sum_k gamma(i, j, k) E_k.
struct ConnectionCoeffs {
  FrameTensor gamma;

  std::size_t dim() const noexcept { return gamma.dim(); }
  const Expr& operator()(std::size_t i, std::size_t j, std::size_t k) const { return gamma(i, j, k); }
};

/// Solves the Koszul formula on every frame triple and raises the last index
/// with the inverse metric.
ConnectionCoeffs koszul(const Frame& frame, const FrameMetric& g, const FrameTensor& brackets,
                        Exec exec = kDefaultExec);
ConnectionCoeffs koszul(const Frame& frame, const FrameMetric& g, Exec exec = kDefaultExec);

/// Frame components of nabla_X Y.
std::vector<Expr> cov_deriv_vector(const Frame& frame, const ConnectionCoeffs& conn, std::span<const Expr> x,
                                   std::span<const Expr> y);

/// Full covariant derivative. The direction becomes the FIRST covariant slot:
/// result(a, b..., [l]) = (nabla_{E_a} T)(E_b, ...). Accepts valence (0,s) or
/// (1,s) with s <= 3; throws otherwise.
FrameTensor cov_deriv_tensor(const Frame& frame, const ConnectionCoeffs& conn, const FrameTensor& t,
                             Exec exec = kDefaultExec);

/// nabla_W T for a fixed direction W (frame components); same valence as T.
FrameTensor cov_deriv_tensor_along(const Frame& frame, const ConnectionCoeffs& conn, const FrameTensor& t,
                                   std::span<const Expr> w, Exec exec = kDefaultExec);

/// (L_V g)(E_i, E_j) = V(g_ij) - g([V,E_i],E_j) - g(E_i,[V,E_j]) for V in frame components.
FrameTensor lie_derivative_metric(const Frame& frame, const FrameMetric& g, const FrameTensor& brackets,
                                  std::span<const Expr> v);

/// The metric as a (0,2) frame tensor.
FrameTensor metric_tensor(const FrameMetric& g);

/// Torsion T(i,j,k) = gamma(i,j,k) - gamma(j,i,k) - C(i,j,k); zero for Levi-Civita.
FrameTensor torsion(const ConnectionCoeffs& conn, const FrameTensor& brackets);

/// E_k(g_ij) - g(nabla_k E_i, E_j) - g(E_i, nabla_k E_j), indexed (k, i, j).
FrameTensor metricity_defect(const Frame& frame, const FrameMetric& g, const ConnectionCoeffs& conn);

}  // namespace lcs
