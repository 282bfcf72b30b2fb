#pragma once

#include <string>
#include <vector>

#include "lcslab/check.hpp"
#include "lcslab/exec.hpp"
#include "lcslab/geometry/frame.hpp"
#include "lcslab/geometry/levi_civita.hpp"
#include "lcslab/geometry/tensor.hpp"

namespace lcs {

/// Curvature conventions used throughout:
///   R(X,Y)Z    = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z
///   R(X,Y,Z,W) = g(R(X,Y)Z, W)
///   S(Y,Z)     = sum_{a,b} g^{ab} R(E_a, Y, Z, E_b)
///   r          = sum_{a,b} g^{ab} S(E_a, E_b),   g(QX, Y) = S(X, Y)
struct CurvatureStack {
  FrameTensor riemann13;   ///< (i,j,k,l): R(E_i,E_j)E_k = sum_l . E_l
  FrameTensor riemann04;   ///< (i,j,k,w): R(E_i,E_j,E_k,E_w)
  FrameTensor ricci;       ///< (y,z): S(E_y,E_z)
  FrameTensor q_operator;  ///< (i,l): Q E_i = sum_l . E_l
  Expr scalar;
};

FrameTensor riemann(const Frame& frame, const ConnectionCoeffs& conn, const FrameTensor& brackets,
                    Exec exec = kDefaultExec);
FrameTensor lower_riemann(const FrameTensor& riemann13, const FrameMetric& g, Exec exec = kDefaultExec);
FrameTensor ricci(const FrameTensor& riemann13, const FrameMetric& g);
Expr scalar_curvature(const FrameTensor& ricci, const FrameMetric& g);
FrameTensor ricci_operator(const FrameTensor& ricci, const FrameMetric& g);

CurvatureStack curvature_stack(const Frame& frame, const FrameMetric& g, const ConnectionCoeffs& conn,
                               const FrameTensor& brackets, Exec exec = kDefaultExec);

/// M(X,Y)Z = R(X,Y)Z - 1/(2(n-1)) [S(Y,Z)X - S(X,Z)Y + g(Y,Z)QX - g(X,Z)QY]
FrameTensor m_projective(const CurvatureStack& stack, const FrameMetric& g, Exec exec = kDefaultExec);

/// C(X,Y)W = R(X,Y)W - r/(n(n-1)) {g(Y,W)X - g(X,W)Y}
FrameTensor concircular(const CurvatureStack& stack, const FrameMetric& g, Exec exec = kDefaultExec);

/// (nabla_{E_w} R)(E_i,E_j)E_k = sum_l T(w,i,j,k,l) E_l.
FrameTensor nabla_riemann(const Frame& frame, const ConnectionCoeffs& conn, const FrameTensor& riemann13,
                          Exec exec = kDefaultExec);

/// Antisymmetries, pair symmetry, both Bianchi identities, Ricci symmetry
/// and the defining property of Q.
std::vector<Check> curvature_identities(const CurvatureStack& stack, const FrameTensor& nabla_r,
                                        const FrameMetric& g);

}  // namespace lcs
