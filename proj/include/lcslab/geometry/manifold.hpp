#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "lcslab/exec.hpp"
#include "lcslab/geometry/curvature.hpp"
#include "lcslab/geometry/frame.hpp"
#include "lcslab/geometry/levi_civita.hpp"

namespace lcs {

/// A framed Lorentzian manifold on a single chart.
struct Manifold {
  std::string name;
  Chart chart;
  Frame frame;
  FrameMetric metric;
  /// 0-based frame index of the designated characteristic field, if any.
  std::optional<std::size_t> xi;

  std::size_t dim() const noexcept { return chart.dim(); }
};

/// Everything derived from a Manifold once: brackets, connection, curvature
/// and the covariant derivatives of R and S. Immutable after construction.
class Geometry {
 public:
  explicit Geometry(Manifold m, Exec exec = kDefaultExec);

  const Manifold& manifold() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }
  const Chart& chart() const noexcept { return m_.chart; }
  const Frame& frame() const noexcept { return m_.frame; }
  const FrameMetric& metric() const noexcept { return m_.metric; }
  const FrameTensor& g() const noexcept { return g_; }
  const FrameTensor& brackets() const noexcept { return brackets_; }
  const ConnectionCoeffs& connection() const noexcept { return conn_; }
  const CurvatureStack& curvature() const noexcept { return stack_; }
  const FrameTensor& nabla_riemann() const noexcept { return nabla_r_; }
  const FrameTensor& nabla_ricci() const noexcept { return nabla_s_; }

  /// E_i(f).
  Expr derivative(std::size_t i, const Expr& f) const { return apply(m_.frame[i], f); }
  /// True iff every frame derivative of f vanishes.
  bool is_constant(const Expr& f) const;

 private:
  Manifold m_;
  FrameTensor g_;
  FrameTensor brackets_;
  ConnectionCoeffs conn_;
  CurvatureStack stack_;
  FrameTensor nabla_r_;
  FrameTensor nabla_s_;
};

}  // namespace lcs
