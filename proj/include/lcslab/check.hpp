#pragma once

#include <string>
#include <utility>

#include "lcslab/geometry/tensor.hpp"

namespace lcs {

/// An exact identity check: the identity holds iff `residual` vanishes
/// componentwise and the side condition (e.g. alpha != 0) holds.
struct Check {
  std::string id;
  std::string statement;
  FrameTensor residual;
  /// Residual is a single scalar stored as a rank-1 tensor of dimension 1.
  bool scalar = false;
  bool condition_ok = true;
  std::string note;

  bool passed() const { return condition_ok && residual.is_zero(); }
};

inline Check make_check(std::string id, std::string statement, FrameTensor residual) {
  Check c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.residual = std::move(residual);
  return c;
}

inline FrameTensor scalar_residual(const Expr& value) {
  FrameTensor t(1, Valence{0, 1});
  t(0) = value;
  return t;
}

}  // namespace lcs
