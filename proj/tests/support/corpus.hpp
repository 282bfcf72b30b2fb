#pragma once

#include <string>
#include <vector>

#include "lcslab/cli/manifold_def.hpp"
#include "lcslab/exec.hpp"
#include "lcslab/geometry/manifold.hpp"

namespace corpus {

lcs::cli::ManifoldDef builtin(const std::string& name);

/// Unit upper-triangular frames with small random polynomial entries over
/// (x, y, t) and metric diag(1, 1, -1). Always invertible.
std::vector<lcs::cli::ManifoldDef> random_polynomial_frames(unsigned seed, int count);

/// example51, flat3, const-curv3 and three random polynomial frames.
std::vector<lcs::cli::ManifoldDef> all();

lcs::Geometry geometry(const lcs::cli::ManifoldDef& def, lcs::Exec exec = lcs::kDefaultExec);

}  // namespace corpus
