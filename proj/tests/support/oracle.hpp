#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lcslab/cli/manifold_def.hpp"
#include "lcslab/geometry/manifold.hpp"

namespace oracle {

/// Named component lists, flattened first-index-major like FrameTensor.
using Values = std::map<std::string, std::vector<mpq_class>>;

/// Recomputes the geometry of `def` at `point` from point-evaluated jets of
/// the definition text: brackets, connection, curvature, covariant
/// derivative of R, identity residuals and, when xi is designated, the
/// (LCS)_n quantities. Throws std::domain_error at a pole.
Values recompute(const lcs::cli::ManifoldDef& def, std::span<const mpq_class> point);

/// The same quantities taken from the engine's symbolic tensors and
/// evaluated at `point`. Throws lcs::PoleError at a pole.
Values engine_values(const lcs::Geometry& geo, std::span<const mpq_class> point);

/// Keys whose lists differ, with the first differing flat index.
std::vector<std::string> compare(const Values& engine, const Values& oracle);

/// Deterministic random rational points where neither side hits a pole.
std::vector<std::vector<mpq_class>> pole_free_points(const lcs::cli::ManifoldDef& def, const lcs::Geometry& geo,
                                                    std::size_t count, unsigned seed);

}  // namespace oracle
