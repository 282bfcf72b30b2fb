#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lcslab/geometry/manifold.hpp"

namespace lcs::cli {

/// A manifold definition as written in the JSON file, before any algebra.
/// Lines are 1-based and 0 when the field is absent.
struct ManifoldDef {
  std::string name;
  std::vector<std::string> coords;
  std::vector<std::vector<std::string>> frame;   ///< row i: coordinate components of E_{i+1}
  std::vector<std::vector<std::string>> metric;  ///< full n x n after mirroring
  std::optional<std::size_t> xi;                 ///< 1-based, as in the file
  std::map<std::string, std::string> sample_point;

  std::vector<std::vector<int>> frame_lines;
  std::vector<std::vector<int>> metric_lines;
  int coords_line = 0;
  int frame_line = 0;
  int metric_line = 0;
  int xi_line = 0;
  int sample_line = 0;
};

/// Parses definition JSON. Structural problems raise LoadError with the line
/// of the offending value.
ManifoldDef parse_manifold_def(const std::string& text);

/// Reads a file, or a built-in definition when `path` names one and no such
/// file exists.
ManifoldDef load_manifold_def(const std::string& path);

/// Builds the algebraic manifold. `sample_override` entries replace the
/// file's sample point. Coordinates without a value sample at 2.
Manifold build_manifold(const ManifoldDef& def, const std::map<std::string, std::string>& sample_override = {});

/// "x=2,y=1/2" into a name -> rational-text map.
std::map<std::string, std::string> parse_sample_option(const std::string& text);

}  // namespace lcs::cli
