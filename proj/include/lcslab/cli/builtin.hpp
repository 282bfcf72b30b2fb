#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcs::cli {

/// JSON text of a bundled definition ("example51", "flat3", "const-curv3").
std::optional<std::string> builtin_definition(std::string_view name);

std::vector<std::string> builtin_names();

}  // namespace lcs::cli
