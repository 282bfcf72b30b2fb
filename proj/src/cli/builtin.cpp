#include "lcslab/cli/builtin.hpp"

#include <utility>

namespace lcs::cli {

const std::vector<std::pair<std::string_view, std::string_view>>& builtin_table();

std::optional<std::string> builtin_definition(std::string_view name) {
  for (const auto& [key, body] : builtin_table()) {
    if (key == name) return std::string(body);
  }
  return std::nullopt;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& entry : builtin_table()) out.emplace_back(entry.first);
  return out;
}

}  // namespace lcs::cli
