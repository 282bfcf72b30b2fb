#pragma once

#include <map>
#include <string>

namespace lcs::cli {

/// Maps JSON pointers ("/frame/0/2") to the 1-based line where that value
/// starts. The JSON library keeps no source positions, so this is a separate
/// scan over text that has already been validated.
std::map<std::string, int> locate_json_values(const std::string& text);

/// 1-based line of a byte offset.
int line_of_offset(const std::string& text, std::size_t offset);

}  // namespace lcs::cli
