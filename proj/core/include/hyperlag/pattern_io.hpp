#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hyperlag/pattern.hpp"

namespace hyperlag {

// Pattern text format:
//   r m
//   one edge per line, r nondecreasing indices in [1, m]
// '#' starts a comment; blank lines are skipped. Throws ParseError.
Pattern parse_pattern(std::string_view text);

// Canonical text: header plus edges in lexicographic order.
std::string serialize_pattern(const Pattern& p);

Pattern read_pattern_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace hyperlag
