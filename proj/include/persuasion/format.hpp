#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "persuasion/instance.hpp"

namespace persuasion {

// JSON instance files:
//
//   {"type": "persuasion", "outcomes": [...], "weights": ["1/6", ...],
//    "facts": [[i, ...], ...], "focal": [i, ...], "threshold": "1/1"}
//   {"type": "exact_cover", "universe": n, "blocks": [[i, ...], ...]}
//
// Rationals are "num/den" strings, indices 0-based, unknown keys rejected.
// The canonical form writes one key per line in the order above, member
// indices ascending and rationals in lowest terms.

using AnyInstance = std::variant<PersuasionInstance, ExactCoverInstance>;

// Throws SyntaxError (with line/column) or Error{semantic_error}.
AnyInstance parse_instance(std::string_view text);
PersuasionInstance parse_persuasion(std::string_view text);
ExactCoverInstance parse_exact_cover(std::string_view text);

std::string serialize_instance(const PersuasionInstance& instance);
std::string serialize_instance(const ExactCoverInstance& instance);
std::string serialize_instance(const AnyInstance& instance);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace persuasion
