#pragma once

#include <span>
#include <string>

#include "json.hpp"
#include "weldpath/types.hpp"

namespace weldpath {

// {"pairs": [[s, t], ...]}. Throws ParseError on schema violations.
PairSpec parse_pairs(const nlohmann::json& doc);
nlohmann::json pairs_to_json(std::span<const Pair> pairs);

// {"paths": [[v, ...], ...]}.
PathCover parse_cover(const nlohmann::json& doc);
nlohmann::json cover_to_json(const PathCover& cover);

// ParseError if the file is missing or not JSON.
nlohmann::json read_json_file(const std::string& path);
// InputError if the file cannot be written.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace weldpath
