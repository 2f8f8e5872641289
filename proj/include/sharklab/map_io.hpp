#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sharklab/pl_map.hpp"

namespace sharklab {

struct MapDocument {
  PLMap map;
  std::optional<std::string> comment;
};

// Canonical map file:
//   {"domain": ["lo", "hi"], "points": [["x", "y"], ...], "comment": "..."}
// Every number is a "p/q" (or "p") string. "comment" is optional. Errors are
// reported as DomainError naming the offending field.
MapDocument parse_map_document(std::string_view text);
std::string format_map_document(const PLMap& f, const std::optional<std::string>& comment = std::nullopt);

MapDocument read_map_file(const std::string& path);

}  // namespace sharklab
