#include "sharklab/map_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sharklab/errors.hpp"

namespace sharklab {

namespace {

using nlohmann::json;

Rational field_rational(const json& v, const std::string& field) {
  if (!v.is_string()) {
    throw DomainError("map file: field '" + field + "' must be a \"p/q\" string");
  }
  try {
    return parse_rational(v.get<std::string>());
  } catch (const DomainError& e) {
    throw DomainError("map file: field '" + field + "': " + e.what());
  }
}

}  // namespace

MapDocument parse_map_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("map file: not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DomainError("map file: top level must be an object");
  if (!doc.contains("domain") || !doc["domain"].is_array() || doc["domain"].size() != 2) {
    throw DomainError("map file: field 'domain' must be a [lo, hi] pair");
  }
  const Rational lo = field_rational(doc["domain"][0], "domain[0]");
  const Rational hi = field_rational(doc["domain"][1], "domain[1]");
  if (!(lo < hi)) throw DomainError("map file: field 'domain' needs lo < hi");
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw DomainError("map file: field 'points' must be a list of [x, y] pairs");
  }
  std::vector<Breakpoint> pts;
  const auto& arr = doc["points"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string name = "points[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) {
      throw DomainError("map file: field '" + name + "' must be an [x, y] pair");
    }
    pts.push_back({field_rational(arr[i][0], name + "[0]"), field_rational(arr[i][1], name + "[1]")});
  }
  if (pts.size() < 2) throw DomainError("map file: field 'points' needs at least 2 entries");
  if (pts.front().x != lo || pts.back().x != hi) {
    throw DomainError("map file: field 'points' must start at domain[0] and end at domain[1]");
  }
  std::optional<std::string> comment;
  if (doc.contains("comment")) {
    if (!doc["comment"].is_string()) throw DomainError("map file: field 'comment' must be a string");
    comment = doc["comment"].get<std::string>();
  }
  try {
    return {PLMap(std::move(pts)), std::move(comment)};
  } catch (const DomainError& e) {
    throw DomainError(std::string("map file: field 'points': ") + e.what());
  }
}

std::string format_map_document(const PLMap& f, const std::optional<std::string>& comment) {
  std::ostringstream os;
  os << "{\n";
  if (comment) os << "  \"comment\": " << json(*comment).dump() << ",\n";
  os << "  \"domain\": [\"" << to_string(f.domain().lo) << "\", \"" << to_string(f.domain().hi)
     << "\"],\n";
  os << "  \"points\": [\n";
  const auto pts = f.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    os << "    [\"" << to_string(pts[i].x) << "\", \"" << to_string(pts[i].y) << "\"]"
       << (i + 1 < pts.size() ? ",\n" : "\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

MapDocument read_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("map file: cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_map_document(buf.str());
}

}  // namespace sharklab
