#include "weldpath/io.hpp"

#include <fstream>
#include <sstream>

namespace weldpath {
namespace {

Vertex parse_vertex(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
      j.get<std::int64_t>() >= static_cast<std::int64_t>(kNoVertex)) {
    throw ParseError(where + ": expected a vertex id");
  }
  return j.get<Vertex>();
}

}  // namespace

PairSpec parse_pairs(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("pairs") || !doc["pairs"].is_array()) {
    throw ParseError("pairs document needs a \"pairs\" array");
  }
  PairSpec out;
  const auto& arr = doc["pairs"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "$.pairs[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) throw ParseError(where + ": expected [s, t]");
    out.push_back({parse_vertex(arr[i][0], where), parse_vertex(arr[i][1], where)});
  }
  return out;
}

nlohmann::json pairs_to_json(std::span<const Pair> pairs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Pair& p : pairs) arr.push_back({p.s, p.t});
  return {{"pairs", std::move(arr)}};
}

PathCover parse_cover(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("paths") || !doc["paths"].is_array()) {
    throw ParseError("cover document needs a \"paths\" array");
  }
  PathCover out;
  const auto& arr = doc["paths"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "$.paths[" + std::to_string(i) + "]";
    if (!arr[i].is_array()) throw ParseError(where + ": expected an array of vertex ids");
    Path p;
    for (const auto& v : arr[i]) p.push_back(parse_vertex(v, where));
    out.push_back(std::move(p));
  }
  return out;
}

nlohmann::json cover_to_json(const PathCover& cover) {
  return {{"paths", cover}};
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

}  // namespace weldpath
