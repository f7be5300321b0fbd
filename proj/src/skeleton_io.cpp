#include "tkms/skeleton_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tkms {

using nlohmann::json;

namespace {

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

IntMat parse_matrix(const json& j, const std::string& key, std::size_t n) {
  if (!j.contains(key) || !j[key].is_array())
    throw structural_error("missing or non-array \"" + key + "\" matrix");
  const json& rows = j[key];
  if (rows.size() != n)
    throw structural_error("\"" + key + "\" has " + std::to_string(rows.size()) +
                           " rows, expected " + std::to_string(n));
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw structural_error("\"" + key + "\" row " + std::to_string(i) + " is not an array of " +
                             std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) {
      const json& cell = rows[i][k];
      if (!cell.is_number_integer())
        throw structural_error("\"" + key + "\" entry (" + std::to_string(i) + "," +
                               std::to_string(k) + ") is not a bit-exact integer");
      m(i, k) = BigInt(std::to_string(cell.get<long long>()));
    }
  }
  return m;
}

}  // namespace

TwoGraphSkeleton parse_skeleton(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw structural_error("parse error at line " +
                           std::to_string(line_of_offset(text, e.byte)) + ": " + e.what());
  }
  if (!j.is_object()) throw structural_error("skeleton document must be a JSON object");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw structural_error("missing or non-array \"vertices\"");
  TwoGraphSkeleton g;
  for (const json& v : j["vertices"]) {
    if (!v.is_string()) throw structural_error("vertex ids must be strings");
    g.vertices.push_back(v.get<std::string>());
  }
  if (g.vertices.empty()) throw structural_error("vertex list is empty");
  g.blue = parse_matrix(j, "blue", g.vertices.size());
  g.red = parse_matrix(j, "red", g.vertices.size());
  validate(g);  // throws structural_error for duplicate ids
  return g;
}

TwoGraphSkeleton load_skeleton_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw structural_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_skeleton(buf.str());
}

std::string skeleton_to_json_text(const TwoGraphSkeleton& g) {
  json j;
  j["vertices"] = g.vertices;
  for (const char* key : {"blue", "red"}) {
    const IntMat& m = key == std::string("blue") ? g.blue : g.red;
    json rows = json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < g.size(); ++k) row.push_back(m(i, k).get_si());
      rows.push_back(std::move(row));
    }
    j[key] = std::move(rows);
  }
  return j.dump(2);
}

}  // namespace tkms
