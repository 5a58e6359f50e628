#include <algorithm>
#include <cmath>
#include <string>

#include <json.hpp>

#include "chromatica/error.hpp"
#include "chromatica/io.hpp"

namespace chromatica::io {
namespace {

using nlohmann::json;

constexpr std::string_view kFormatName = "chromatica-embedding";
constexpr int kFormatVersion = 1;
constexpr std::uint64_t kMaxNodes = std::uint64_t{1} << 24;

// Position of a byte offset as (line, column), both 1-based.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void schema_error(const std::string& message) { throw ParseError(0, 0, "embedding document: " + message); }

const json& field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) schema_error(std::string("missing field '") + key + "'");
  return *it;
}

std::uint64_t as_count(const json& value, const std::string& where) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
    schema_error(where + " must be a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

double as_real(const json& value, const std::string& where) {
  if (!value.is_number()) schema_error(where + " must be a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) schema_error(where + " must be finite");
  return x;
}

}  // namespace

void validate(const GraphDocument& doc) {
  if (doc.coordinates) validate_coordinates(doc.graph, *doc.coordinates);
  if (doc.rotation) validate_rotation(doc.graph, *doc.rotation);
}

GraphDocument parse_embedding(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, column, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("top level must be an object");
  const auto& format = field(doc, "format");
  if (!format.is_string() || format.get<std::string>() != kFormatName) {
    schema_error("format must be \"" + std::string(kFormatName) + "\"");
  }
  const auto version = as_count(field(doc, "version"), "version");
  if (version != kFormatVersion) schema_error("unsupported version " + std::to_string(version));

  const auto n = as_count(field(doc, "n"), "n");
  if (n == 0 || n > kMaxNodes) schema_error("n out of range");

  const auto& edge_list = field(doc, "edges");
  if (!edge_list.is_array()) schema_error("edges must be an array");
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    const auto& e = edge_list[i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 2) schema_error(where + " must be a pair");
    const auto u = as_count(e[0], where);
    const auto v = as_count(e[1], where);
    if (u >= n || v >= n) schema_error(where + " has an endpoint outside 0.." + std::to_string(n - 1));
    edges.push_back({static_cast<Node>(u), static_cast<Node>(v)});
  }

  GraphDocument result;
  try {
    result.graph = build_graph(static_cast<std::size_t>(n), edges);
  } catch (const InvalidArgument& e) {
    schema_error(e.what());
  }

  if (const auto it = doc.find("coordinates"); it != doc.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != n) schema_error("coordinates must list one [x, y] pair per node");
    std::vector<Point> coords;
    coords.reserve(n);
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto& p = (*it)[i];
      const std::string where = "coordinates[" + std::to_string(i) + "]";
      if (!p.is_array() || p.size() != 2) schema_error(where + " must be [x, y]");
      coords.push_back({as_real(p[0], where), as_real(p[1], where)});
    }
    result.coordinates = std::move(coords);
  }
  if (const auto it = doc.find("rotation"); it != doc.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != n) schema_error("rotation must list one neighbour cycle per node");
    RotationSystem rot;
    rot.rotation.resize(n);
    for (std::size_t v = 0; v < it->size(); ++v) {
      const auto& cycle = (*it)[v];
      const std::string where = "rotation[" + std::to_string(v) + "]";
      if (!cycle.is_array()) schema_error(where + " must be an array");
      for (const auto& w : cycle) {
        const auto id = as_count(w, where);
        if (id >= n) schema_error("rotation at node " + std::to_string(v) + " lists " + std::to_string(id) + ", which is not a node");
        rot.rotation[v].push_back(static_cast<Node>(id));
      }
    }
    result.rotation = std::move(rot);
  }
  if (const auto it = doc.find("name"); it != doc.end() && it->is_string()) result.metadata.name = it->get<std::string>();
  if (const auto it = doc.find("source"); it != doc.end() && it->is_string()) result.metadata.source = it->get<std::string>();
  if (const auto it = doc.find("hog_id"); it != doc.end() && !it->is_null()) result.metadata.hog_id = as_count(*it, "hog_id");

  validate(result);
  return result;
}

std::string write_embedding(const GraphDocument& doc) {
  json out = json::object();
  out["format"] = kFormatName;
  out["version"] = kFormatVersion;
  if (!doc.metadata.name.empty()) out["name"] = doc.metadata.name;
  if (!doc.metadata.source.empty()) out["source"] = doc.metadata.source;
  if (doc.metadata.hog_id) out["hog_id"] = *doc.metadata.hog_id;
  out["n"] = doc.graph.node_count();
  json edges = json::array();
  for (const Edge& e : doc.graph.edges()) edges.push_back({e.u, e.v});
  out["edges"] = std::move(edges);
  if (doc.coordinates) {
    json coords = json::array();
    for (const Point& p : *doc.coordinates) coords.push_back({p.x, p.y});
    out["coordinates"] = std::move(coords);
  }
  if (doc.rotation) out["rotation"] = doc.rotation->rotation;
  return out.dump(1) + "\n";
}

}  // namespace chromatica::io
