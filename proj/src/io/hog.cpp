#include <cstdlib>
#include <string>

#include <json.hpp>

#include "chromatica/error.hpp"
#include "chromatica/io.hpp"

namespace chromatica::io {

std::string hog_base_url() {
  if (const char* env = std::getenv("HOG_BASE_URL"); env != nullptr && *env != '\0') return env;
  return "https://houseofgraphs.org";
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("CHROMATICA_CACHE"); env != nullptr && *env != '\0') return env;
  return ".chromatica-cache";
}

std::string hog_graph_url(const std::string& base_url, std::uint64_t id) {
  std::string base = base_url;
  while (!base.empty() && base.back() == '/') base.pop_back();
  return base + "/api/graphs/" + std::to_string(id);
}

std::string extract_graph6_payload(std::string_view body) {
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && body[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(body.begin(), body.end());
    } catch (const nlohmann::json::parse_error& e) {
      throw NetworkError(std::string("House of Graphs returned malformed JSON: ") + e.what());
    }
    for (const char* key : {"graph6", "canonical_form", "g6"}) {
      if (const auto it = doc.find(key); it != doc.end() && it->is_string()) return it->get<std::string>();
    }
    throw NetworkError("House of Graphs response has no graph6 field");
  }
  std::string payload(body);
  while (!payload.empty() && (payload.back() == '\n' || payload.back() == '\r' || payload.back() == ' ')) {
    payload.pop_back();
  }
  return payload;
}

FetchResult hog_fetch(std::uint64_t id, const std::filesystem::path& cache_dir, bool offline, Transport& transport,
                      const std::string& base_url) {
  if (id == 0) throw InvalidArgument("House of Graphs ids are positive");
  FetchResult result;
  result.cache_file = cache_dir / ("hog-" + std::to_string(id) + ".g6");

  const auto to_document = [&](const std::string& payload) {
    GraphDocument doc;
    doc.graph = parse_graph6(payload);
    doc.metadata.name = "HoG " + std::to_string(id);
    doc.metadata.source = "House of Graphs";
    doc.metadata.hog_id = id;
    return doc;
  };

  std::error_code ec;
  if (std::filesystem::is_regular_file(result.cache_file, ec)) {
    result.document = to_document(read_text_file(result.cache_file));
    result.from_cache = true;
    return result;
  }
  if (offline) {
    throw NotCachedError("HoG " + std::to_string(id) + " is not cached in '" + cache_dir.string() +
                         "' and network access is disabled");
  }

  const HttpResponse response = transport.get(hog_graph_url(base_url, id));
  if (response.status == 404) throw NotFoundError("House of Graphs has no graph with id " + std::to_string(id));
  if (response.status != 200) {
    throw NetworkError("House of Graphs request for id " + std::to_string(id) + " failed with HTTP status " +
                       std::to_string(response.status));
  }
  const std::string payload = extract_graph6_payload(response.body);
  try {
    result.document = to_document(payload);
  } catch (const ParseError& e) {
    throw NetworkError("House of Graphs returned an invalid graph6 payload: " + std::string(e.what()));
  }
  std::filesystem::create_directories(cache_dir, ec);
  if (ec) throw InvalidArgument("cannot create cache directory '" + cache_dir.string() + "': " + ec.message());
  write_text_file_atomic(result.cache_file, payload + "\n");
  return result;
}

}  // namespace chromatica::io
