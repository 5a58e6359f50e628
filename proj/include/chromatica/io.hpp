#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromatica/colouring.hpp"
#include "chromatica/geometry.hpp"
#include "chromatica/graph.hpp"
#include "chromatica/transforms.hpp"

namespace chromatica::io {

struct Metadata {
  std::string name;
  std::string source;
  std::optional<std::uint64_t> hog_id;

  friend bool operator==(const Metadata&, const Metadata&) = default;
};

/// A graph plus whatever embedding information came with it.
struct GraphDocument {
  Graph graph;
  std::optional<std::vector<Point>> coordinates;
  std::optional<RotationSystem> rotation;
  Metadata metadata;
};

/// Throws InvalidArgument if coordinates or rotation disagree with the graph.
void validate(const GraphDocument& doc);

// DIMACS colouring format: "c" comment lines, one "p edge <n> <m>" line,
// then m "e <u> <v>" lines with 1-based endpoints.
GraphDocument parse_dimacs(std::string_view text);
std::string write_dimacs(const GraphDocument& doc);

// graph6: N(n) followed by the upper triangle in column-major order, six
// bits per byte offset by 63. An optional ">>graph6<<" header and one
// trailing newline are accepted. Errors report the byte offset as column.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Embedding documents: versioned JSON (see docs/formats.md).
GraphDocument parse_embedding(std::string_view text);
std::string write_embedding(const GraphDocument& doc);

/// Picks the parser from the extension (.col/.dimacs, .g6, .emb/.json),
/// sniffing the content for anything else.
GraphDocument read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const GraphDocument& doc);

std::string read_text_file(const std::filesystem::path& path);
/// Writes through a temporary file in the same directory and renames it.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view text);

// ---- House of Graphs ------------------------------------------------------

struct HttpResponse {
  int status = 0;
  std::string body;
};

/// Minimal GET transport so the fetch client can be tested offline.
class Transport {
 public:
  virtual ~Transport() = default;
  /// Throws NetworkError when no response could be obtained.
  virtual HttpResponse get(const std::string& url) = 0;
};

/// cpp-httplib backed transport (http and https).
class HttpTransport final : public Transport {
 public:
  HttpResponse get(const std::string& url) override;
};

/// $HOG_BASE_URL or https://houseofgraphs.org.
std::string hog_base_url();
/// $CHROMATICA_CACHE or ./.chromatica-cache.
std::filesystem::path default_cache_dir();

std::string hog_graph_url(const std::string& base_url, std::uint64_t id);

/// Extracts the graph6 payload from a HoG response body: either a JSON
/// object with a graph6 string field, or the bare graph6 text.
std::string extract_graph6_payload(std::string_view body);

struct FetchResult {
  GraphDocument document;
  bool from_cache = false;
  std::filesystem::path cache_file;
};

/// Returns graph `id`, serving it from cache_dir/hog-<id>.g6 when present.
/// Otherwise downloads it (unless offline), validates the graph6 payload and
/// stores it atomically. Errors: NotCachedError (offline, cold cache),
/// NotFoundError (HTTP 404), NetworkError (anything else).
FetchResult hog_fetch(std::uint64_t id, const std::filesystem::path& cache_dir, bool offline, Transport& transport,
                      const std::string& base_url = hog_base_url());

// ---- benchmark CSV --------------------------------------------------------

struct BenchmarkRecord {
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string algorithm;
  std::size_t colours = 0;
  std::size_t lower_bound = 0;
  bool optimal = false;
  std::uint64_t millis = 0;

  friend bool operator==(const BenchmarkRecord&, const BenchmarkRecord&) = default;
};

inline constexpr std::string_view kBenchmarkHeader = "n,p,seed,algorithm,colours,lower_bound,optimal,millis";

/// Header line plus one row per record, sorted by (n, p, seed, algorithm).
std::string write_benchmark_csv(std::vector<BenchmarkRecord> records);
std::vector<BenchmarkRecord> parse_benchmark_csv(std::string_view text);

// ---- colouring files ------------------------------------------------------

/// "# k=<k>" and "# kind=<kind>" header lines, then "<element> <label>".
std::string write_colouring(const Colouring& colouring);

struct ColouringFile {
  std::optional<std::size_t> k;
  ElementKind kind = ElementKind::Node;
  Assignment labels;
};

/// Element indices must be exactly 0..count-1, each once.
ColouringFile parse_colouring(std::string_view text);

}  // namespace chromatica::io
