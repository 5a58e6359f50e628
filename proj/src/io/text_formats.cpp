#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <thread>

#include "chromatica/error.hpp"
#include "chromatica/io.hpp"

namespace chromatica::io {
namespace {

constexpr std::uint64_t kMaxNodes = std::uint64_t{1} << 24;

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

/// Calls fn(line_number, line) for every line; line numbers are 1-based.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    const std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++line_no;
    if (!(end == std::string_view::npos && line.empty())) fn(line_no, line);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
}

std::uint64_t parse_unsigned(const Token& t, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, t.column, std::string("expected ") + what + ", got '" + std::string(t.text) + "'");
  }
  return value;
}

}  // namespace

// ---- DIMACS ---------------------------------------------------------------

GraphDocument parse_dimacs(std::string_view text) {
  std::optional<std::uint64_t> n;
  std::uint64_t declared_edges = 0;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto tokens = tokenize(line);
    if (tokens.empty()) return;
    const std::string_view kind = tokens[0].text;
    if (kind == "c") return;
    if (kind == "p") {
      if (n) {
        throw ParseError(line_no, tokens[0].column,
                         "duplicate problem line (first at line " + std::to_string(header_line) + ")");
      }
      if (tokens.size() != 4) throw ParseError(line_no, tokens[0].column, "problem line must be 'p edge <n> <m>'");
      if (tokens[1].text != "edge") {
        throw ParseError(line_no, tokens[1].column, "unsupported problem type '" + std::string(tokens[1].text) + "'");
      }
      const auto nodes = parse_unsigned(tokens[2], line_no, "node count");
      if (nodes == 0 || nodes > kMaxNodes) throw ParseError(line_no, tokens[2].column, "node count out of range");
      declared_edges = parse_unsigned(tokens[3], line_no, "edge count");
      n = nodes;
      header_line = line_no;
      return;
    }
    if (kind == "e") {
      if (!n) throw ParseError(line_no, tokens[0].column, "edge line before the problem line");
      if (tokens.size() != 3) throw ParseError(line_no, tokens[0].column, "edge line must be 'e <u> <v>'");
      const auto u = parse_unsigned(tokens[1], line_no, "node number");
      const auto v = parse_unsigned(tokens[2], line_no, "node number");
      if (u < 1 || u > *n) throw ParseError(line_no, tokens[1].column, "endpoint " + std::to_string(u) + " out of range 1.." + std::to_string(*n));
      if (v < 1 || v > *n) throw ParseError(line_no, tokens[2].column, "endpoint " + std::to_string(v) + " out of range 1.." + std::to_string(*n));
      if (u == v) throw ParseError(line_no, tokens[1].column, "self-loop at node " + std::to_string(u));
      edges.push_back({static_cast<Node>(u - 1), static_cast<Node>(v - 1)});
      return;
    }
    throw ParseError(line_no, tokens[0].column, "unknown line type '" + std::string(kind) + "'");
  });
  if (!n) throw ParseError(1, 1, "missing problem line 'p edge <n> <m>'");
  if (edges.size() != declared_edges) {
    throw ParseError(header_line, 1,
                     "problem line declares " + std::to_string(declared_edges) + " edges but " +
                         std::to_string(edges.size()) + " edge lines follow");
  }
  GraphDocument doc;
  doc.graph = build_graph(static_cast<std::size_t>(*n), edges);
  return doc;
}

std::string write_dimacs(const GraphDocument& doc) {
  std::string out;
  if (!doc.metadata.name.empty()) out += "c " + doc.metadata.name + "\n";
  out += "p edge " + std::to_string(doc.graph.node_count()) + " " + std::to_string(doc.graph.edge_count()) + "\n";
  for (const Edge& e : doc.graph.edges()) {
    out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  }
  return out;
}

// ---- graph6 ---------------------------------------------------------------

Graph parse_graph6(std::string_view text) {
  std::size_t offset = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) offset = header.size();
  std::size_t end = text.size();
  if (end > offset && text[end - 1] == '\n') --end;
  if (end > offset && text[end - 1] == '\r') --end;

  std::size_t pos = offset;
  const auto byte = [&](const char* what) -> std::uint64_t {
    if (pos >= end) throw ParseError(1, pos + 1, std::string("truncated graph6 data: missing ") + what);
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
      throw ParseError(1, pos + 1, "byte " + std::to_string(c) + " outside the graph6 range 63..126");
    }
    ++pos;
    return c - 63u;
  };

  std::uint64_t n = byte("node count");
  if (n == 63) {
    n = 0;
    int words = 3;
    if (pos < end && static_cast<unsigned char>(text[pos]) == 126) {
      ++pos;
      words = 6;
    }
    for (int i = 0; i < words; ++i) n = (n << 6) | byte("node count");
  }
  if (n == 0) throw ParseError(1, offset + 1, "graph has no nodes");
  if (n > kMaxNodes) throw ParseError(1, offset + 1, "node count " + std::to_string(n) + " too large");

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t data_bytes = (bits + 5) / 6;
  if (end - pos < data_bytes) {
    throw ParseError(1, end + 1, "truncated graph6 data: expected " + std::to_string(data_bytes) +
                                     " adjacency bytes, found " + std::to_string(end - pos));
  }
  if (end - pos > data_bytes) throw ParseError(1, pos + data_bytes + 1, "trailing data after graph6 adjacency bytes");

  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  std::uint64_t current = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) current = byte("adjacency data");
      if ((current >> (5 - bit % 6)) & 1u) edges.push_back({static_cast<Node>(i), static_cast<Node>(j)});
    }
  }
  if (bit % 6 != 0 && (current & ((1u << (6 - bit % 6)) - 1)) != 0) {
    throw ParseError(1, pos, "non-zero padding bits in the last graph6 byte");
  }
  return build_graph(static_cast<std::size_t>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const std::uint64_t n = g.node_count();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  }
  unsigned current = 0;
  int filled = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    const auto row = g.neighbours(static_cast<Node>(j));
    for (std::uint64_t i = 0; i < j; ++i) {
      const bool edge = std::binary_search(row.begin(), row.end(), static_cast<Node>(i));
      current = (current << 1) | (edge ? 1u : 0u);
      if (++filled == 6) {
        out += static_cast<char>(63 + current);
        current = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (current << (6 - filled)));
  return out;
}

// ---- files ----------------------------------------------------------------

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file_atomic(const std::filesystem::path& path, std::string_view text) {
  static std::atomic<std::uint64_t> counter{0};
  auto tmp = path;
  tmp += ".tmp-" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + "-" +
         std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write '" + tmp.string() + "'");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw InvalidArgument("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw InvalidArgument("cannot move '" + tmp.string() + "' to '" + path.string() + "': " + ec.message());
}

GraphDocument read_graph_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const std::string ext = path.extension().string();
  GraphDocument doc;
  if (ext == ".col" || ext == ".dimacs") {
    doc = parse_dimacs(text);
  } else if (ext == ".g6") {
    doc.graph = parse_graph6(text);
  } else if (ext == ".emb" || ext == ".json") {
    doc = parse_embedding(text);
  } else {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      doc = parse_embedding(text);
    } else if (text.find("p edge") != std::string::npos) {
      doc = parse_dimacs(text);
    } else {
      doc.graph = parse_graph6(text);
    }
  }
  if (doc.metadata.name.empty()) doc.metadata.name = path.stem().string();
  return doc;
}

void write_graph_file(const std::filesystem::path& path, const GraphDocument& doc) {
  const std::string ext = path.extension().string();
  if (ext == ".g6") {
    write_text_file_atomic(path, write_graph6(doc.graph) + "\n");
  } else if (ext == ".emb" || ext == ".json") {
    write_text_file_atomic(path, write_embedding(doc));
  } else {
    write_text_file_atomic(path, write_dimacs(doc));
  }
}

// ---- benchmark CSV --------------------------------------------------------

namespace {

std::string format_probability(double p) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, p);
  return std::string(buffer, ptr);
}

}  // namespace

std::string write_benchmark_csv(std::vector<BenchmarkRecord> records) {
  std::sort(records.begin(), records.end(), [](const BenchmarkRecord& a, const BenchmarkRecord& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.p != b.p) return a.p < b.p;
    if (a.seed != b.seed) return a.seed < b.seed;
    return a.algorithm < b.algorithm;
  });
  std::string out(kBenchmarkHeader);
  out += '\n';
  for (const auto& r : records) {
    out += std::to_string(r.n) + ',' + format_probability(r.p) + ',' + std::to_string(r.seed) + ',' + r.algorithm +
           ',' + std::to_string(r.colours) + ',' + std::to_string(r.lower_bound) + ',' +
           (r.optimal ? "true" : "false") + ',' + std::to_string(r.millis) + '\n';
  }
  return out;
}

std::vector<BenchmarkRecord> parse_benchmark_csv(std::string_view text) {
  std::vector<BenchmarkRecord> records;
  bool header_seen = false;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!header_seen) {
      if (line != kBenchmarkHeader) throw ParseError(line_no, 1, "unexpected benchmark CSV header");
      header_seen = true;
      return;
    }
    if (line.empty()) return;
    std::vector<Token> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back({line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start),
                        start + 1});
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 8) throw ParseError(line_no, 1, "expected 8 fields, found " + std::to_string(fields.size()));
    BenchmarkRecord r;
    r.n = static_cast<std::size_t>(parse_unsigned(fields[0], line_no, "n"));
    {
      const auto& f = fields[1];
      const auto [ptr, ec] = std::from_chars(f.text.data(), f.text.data() + f.text.size(), r.p);
      if (ec != std::errc{} || ptr != f.text.data() + f.text.size()) throw ParseError(line_no, f.column, "bad probability");
    }
    r.seed = parse_unsigned(fields[2], line_no, "seed");
    r.algorithm = std::string(fields[3].text);
    r.colours = static_cast<std::size_t>(parse_unsigned(fields[4], line_no, "colour count"));
    r.lower_bound = static_cast<std::size_t>(parse_unsigned(fields[5], line_no, "lower bound"));
    if (fields[6].text == "true") {
      r.optimal = true;
    } else if (fields[6].text != "false") {
      throw ParseError(line_no, fields[6].column, "optimal must be true or false");
    }
    r.millis = parse_unsigned(fields[7], line_no, "millis");
    records.push_back(std::move(r));
  });
  if (!header_seen) throw ParseError(1, 1, "empty benchmark CSV");
  return records;
}

// ---- colouring files ------------------------------------------------------

std::string write_colouring(const Colouring& colouring) {
  std::string out = "# k=" + std::to_string(colouring.k) + "\n# kind=" + std::string(to_string(colouring.kind)) + "\n";
  for (std::size_t i = 0; i < colouring.labels.size(); ++i) {
    out += std::to_string(i) + " " + std::to_string(colouring.labels[i]) + "\n";
  }
  return out;
}

ColouringFile parse_colouring(std::string_view text) {
  ColouringFile file;
  std::vector<std::pair<std::uint64_t, Label>> entries;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) return;
    if (line.front() == '#') {
      const auto tokens = tokenize(line.substr(1));
      for (const auto& t : tokens) {
        if (t.text.starts_with("k=")) {
          const Token value{t.text.substr(2), t.column + 3};
          file.k = static_cast<std::size_t>(parse_unsigned(value, line_no, "colour count"));
        } else if (t.text.starts_with("kind=")) {
          const auto kind = parse_element_kind(t.text.substr(5));
          if (!kind) throw ParseError(line_no, t.column + 1, "unknown element kind '" + std::string(t.text.substr(5)) + "'");
          file.kind = *kind;
        }
      }
      return;
    }
    const auto tokens = tokenize(line);
    if (tokens.size() != 2) throw ParseError(line_no, 1, "expected '<element> <label>'");
    const auto element = parse_unsigned(tokens[0], line_no, "element index");
    const auto label = parse_unsigned(tokens[1], line_no, "label");
    if (element > kMaxNodes * 16) throw ParseError(line_no, tokens[0].column, "element index too large");
    if (label > static_cast<std::uint64_t>(std::numeric_limits<Label>::max())) {
      throw ParseError(line_no, tokens[1].column, "label too large");
    }
    entries.emplace_back(element, static_cast<Label>(label));
  });
  std::sort(entries.begin(), entries.end());
  file.labels.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first != i) {
      const bool duplicate = entries[i].first < i;
      throw ParseError(0, 0,
                       duplicate ? "element " + std::to_string(entries[i].first) + " is listed twice"
                                 : "element " + std::to_string(i) + " has no label");
    }
    file.labels.push_back(entries[i].second);
  }
  return file;
}

}  // namespace chromatica::io
