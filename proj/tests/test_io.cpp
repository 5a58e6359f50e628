#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "chromatica/error.hpp"
#include "chromatica/generators.hpp"
#include "chromatica/io.hpp"
#include "oracles.hpp"

using namespace chromatica;
namespace fs = std::filesystem;
namespace gen = chromatica::generators;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static std::atomic<int> counter{0};
    path = fs::temp_directory_path() /
           ("chromatica-io-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

class StubTransport : public io::Transport {
 public:
  explicit StubTransport(io::HttpResponse response) : response_(std::move(response)) {}
  io::HttpResponse get(const std::string& url) override {
    ++calls;
    last_url = url;
    return response_;
  }
  int calls = 0;
  std::string last_url;

 private:
  io::HttpResponse response_;
};

template <typename F>
std::optional<ParseError> parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  return std::nullopt;
}

Graph petersen() {
  return build_graph(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 8}, {4, 9}, {5, 7},
                          {5, 8}, {6, 8}, {6, 9}, {7, 9}});
}

}  // namespace

TEST_CASE("DIMACS parse and write") {
  const std::string text = "c a triangle\nc second comment\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
  const auto doc = io::parse_dimacs(text);
  CHECK(doc.graph == gen::complete(3));
  const auto again = io::parse_dimacs(io::write_dimacs(doc));
  CHECK(again.graph == doc.graph);
  CHECK(io::parse_dimacs("p edge 4 0\n").graph.node_count() == 4);
  CHECK(io::parse_dimacs("p edge 2 1\r\ne 1 2\r\n").graph.edge_count() == 1);
}

TEST_CASE("DIMACS errors carry positions") {
  auto e = parse_error([] { io::parse_dimacs("p edge 4 1\ne 1 5\n"); });
  REQUIRE(e);
  CHECK(e->line() == 2);
  CHECK(e->column() == 5);
  e = parse_error([] { io::parse_dimacs("e 1 2\np edge 2 1\n"); });
  REQUIRE(e);
  CHECK(e->line() == 1);
  e = parse_error([] { io::parse_dimacs("p edge 3 2\ne 1 2\n"); });
  REQUIRE(e);
  e = parse_error([] { io::parse_dimacs("p col 3 0\n"); });
  REQUIRE(e);
  CHECK(e->column() == 3);
  CHECK(parse_error([] { io::parse_dimacs("p edge 3 1\ne 2 2\n"); }));
  CHECK(parse_error([] { io::parse_dimacs("p edge 3 1\ne 1 x\n"); }));
  CHECK(parse_error([] { io::parse_dimacs("p edge 3 0\np edge 3 0\n"); }));
  CHECK(parse_error([] { io::parse_dimacs("x\n"); }));
  CHECK(parse_error([] { io::parse_dimacs(""); }));
  CHECK(parse_error([] { io::parse_dimacs("p edge 0 0\n"); }));
}

TEST_CASE("graph6 matches networkx encodings") {
  CHECK(io::write_graph6(gen::complete(3)) == "Bw");
  CHECK(io::write_graph6(gen::path(4)) == "Ch");
  CHECK(io::write_graph6(gen::cycle(5)) == "Dhc");
  CHECK(io::write_graph6(build_graph(1, {})) == "@");
  CHECK(io::write_graph6(build_graph(2, {})) == "A?");
  CHECK(io::write_graph6(petersen()) == "IheA@GUAo");
  CHECK(io::parse_graph6("IheA@GUAo") == petersen());
  CHECK(io::parse_graph6(">>graph6<<Bw\n") == gen::complete(3));
}

TEST_CASE("graph6 long form against a networkx fixture") {
  const std::string data_dir = CHROMATICA_TEST_DATA;
  const std::string payload = io::read_text_file(data_dir + "/nx_gnp70.g6");
  std::vector<Edge> edges;
  std::istringstream in(io::read_text_file(data_dir + "/nx_gnp70.edges"));
  Node u, v;
  while (in >> u >> v) edges.push_back({u, v});
  const Graph expected = build_graph(70, edges);
  CHECK(io::parse_graph6(payload) == expected);
  CHECK(io::write_graph6(expected) + "\n" == payload);
  // 63 nodes is the first size needing the 4-byte node count
  const Graph big = gen::gnp(63, 0.5, Seed{2});
  CHECK(io::write_graph6(big).substr(0, 4) == "~??~");
  CHECK(io::parse_graph6(io::write_graph6(big)) == big);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK(parse_error([] { io::parse_graph6(""); }));
  CHECK(parse_error([] { io::parse_graph6("B"); }));      // truncated
  CHECK(parse_error([] { io::parse_graph6("Bx"); }));     // non-zero padding
  CHECK(parse_error([] { io::parse_graph6("Bww"); }));    // trailing data
  CHECK(parse_error([] { io::parse_graph6("B\x01"); }));  // out of range byte
  CHECK(parse_error([] { io::parse_graph6("?"); }));      // zero nodes
  CHECK(parse_error([] { io::parse_graph6("Bw\n\n"); }));
  const auto e = parse_error([] { io::parse_graph6("Dh\x7f"); });
  REQUIRE(e);
  CHECK(e->column() == 3);
}

TEST_CASE("graph6 round trip over every labelled graph with up to 5 nodes") {
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Edge> pairs;
    for (Node i = 0; i < static_cast<Node>(n); ++i) {
      for (Node j = i + 1; j < static_cast<Node>(n); ++j) pairs.push_back({i, j});
    }
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        if ((mask >> b) & 1U) edges.push_back(pairs[b]);
      }
      const Graph g = build_graph(n, edges);
      CHECK(io::parse_graph6(io::write_graph6(g)) == g);
      ++count;
    }
  }
  CHECK(count == 1099);
}

TEST_CASE("embedding documents") {
  const auto s = gen::sierpinski(2);
  io::GraphDocument doc;
  doc.graph = s.graph;
  doc.coordinates = s.coordinates;
  doc.rotation = rotation_from_coordinates(s);
  doc.metadata = {"s2", "test", 1347};
  const auto back = io::parse_embedding(io::write_embedding(doc));
  CHECK(back.graph == doc.graph);
  CHECK(back.coordinates == doc.coordinates);
  CHECK(back.rotation->rotation == doc.rotation->rotation);
  CHECK(back.metadata == doc.metadata);

  auto e = parse_error([] { io::parse_embedding("{\n  \"format\": ,\n}"); });
  REQUIRE(e);
  CHECK(e->line() == 2);
  CHECK(parse_error([] { io::parse_embedding("[]"); }));
  CHECK(parse_error([] { io::parse_embedding(R"({"format":"chromatica-embedding","version":2,"n":1,"edges":[]})"); }));
  CHECK(parse_error([] { io::parse_embedding(R"({"format":"chromatica-embedding","version":1,"n":2,"edges":[[0,2]]})"); }));
  CHECK(parse_error([] { io::parse_embedding(R"({"format":"chromatica-embedding","version":1,"n":2,"edges":[[0,1]],"coordinates":[[0,0]]})"); }));
  CHECK_THROWS_AS(io::parse_embedding(R"({"format":"chromatica-embedding","version":1,"n":2,"edges":[[0,1]],"coordinates":[[0,0],[0,0]]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(io::parse_embedding(R"({"format":"chromatica-embedding","version":1,"n":3,"edges":[[0,1],[1,2]],"rotation":[[1],[0],[1]]})"),
                  InvalidArgument);
  const auto minimal = io::parse_embedding(R"({"format":"chromatica-embedding","version":1,"n":2,"edges":[[1,0]]})");
  CHECK(minimal.graph.edge_count() == 1);
  CHECK_FALSE(minimal.coordinates.has_value());
}

TEST_CASE("random document round trips") {
  Rng rng(Seed{77});
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = 1 + rng.below(30);
    io::GraphDocument doc;
    doc.graph = gen::gnp(n, rng.uniform(), Seed{rng()});
    CHECK(io::parse_dimacs(io::write_dimacs(doc)).graph == doc.graph);
    std::vector<Point> coords;
    for (std::size_t i = 0; i < n; ++i) coords.push_back({rng.uniform() * 100 - 50, static_cast<double>(i)});
    doc.coordinates = coords;
    doc.metadata.name = "doc " + std::to_string(trial);
    const auto back = io::parse_embedding(io::write_embedding(doc));
    CHECK(back.graph == doc.graph);
    CHECK(back.coordinates == doc.coordinates);
    CHECK(back.metadata == doc.metadata);
  }
}

TEST_CASE("graph files by extension") {
  TempDir dir;
  io::GraphDocument doc;
  const auto d = gen::dodecahedral();
  doc.graph = d.graph;
  doc.coordinates = d.coordinates;
  for (const char* name : {"g.col", "g.g6", "g.emb", "g.txt"}) {
    const auto path = dir.path / name;
    io::write_graph_file(path, doc);
    CHECK(io::read_graph_file(path).graph == doc.graph);
  }
  CHECK(io::read_graph_file(dir.path / "g.emb").coordinates == doc.coordinates);
  CHECK_THROWS_AS(io::read_graph_file(dir.path / "missing.col"), InvalidArgument);
}

TEST_CASE("benchmark CSV") {
  CHECK(io::write_benchmark_csv({}) == std::string(io::kBenchmarkHeader) + "\n");
  CHECK(io::parse_benchmark_csv(io::write_benchmark_csv({})).empty());
  const io::BenchmarkRecord one{20, 0.5, 3, "dsatur", 5, 4, false, 12};
  const auto text = io::write_benchmark_csv({one});
  CHECK(text == "n,p,seed,algorithm,colours,lower_bound,optimal,millis\n20,0.5,3,dsatur,5,4,false,12\n");

  Rng rng(Seed{1});
  std::vector<io::BenchmarkRecord> records;
  for (int i = 0; i < 50; ++i) {
    records.push_back({10 + rng.below(5) * 10, rng.uniform(), rng(), i % 2 ? "hea" : "backtracking",
                       1 + rng.below(9), 1, rng.below(2) == 1, rng.below(1000)});
  }
  auto parsed = io::parse_benchmark_csv(io::write_benchmark_csv(records));
  REQUIRE(parsed.size() == records.size());
  const auto key = [](const io::BenchmarkRecord& r) { return std::tie(r.n, r.p, r.seed, r.algorithm); };
  std::sort(records.begin(), records.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  CHECK(parsed == records);

  CHECK(parse_error([] { io::parse_benchmark_csv("n,p\n"); }));
  CHECK(parse_error([] { io::parse_benchmark_csv(std::string(io::kBenchmarkHeader) + "\n1,2,3\n"); }));
  CHECK(parse_error([] { io::parse_benchmark_csv(std::string(io::kBenchmarkHeader) + "\n1,0.5,3,x,1,1,maybe,0\n"); }));
}

TEST_CASE("colouring files") {
  const auto c = make_colouring({0, 1, 2, 0}, ElementKind::Edge, {});
  const auto text = io::write_colouring(c);
  CHECK(text == "# k=3\n# kind=edge\n0 0\n1 1\n2 2\n3 0\n");
  const auto back = io::parse_colouring(text);
  CHECK(back.k == std::optional<std::size_t>(3));
  CHECK(back.kind == ElementKind::Edge);
  CHECK(back.labels == c.labels);
  CHECK(io::parse_colouring("1 5\n0 2\n").labels == Assignment{2, 5});
  CHECK(parse_error([] { io::parse_colouring("0 1\n0 2\n"); }));
  CHECK(parse_error([] { io::parse_colouring("0 1\n2 2\n"); }));
  CHECK(parse_error([] { io::parse_colouring("0 -1\n"); }));
  CHECK(parse_error([] { io::parse_colouring("# kind=volume\n0 1\n"); }));
}

TEST_CASE("House of Graphs client with a stub transport") {
  TempDir dir;
  const std::string payload = io::write_graph6(petersen());
  StubTransport stub({200, R"({"id": 660, "graph6": ")" + payload + R"(", "name": "Petersen"})"});
  const auto first = io::hog_fetch(660, dir.path, false, stub, "https://example.test/");
  CHECK(stub.calls == 1);
  CHECK(stub.last_url == "https://example.test/api/graphs/660");
  CHECK_FALSE(first.from_cache);
  CHECK(first.document.graph == petersen());
  CHECK(first.cache_file == dir.path / "hog-660.g6");
  CHECK(io::read_text_file(first.cache_file) == payload + "\n");

  const auto second = io::hog_fetch(660, dir.path, false, stub, "https://example.test");
  CHECK(stub.calls == 1);
  CHECK(second.from_cache);
  CHECK(second.document.graph == first.document.graph);
  CHECK(io::hog_fetch(660, dir.path, true, stub, "https://example.test").from_cache);
  CHECK(stub.calls == 1);

  CHECK_THROWS_AS(io::hog_fetch(661, dir.path, true, stub, "x"), NotCachedError);
  StubTransport missing({404, "not found"});
  CHECK_THROWS_AS(io::hog_fetch(661, dir.path, false, missing, "x"), NotFoundError);
  StubTransport broken({500, "oops"});
  CHECK_THROWS_AS(io::hog_fetch(661, dir.path, false, broken, "x"), NetworkError);
  StubTransport garbage({200, "not graph6 at all"});
  CHECK_THROWS_AS(io::hog_fetch(661, dir.path, false, garbage, "x"), NetworkError);
  CHECK_FALSE(fs::exists(dir.path / "hog-661.g6"));
  StubTransport bare({200, payload + "\n"});
  CHECK(io::hog_fetch(662, dir.path, false, bare, "x").document.graph == petersen());
}

TEST_CASE("House of Graphs endpoint configuration") {
  ::setenv("HOG_BASE_URL", "http://localhost:9/", 1);
  CHECK(io::hog_base_url() == "http://localhost:9/");
  CHECK(io::hog_graph_url(io::hog_base_url(), 1347) == "http://localhost:9/api/graphs/1347");
  ::unsetenv("HOG_BASE_URL");
  CHECK(io::hog_base_url() == "https://houseofgraphs.org");
  ::setenv("CHROMATICA_CACHE", "/tmp/somewhere", 1);
  CHECK(io::default_cache_dir() == fs::path("/tmp/somewhere"));
  ::unsetenv("CHROMATICA_CACHE");
}

TEST_CASE("concurrent fetches of distinct ids") {
  TempDir dir;
  const std::string payload = io::write_graph6(petersen());
  std::vector<std::thread> threads;
  std::atomic<int> ok{0};
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      StubTransport stub({200, payload});
      const auto r = io::hog_fetch(100 + static_cast<std::uint64_t>(t % 4), dir.path, false, stub, "x");
      ok += r.document.graph == petersen();
    });
  }
  for (auto& t : threads) t.join();
  CHECK(ok == 8);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir.path)) {
    CHECK(entry.path().extension() == ".g6");
    ++files;
  }
  CHECK(files == 4);
}

TEST_CASE("parsers survive random bytes") {
  Rng rng(Seed{2024});
  const std::string alphabet = "pec edg0123456789 \n\t{}[]\",:-.>graph6<?@ABCDEFGHIJKLMNOPQRSTUVWXYZ^_`abcdefghijklmnopqrstuvwxyz~#=k";
  std::size_t rejected = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto len = rng.below(64);
    std::string s(len, '\0');
    const bool raw = i % 2 == 0;
    for (auto& c : s) {
      c = raw ? static_cast<char>(rng.below(256)) : alphabet[rng.below(alphabet.size())];
    }
    for (int parser = 0; parser < 5; ++parser) {
      try {
        switch (parser) {
          case 0: io::parse_dimacs(s); break;
          case 1: io::parse_graph6(s); break;
          case 2: io::parse_embedding(s); break;
          case 3: io::parse_benchmark_csv(s); break;
          case 4: io::parse_colouring(s); break;
        }
      } catch (const Error&) {
        ++rejected;
      } catch (const std::exception& e) {
        FAIL("parser " << parser << " threw a non-library exception: " << e.what());
      }
    }
  }
  CHECK(rejected > 40000);
}
