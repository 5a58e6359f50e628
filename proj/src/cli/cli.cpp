#include "chromatica/cli.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "chromatica/analysis.hpp"
#include "chromatica/colouring.hpp"
#include "chromatica/error.hpp"
#include "chromatica/generators.hpp"
#include "chromatica/render.hpp"
#include "chromatica/transforms.hpp"

namespace chromatica::cli {
namespace {

namespace fs = std::filesystem;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::Parse: return kUsage;
    case ErrorKind::Structural: return kStructural;
    case ErrorKind::Network:
    case ErrorKind::NotFound:
    case ErrorKind::NotCached: return kNetwork;
  }
  return kUsage;
}

Algorithm algorithm_from(const std::string& name) {
  const auto a = parse_algorithm(name);
  if (!a) throw InvalidArgument("unknown algorithm '" + name + "' (greedy, dsatur, backtracking, hea)");
  return *a;
}

RotationSystem embedding_rotation(const io::GraphDocument& doc) {
  if (doc.rotation) return *doc.rotation;
  if (doc.coordinates) return rotation_from_coordinates({doc.graph, *doc.coordinates});
  throw InvalidArgument("face colouring needs an embedding (coordinates or a rotation system)");
}

std::optional<std::span<const Point>> coordinate_span(const io::GraphDocument& doc) {
  if (!doc.coordinates) return std::nullopt;
  return std::span<const Point>(*doc.coordinates);
}

io::GraphDocument embedded_document(EmbeddedGraph eg, std::string name) {
  io::GraphDocument doc;
  doc.rotation = rotation_from_coordinates(eg);
  doc.graph = std::move(eg.graph);
  doc.coordinates = std::move(eg.coordinates);
  doc.metadata.name = std::move(name);
  doc.metadata.source = "chromatica gen";
  return doc;
}

// ---- gen ------------------------------------------------------------------

struct GenOptions {
  std::string family;
  std::size_t n = 10;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::size_t level = 3;
  std::size_t rows = 3;
  std::size_t cols = 3;
  std::string output;
};

io::GraphDocument generate(const GenOptions& o) {
  namespace gen = generators;
  const auto plain = [&](Graph g) {
    io::GraphDocument doc;
    doc.graph = std::move(g);
    doc.metadata.name = o.family;
    doc.metadata.source = "chromatica gen";
    return doc;
  };
  if (o.family == "gnp") return plain(gen::gnp(o.n, o.p, Seed{o.seed}));
  if (o.family == "complete") return plain(gen::complete(o.n));
  if (o.family == "cycle") return plain(gen::cycle(o.n));
  if (o.family == "wheel") return plain(gen::wheel(o.n));
  if (o.family == "path") return plain(gen::path(o.n));
  if (o.family == "star") {
    if (o.n < 2) throw InvalidArgument("a star needs at least 2 nodes");
    return plain(gen::star(o.n - 1));
  }
  if (o.family == "tree") return embedded_document(gen::binary_tree(o.n), o.family);
  if (o.family == "square") return embedded_document(gen::square_lattice(o.rows, o.cols), o.family);
  if (o.family == "triangular") return embedded_document(gen::triangular_lattice(o.rows, o.cols), o.family);
  if (o.family == "hexagonal") return embedded_document(gen::hexagonal_lattice(o.rows, o.cols), o.family);
  if (o.family == "sierpinski") return embedded_document(gen::sierpinski(o.level), o.family);
  if (o.family == "dodecahedral") return embedded_document(gen::dodecahedral(), o.family);
  throw InvalidArgument("unknown family '" + o.family + "'");
}

int cmd_gen(const GenOptions& o, std::ostream& out) {
  const auto doc = generate(o);
  io::write_graph_file(o.output, doc);
  fmt::print(out, "{}: n={} m={}{} -> {}\n", o.family, doc.graph.node_count(), doc.graph.edge_count(),
             doc.coordinates ? " (embedded)" : "", o.output);
  return kOk;
}

// ---- fetch ----------------------------------------------------------------

struct FetchOptions {
  std::uint64_t id = 0;
  std::string cache_dir;
  bool offline = false;
  std::string output;
};

int cmd_fetch(const FetchOptions& o, std::ostream& out, io::Transport* transport) {
  io::HttpTransport http;
  const fs::path cache = o.cache_dir.empty() ? io::default_cache_dir() : fs::path(o.cache_dir);
  const auto result = io::hog_fetch(o.id, cache, o.offline, transport != nullptr ? *transport : http);
  const fs::path target = o.output.empty() ? result.cache_file : fs::path(o.output);
  if (!o.output.empty()) io::write_graph_file(target, result.document);
  fmt::print(out, "HoG {}: n={} m={} -> {}{}\n", o.id, result.document.graph.node_count(),
             result.document.graph.edge_count(), target.string(), result.from_cache ? " (cached)" : "");
  return kOk;
}

// ---- color ----------------------------------------------------------------

struct ColourCliOptions {
  std::string target;
  std::string input;
  std::string algorithm = "dsatur";
  std::uint64_t seed = 0;
  double time_limit = 0.0;
  std::optional<std::uint64_t> node_limit;
  std::uint64_t tabu_iterations = HeaParams{}.tabu_iterations_per_offspring;
  std::size_t population = HeaParams{}.population_size;
  std::string output;
};

ColourOptions colour_options(const ColourCliOptions& o) {
  ColourOptions options;
  options.node_limit = o.node_limit;
  options.hea.seed = Seed{o.seed};
  options.hea.time_limit = o.time_limit;
  options.hea.tabu_iterations_per_offspring = o.tabu_iterations;
  options.hea.population_size = o.population;
  return options;
}

int cmd_color(const ColourCliOptions& o, std::ostream& out) {
  const auto kind = parse_element_kind(o.target);
  if (!kind) throw InvalidArgument("target must be nodes, edges or faces");
  const Algorithm algorithm = algorithm_from(o.algorithm);
  const auto doc = io::read_graph_file(o.input);
  const auto options = colour_options(o);

  ColourResult result;
  switch (*kind) {
    case ElementKind::Node: result = colour_nodes(doc.graph, algorithm, options); break;
    case ElementKind::Edge: result = colour_edges(doc.graph, algorithm, options); break;
    case ElementKind::Face:
      result =
          colour_faces(doc.graph, embedding_rotation(doc), algorithm, options, coordinate_span(doc)).result;
      break;
  }
  if (!o.output.empty()) io::write_text_file_atomic(o.output, io::write_colouring(result.colouring));
  fmt::print(out, "k={} lower={} optimal={}\n", result.colouring.k, result.certificate.lower_bound,
             result.certificate.optimal ? "true" : "false");
  return kOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
  std::string graph;
  std::string colouring;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const auto doc = io::read_graph_file(o.graph);
  const auto file = io::parse_colouring(io::read_text_file(o.colouring));
  Colouring colouring;
  colouring.labels = file.labels;
  colouring.kind = file.kind;
  std::optional<FaceSet> faces;
  if (file.kind == ElementKind::Face) faces = trace_faces(doc.graph, embedding_rotation(doc));
  const auto report = verify(doc.graph, colouring, faces ? &*faces : nullptr);
  if (report.valid) {
    fmt::print(out, "valid {} colouring, k={}\n", to_string(file.kind), report.k);
    return kOk;
  }
  fmt::print(out, "invalid {} colouring: {} clash{}\n", to_string(file.kind), report.clashes.size(),
             report.clashes.size() == 1 ? "" : "es");
  for (const Clash& c : report.clashes) fmt::print(out, "clash {} {}\n", c.first, c.second);
  return kVerifyFailed;
}

// ---- render ---------------------------------------------------------------

struct RenderOptions {
  std::string graph;
  std::string colouring;
  std::string layout;
  std::uint64_t seed = 0;
  std::size_t iterations = render::SpringParams{}.iterations;
  bool hide_nodes = false;
  bool hide_unbounded = false;
  double width = 600.0;
  double height = 600.0;
  double edge_width = 1.5;
  double node_radius = 5.0;
  std::string output;
  std::string dot;
};

int cmd_render(const RenderOptions& o, std::ostream& out) {
  const auto doc = io::read_graph_file(o.graph);
  const Graph& g = doc.graph;
  std::optional<Colouring> colouring;
  if (!o.colouring.empty()) {
    const auto file = io::parse_colouring(io::read_text_file(o.colouring));
    colouring = make_colouring(file.labels, file.kind, {});
  }

  render::LayoutStyle style = doc.coordinates ? render::LayoutStyle::Provided : render::LayoutStyle::Spring;
  if (!o.layout.empty()) {
    const auto parsed = render::parse_layout_style(o.layout);
    if (!parsed) throw InvalidArgument("unknown layout '" + o.layout + "'");
    style = *parsed;
  }
  const bool faces = colouring && colouring->kind == ElementKind::Face;
  if (faces && style != render::LayoutStyle::Provided) {
    throw InvalidArgument("face colourings are drawn on the embedding's own coordinates (--layout provided)");
  }
  if ((style == render::LayoutStyle::Circular || style == render::LayoutStyle::Multipartite) &&
      (!colouring || colouring->kind != ElementKind::Node)) {
    throw InvalidArgument(fmt::format("the {} layout needs a node colouring", render::to_string(style)));
  }

  std::vector<Point> positions;
  switch (style) {
    case render::LayoutStyle::Provided:
      if (!doc.coordinates) throw InvalidArgument("'" + o.graph + "' carries no coordinates");
      positions = *doc.coordinates;
      break;
    case render::LayoutStyle::Spring:
      positions = render::spring_layout(g, Seed{o.seed}, {o.iterations}).positions;
      break;
    case render::LayoutStyle::Circular: positions = render::circular_grouped_layout(g, *colouring).positions; break;
    case render::LayoutStyle::Multipartite: positions = render::multipartite_layout(g, *colouring).positions; break;
  }

  render::Scene scene;
  scene.graph = &g;
  scene.positions = positions;
  std::optional<DualGraphResult> dual;
  if (colouring) {
    switch (colouring->kind) {
      case ElementKind::Node: scene.node_colouring = &*colouring; break;
      case ElementKind::Edge: scene.edge_colouring = &*colouring; break;
      case ElementKind::Face:
        dual = dual_graph(g, embedding_rotation(doc), coordinate_span(doc));
        scene.face_colouring = &*colouring;
        scene.faces = &dual->faces;
        scene.unbounded_face = dual->unbounded_face;
        break;
    }
  }
  render::SvgOptions svg;
  svg.width = o.width;
  svg.height = o.height;
  svg.edge_width = o.edge_width;
  svg.node_radius = o.node_radius;
  svg.show_nodes = !o.hide_nodes;
  svg.show_unbounded = !o.hide_unbounded;
  io::write_text_file_atomic(o.output, render::render_svg(scene, svg));
  if (!o.dot.empty()) {
    io::write_text_file_atomic(o.dot, render::write_dot(g, scene.node_colouring, scene.edge_colouring));
  }
  fmt::print(out, "{} layout, n={} m={} -> {}\n", render::to_string(style), g.node_count(), g.edge_count(),
             o.output);
  return kOk;
}

// ---- bench ----------------------------------------------------------------

struct BenchOptions {
  std::vector<std::size_t> n{20, 30};
  std::vector<double> p{0.5};
  std::size_t trials = 5;
  std::vector<std::string> algorithms{"dsatur", "backtracking"};
  std::uint64_t seed = 0;
  unsigned jobs = 0;
  std::optional<std::uint64_t> node_limit;
  std::uint64_t tabu_iterations = HeaParams{}.tabu_iterations_per_offspring;
  std::uint64_t max_cycles = HeaParams{}.max_cycles;
  double time_limit = 0.0;
  bool record_time = false;
  std::string output;
};

struct BenchTask {
  std::size_t n;
  double p;
  std::size_t trial;
};

int cmd_bench(const BenchOptions& o, std::ostream& out) {
  if (o.trials == 0) throw InvalidArgument("--trials must be at least 1");
  for (double p : o.p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument(fmt::format("p={} is outside [0, 1]", p));
  }
  std::vector<Algorithm> algorithms;
  for (const auto& name : o.algorithms) algorithms.push_back(algorithm_from(name));

  std::vector<BenchTask> tasks;
  for (std::size_t n : o.n) {
    for (double p : o.p) {
      for (std::size_t t = 0; t < o.trials; ++t) tasks.push_back({n, p, t});
    }
  }
  const bool timed = o.record_time || o.time_limit > 0;
  std::vector<std::vector<io::BenchmarkRecord>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  const auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        const auto& task = tasks[i];
        const auto seed = instance_seed(o.seed, task.n, task.p, task.trial);
        const Graph g = generators::gnp(task.n, task.p, Seed{seed});
        for (Algorithm algorithm : algorithms) {
          const std::string name(to_string(algorithm));
          ColourOptions options;
          options.node_limit = o.node_limit;
          options.hea.seed = Seed{algorithm_seed(seed, name)};
          options.hea.tabu_iterations_per_offspring = o.tabu_iterations;
          options.hea.max_cycles = o.max_cycles;
          options.hea.time_limit = o.time_limit;
          const auto start = std::chrono::steady_clock::now();
          const auto result = colour_nodes(g, algorithm, options);
          const auto elapsed = std::chrono::steady_clock::now() - start;
          io::BenchmarkRecord record;
          record.n = task.n;
          record.p = task.p;
          record.seed = seed;
          record.algorithm = name;
          record.colours = result.colouring.k;
          record.lower_bound = result.certificate.lower_bound;
          record.optimal = result.certificate.optimal;
          record.millis =
              timed ? static_cast<std::uint64_t>(
                          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count())
                    : 0;
          slots[i].push_back(std::move(record));
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    }
  };

  unsigned jobs = o.jobs != 0 ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<io::BenchmarkRecord> records;
  for (auto& slot : slots) std::move(slot.begin(), slot.end(), std::back_inserter(records));

  // mean colours per (n, p, algorithm)
  std::map<std::tuple<std::size_t, double, std::string>, std::pair<double, std::size_t>> means;
  for (const auto& r : records) {
    auto& [sum, count] = means[{r.n, r.p, r.algorithm}];
    sum += static_cast<double>(r.colours);
    ++count;
  }
  const std::size_t rows = records.size();
  const std::string csv = io::write_benchmark_csv(std::move(records));
  if (o.output.empty() || o.output == "-") {
    out << csv;
  } else {
    io::write_text_file_atomic(o.output, csv);
    for (const auto& [key, value] : means) {
      fmt::print(out, "n={} p={} {}: mean colours {:.2f} over {} runs\n", std::get<0>(key), std::get<1>(key),
                 std::get<2>(key), value.first / static_cast<double>(value.second), value.second);
    }
    fmt::print(out, "{} rows -> {}\n", rows, o.output);
  }
  return kOk;
}

// ---- info -----------------------------------------------------------------

int cmd_info(const std::string& input, std::ostream& out) {
  const auto doc = io::read_graph_file(input);
  const Graph& g = doc.graph;
  const auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  if (!doc.metadata.name.empty()) fmt::print(out, "name: {}\n", doc.metadata.name);
  fmt::print(out, "nodes: {}\nedges: {}\nmax degree: {}\n", g.node_count(), g.edge_count(), max_degree(g));
  const bool connected = is_connected(g);
  fmt::print(out, "connected: {}\nbipartite: {}\neulerian: {}\n", yes_no(connected), yes_no(is_bipartite(g).has_value()),
             yes_no(is_eulerian(g)));
  fmt::print(out, "clique lower bound: {}\n", greedy_clique(g).size());
  if (doc.coordinates || doc.rotation) {
    fmt::print(out, "embedding: {}{}\n", doc.coordinates ? "coordinates" : "",
               doc.rotation ? (doc.coordinates ? " + rotation" : "rotation") : "");
    if (connected) {
      const auto faces = trace_faces(g, embedding_rotation(doc));
      const auto n = static_cast<std::int64_t>(g.node_count());
      const auto m = static_cast<std::int64_t>(g.edge_count());
      const auto f = static_cast<std::int64_t>(faces.face_count());
      fmt::print(out, "faces: {}\neuler n-m+f=2: {}\n", f, yes_no(euler_check(n, m, f)));
    }
  }
  return kOk;
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t master, std::size_t n, double p, std::size_t trial) {
  std::uint64_t h = hash_combine(master, n);
  h = hash_combine(h, std::bit_cast<std::uint64_t>(p));
  return hash_combine(h, trial);
}

std::uint64_t algorithm_seed(std::uint64_t instance, std::string_view algorithm) {
  return hash_combine(instance, fnv1a(algorithm));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, io::Transport* transport) {
  CLI::App app{"Graph colouring toolkit: nodes, edges and faces", "chromatica"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph family");
  gen_cmd->add_option("family", gen.family,
                      "gnp, complete, cycle, wheel, path, star, tree, square, triangular, hexagonal, sierpinski, "
                      "dodecahedral")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Node count");
  gen_cmd->add_option("--p", gen.p, "Edge probability (gnp)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed (gnp)");
  gen_cmd->add_option("--level", gen.level, "Subdivision level (sierpinski)");
  gen_cmd->add_option("--rows", gen.rows, "Lattice rows");
  gen_cmd->add_option("--cols", gen.cols, "Lattice columns");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (.col, .g6, .emb)")->required();

  FetchOptions fetch;
  auto* fetch_cmd = app.add_subcommand("fetch", "Download a House of Graphs entry");
  fetch_cmd->add_option("id", fetch.id, "HoG identifier")->required();
  fetch_cmd->add_option("--cache-dir", fetch.cache_dir, "Cache directory (default $CHROMATICA_CACHE)");
  fetch_cmd->add_flag("--offline", fetch.offline, "Never touch the network");
  fetch_cmd->add_option("-o,--output", fetch.output, "Also write the graph here");

  ColourCliOptions colour;
  auto* colour_cmd = app.add_subcommand("color", "Colour nodes, edges or faces");
  colour_cmd->alias("colour");
  colour_cmd->add_option("target", colour.target, "nodes, edges or faces")->required();
  colour_cmd->add_option("input", colour.input, "Graph or embedding file")->required();
  colour_cmd->add_option("-a,--algorithm", colour.algorithm, "greedy, dsatur, backtracking (exact), hea");
  colour_cmd->add_option("--seed", colour.seed, "Seed for hea");
  colour_cmd->add_option("--time-limit", colour.time_limit, "Wall-clock limit for hea in seconds (0 = none)");
  colour_cmd->add_option("--node-limit", colour.node_limit, "Search node budget for backtracking");
  colour_cmd->add_option("--tabu-iterations", colour.tabu_iterations, "Tabu iterations per hea offspring");
  colour_cmd->add_option("--population", colour.population, "hea population size");
  colour_cmd->add_option("-o,--output", colour.output, "Write the colouring here");

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Check a colouring file against a graph");
  verify_cmd->add_option("graph", verify_opts.graph, "Graph or embedding file")->required();
  verify_cmd->add_option("colouring", verify_opts.colouring, "Colouring file")->required();

  RenderOptions render_opts;
  auto* render_cmd = app.add_subcommand("render", "Draw a graph and optional colouring as SVG");
  render_cmd->add_option("graph", render_opts.graph, "Graph or embedding file")->required();
  render_cmd->add_option("-c,--colouring,--coloring", render_opts.colouring, "Colouring file");
  render_cmd->add_option("--layout", render_opts.layout, "spring, circular, multipartite or provided");
  render_cmd->add_option("--seed", render_opts.seed, "Spring layout seed");
  render_cmd->add_option("--iterations", render_opts.iterations, "Spring layout iterations");
  render_cmd->add_flag("--hide-nodes", render_opts.hide_nodes, "Do not draw nodes");
  render_cmd->add_flag("--hide-unbounded", render_opts.hide_unbounded, "Leave the unbounded face unfilled");
  render_cmd->add_option("--width", render_opts.width, "Canvas width");
  render_cmd->add_option("--height", render_opts.height, "Canvas height");
  render_cmd->add_option("--edge-width", render_opts.edge_width, "Edge stroke width");
  render_cmd->add_option("--node-radius", render_opts.node_radius, "Node radius");
  render_cmd->add_option("-o,--output", render_opts.output, "SVG output file")->required();
  render_cmd->add_option("--dot", render_opts.dot, "Also write Graphviz DOT here");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Colour batches of G(n, p) graphs into a CSV");
  bench_cmd->add_option("--n", bench.n, "Node counts")->delimiter(',');
  bench_cmd->add_option("--p", bench.p, "Edge probabilities")->delimiter(',');
  bench_cmd->add_option("--trials", bench.trials, "Graphs per (n, p)");
  bench_cmd->add_option("-a,--algorithms", bench.algorithms, "Algorithms to run")->delimiter(',');
  bench_cmd->add_option("--seed", bench.seed, "Master seed");
  bench_cmd->add_option("-j,--jobs", bench.jobs, "Worker threads (0 = available parallelism)");
  bench_cmd->add_option("--node-limit", bench.node_limit, "Search node budget for backtracking");
  bench_cmd->add_option("--tabu-iterations", bench.tabu_iterations, "Tabu iterations per hea offspring");
  bench_cmd->add_option("--max-cycles", bench.max_cycles, "hea offspring budget");
  bench_cmd->add_option("--time-limit", bench.time_limit, "Wall-clock limit per hea run in seconds (0 = none)");
  bench_cmd->add_flag("--record-time", bench.record_time, "Record run times (otherwise millis is 0)");
  bench_cmd->add_option("-o,--output", bench.output, "CSV output file (default stdout)");

  std::string info_input;
  auto* info_cmd = app.add_subcommand("info", "Summarise a graph file");
  info_cmd->add_option("graph", info_input, "Graph or embedding file")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*fetch_cmd) return cmd_fetch(fetch, out, transport);
    if (*colour_cmd) return cmd_color(colour, out);
    if (*verify_cmd) return cmd_verify(verify_opts, out);
    if (*render_cmd) return cmd_render(render_opts, out);
    if (*bench_cmd) return cmd_bench(bench, out);
    if (*info_cmd) return cmd_info(info_input, out);
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  }
  return kUsage;
}

}  // namespace chromatica::cli
