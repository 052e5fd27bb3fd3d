#include "obstructionist/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "obstructionist/catalog.hpp"
#include "obstructionist/embed.hpp"
#include "obstructionist/generate.hpp"
#include "obstructionist/graph_io.hpp"
#include "obstructionist/iso.hpp"
#include "obstructionist/obstruction.hpp"
#include "obstructionist/parallel.hpp"

namespace obstructionist::cli {

namespace {

using nlohmann::json;

class UsageFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "table";
  std::string out;
  int threads = 0;
  std::string graph;
  std::string surface;
  std::size_t b1_max = 8;
  std::size_t max_vertices = 0;
  int edges = 1;
  std::size_t girth = 4;
  bool simple = false;
  bool verify = false;
  bool multigraphs = false;
  std::string corpus;
};

struct LoadedGraph {
  MultiGraph graph;
  std::string name;
};

LoadedGraph load(const std::string& arg) {
  try {
    const std::string name = catalog::canonical_name(arg);
    return {catalog::build(name).graph, name};
  } catch (const catalog::UnknownGraph&) {
  }
  if (!std::filesystem::exists(arg))
    throw UsageFailure("'" + arg + "' is neither a catalog name nor a readable graph file");
  return {io::read_graph_file(arg), std::filesystem::path(arg).filename().string()};
}

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw UsageFailure("--format " + c.format + " is not available here (use " + list + ")");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::size_t> descending(std::vector<std::size_t> xs) {
  std::sort(xs.rbegin(), xs.rend());
  return xs;
}

std::string join_sizes(std::vector<std::size_t> xs) {
  xs = descending(std::move(xs));
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

json graph_json(const MultiGraph& g) {
  json edges = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) edges.push_back({g.label(g.edge(e).u), g.label(g.edge(e).v)});
  json vertices = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.label(v));
  return {{"vertices", vertices}, {"edges", edges}};
}

std::string render_graph(const MultiGraph& g, const std::string& format, const std::string& name) {
  if (format == "dot") return io::to_dot(g, {}, "G");
  if (format == "sparse6") return io::to_sparse6(g) + "\n";
  if (format == "json") {
    json j = graph_json(g);
    j["name"] = name;
    return j.dump(2) + "\n";
  }
  return io::to_edge_list(g);
}

std::vector<std::vector<std::string>> orbit_names(const MultiGraph& g, const std::vector<std::vector<EdgeId>>& orbits) {
  std::vector<std::vector<std::string>> out;
  for (const auto& orbit : orbits) {
    std::vector<std::string> names;
    for (EdgeId e : orbit) names.push_back(g.edge_name(e));
    out.push_back(std::move(names));
  }
  return out;
}

std::string brace(const std::vector<std::string>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out + "}";
}

// ---- subcommands ---------------------------------------------------------

int cmd_catalog(const Config& c, std::ostream& out) {
  if (c.verify) {
    require_format(c, {"table", "json"});
    std::vector<std::string> names = c.graph.empty() ? catalog::names()
                                                     : std::vector<std::string>{catalog::canonical_name(c.graph)};
    bool ok = true;
    json reports = json::array();
    std::ostringstream table;
    for (const auto& name : names) {
      const auto report = catalog::verify_fingerprints(catalog::build(name));
      ok = ok && report.ok();
      json checks = json::array();
      for (const auto& check : report.checks) {
        checks.push_back(
            {{"property", check.property}, {"expected", check.expected}, {"actual", check.actual}, {"ok", check.ok}});
        table << (check.ok ? "ok    " : "FAIL  ") << name << "  " << check.property << ": expected "
              << check.expected << ", got " << check.actual << '\n';
      }
      reports.push_back({{"name", name}, {"checks", checks}, {"ok", report.ok()}});
    }
    if (c.format == "json") out << json{{"catalog", reports}, {"ok", ok}}.dump(2) << '\n';
    else out << table.str() << (ok ? "all fingerprints match\n" : "fingerprint mismatch\n");
    return ok ? Success : VerificationFailed;
  }
  if (!c.graph.empty()) {
    const auto entry = catalog::build(c.graph);
    if (c.format == "json") {
      json j = graph_json(entry.graph);
      j["name"] = entry.name;
      j["construction"] = entry.construction;
      out << j.dump(2) << '\n';
    } else {
      if (c.format == "table") out << "# " << entry.name << ": " << entry.construction << '\n';
      out << render_graph(entry.graph, c.format, entry.name);
    }
    return Success;
  }
  require_format(c, {"table", "json"});
  json list = json::array();
  std::ostringstream table;
  table << "name  V   E   b0  b1  construction\n";
  for (const auto& name : catalog::names()) {
    const auto entry = catalog::build(name);
    const auto& g = entry.graph;
    list.push_back({{"name", name},
                    {"vertices", g.vertex_count()},
                    {"edges", g.edge_count()},
                    {"b0", component_count(g)},
                    {"b1", betti(g)},
                    {"construction", entry.construction}});
    std::ostringstream row;
    row << std::left << std::setw(6) << name << std::setw(4) << g.vertex_count() << std::setw(4) << g.edge_count()
        << std::setw(4) << component_count(g) << std::setw(4) << betti(g) << entry.construction;
    table << row.str() << '\n';
  }
  if (c.format == "json") out << list.dump(2) << '\n';
  else out << table.str();
  return Success;
}

int cmd_info(const Config& c, std::ostream& out) {
  require_format(c, {"table", "json"});
  const auto [g, name] = load(c.graph);
  const auto inv = invariants(g);
  std::vector<std::string> cut;
  for (EdgeId e : inv.edge_connectivity.edges) cut.push_back(g.edge_name(e));
  const auto orbits = iso::edge_orbits(g);
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits) sizes.push_back(o.size());
  const auto aut = iso::automorphism_group(g);
  const auto form = iso::canonical_form(g);
  const auto match = catalog::identify(form);

  json j = {{"name", name},
            {"vertices", g.vertex_count()},
            {"edges", g.edge_count()},
            {"b0", inv.b0},
            {"b1", inv.b1},
            {"girth", inv.girth ? json(*inv.girth) : json()},
            {"edge_connectivity", inv.edge_connectivity.size},
            {"minimum_cut", cut},
            {"cyclically_4_connected", inv.cyclically_4_connected ? json(*inv.cyclically_4_connected) : json()},
            {"cubic", is_cubic(g)},
            {"simple", is_simple(g)},
            {"loops", loop_count(g)},
            {"automorphisms", aut.order},
            {"edge_orbit_sizes", descending(sizes)},
            {"edge_orbits", orbit_names(g, orbits)},
            {"cycles", {{"3", iso::count_cycles(g, 3)}, {"4", iso::count_cycles(g, 4)}, {"5", iso::count_cycles(g, 5)}}},
            {"catalog_match", match ? json(*match) : json()},
            {"canonical_form", form.hex()}};
  if (c.format == "json") {
    out << j.dump(2) << '\n';
    return Success;
  }
  out << "name: " << name << '\n'
      << "vertices: " << g.vertex_count() << '\n'
      << "edges: " << g.edge_count() << '\n'
      << "b0: " << inv.b0 << '\n'
      << "b1: " << inv.b1 << '\n'
      << "girth: " << (inv.girth ? std::to_string(*inv.girth) : "none") << '\n'
      << "edge connectivity: " << inv.edge_connectivity.size << '\n'
      << "minimum cut: " << brace(cut) << '\n';
  if (inv.cyclically_4_connected) out << "cyclically 4-connected: " << yes_no(*inv.cyclically_4_connected) << '\n';
  out << "cubic: " << yes_no(is_cubic(g)) << '\n'
      << "simple: " << yes_no(is_simple(g)) << '\n'
      << "automorphisms: " << aut.order << '\n'
      << "edge orbit sizes: " << join_sizes(sizes) << '\n';
  for (const auto& names : orbit_names(g, orbits)) out << "  [" << names.front() << "] " << brace(names) << '\n';
  out << "3-cycles: " << iso::count_cycles(g, 3) << '\n'
      << "4-cycles: " << iso::count_cycles(g, 4) << '\n'
      << "5-cycles: " << iso::count_cycles(g, 5) << '\n'
      << "catalog match: " << match.value_or("none") << '\n'
      << "canonical form: " << form.hex() << '\n';
  return Success;
}

int cmd_genus(const Config& c, std::ostream& out) {
  require_format(c, {"table", "json", "dot"});
  const auto [g, name] = load(c.graph);
  if (c.format == "dot") {
    if (c.surface.empty()) throw UsageFailure("--format dot needs --surface to pick the witness embedding");
    const auto s = embed::parse_surface(c.surface);
    if (!is_connected(g)) throw UsageFailure("witness embeddings need a connected graph");
    if (!embed::embeds_in(g, s)) {
      out << "// " << name << " does not embed in the " << embed::to_string(s) << '\n' << io::to_dot(g);
      return VerificationFailed;
    }
    const auto faces = s == embed::SurfaceKind::ProjectivePlane ? embed::min_euler_genus_embedding(g).report.faces
                                                                : embed::min_genus_embedding(g).report.faces;
    out << io::to_dot(g, faces, "G");
    return Success;
  }
  const std::size_t og = embed::orientable_genus(g);
  const std::size_t eg = embed::euler_genus(g);
  json j = {{"name", name},
            {"orientable_genus", og},
            {"euler_genus", eg},
            {"planar", og == 0},
            {"projective_planar", eg <= 1},
            {"toroidal", og <= 1}};
  int status = Success;
  if (!c.surface.empty()) {
    const auto s = embed::parse_surface(c.surface);
    const bool embeds = embed::embeds_in(g, s);
    j["surface"] = embed::to_string(s);
    j["embeds"] = embeds;
    if (embeds && is_connected(g) && g.edge_count() > 0) {
      if (s == embed::SurfaceKind::ProjectivePlane) {
        const auto w = embed::min_euler_genus_embedding(g);
        j["witness"] = embed::to_json(g, w.rotation, w.report);
      } else {
        const auto w = embed::min_genus_embedding(g);
        j["witness"] = embed::to_json(g, w.rotation, w.report);
      }
    }
  }
  if (c.format == "json") {
    out << j.dump(2) << '\n';
    return status;
  }
  out << "name: " << name << '\n'
      << "orientable genus: " << og << '\n'
      << "euler genus: " << eg << '\n'
      << "planar: " << yes_no(og == 0) << '\n'
      << "projective planar: " << yes_no(eg <= 1) << '\n'
      << "toroidal: " << yes_no(og <= 1) << '\n';
  if (j.contains("embeds")) {
    out << "embeds in " << j["surface"].get<std::string>() << ": " << yes_no(j["embeds"].get<bool>()) << '\n';
    if (j.contains("witness"))
      out << "witness: " << j["witness"]["face_count"].get<std::size_t>() << " faces, "
          << j["witness"]["surface"].get<std::string>() << '\n';
  }
  return status;
}

int cmd_embed_count(const Config& c, std::ostream& out) {
  require_format(c, {"table", "json"});
  const auto [g, name] = load(c.graph);
  const auto classes = embed::torus_embedding_classes(g);
  if (c.format == "json") {
    json list = json::array();
    for (const auto& cls : classes) list.push_back({{"members", cls.members}, {"face_lengths", cls.face_lengths}});
    out << json{{"name", name}, {"torus_embedding_classes", classes.size()}, {"classes", list}}.dump(2) << '\n';
    return Success;
  }
  out << classes.size() << '\n';
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::string lengths;
    for (auto l : classes[i].face_lengths) lengths += (lengths.empty() ? "" : ",") + std::to_string(l);
    out << "  class " << i + 1 << ": " << classes[i].members << " rotation systems, face lengths {" << lengths
        << "}\n";
  }
  return Success;
}

int cmd_orbits(const Config& c, std::ostream& out) {
  require_format(c, {"table", "json"});
  const auto [g, name] = load(c.graph);
  const auto edge = orbit_names(g, iso::edge_orbits(g));
  std::vector<std::vector<std::string>> vertex;
  for (const auto& orbit : iso::vertex_orbits(g)) {
    std::vector<std::string> labels;
    for (VertexId v : orbit) labels.push_back(g.label(v));
    vertex.push_back(std::move(labels));
  }
  if (c.format == "json") {
    out << json{{"name", name}, {"vertex_orbits", vertex}, {"edge_orbits", edge}}.dump(2) << '\n';
    return Success;
  }
  out << "vertex orbits:\n";
  for (const auto& o : vertex) out << "  " << o.size() << "  " << brace(o) << '\n';
  out << "edge orbits:\n";
  for (const auto& o : edge) out << "  " << o.size() << "  [" << o.front() << "] " << brace(o) << '\n';
  return Success;
}

int cmd_candidates(const Config& c, std::ostream& out) {
  require_format(c, {"table", "json", "sparse6"});
  const auto [g, name] = load(c.graph);
  const auto list = generate::enumerate_augmentations(g, c.edges, c.girth);
  if (c.format == "sparse6") {
    for (const auto& a : list) out << io::to_sparse6(a.graph) << '\n';
    return Success;
  }
  json rows = json::array();
  std::ostringstream table;
  table << name << " plus " << c.edges << (c.edges == 1 ? " edge" : " edges") << ", girth >= " << c.girth << ": "
        << list.size() << " classes\n";
  for (const auto& a : list) {
    const bool toroidal = embed::embeds_in(a.graph, embed::SurfaceKind::Torus);
    const auto match = catalog::identify(a.form);
    std::string construction;
    for (const auto& d : a.descriptions) construction += (construction.empty() ? "" : ", ") + d;
    rows.push_back({{"construction", a.descriptions},
                    {"members", a.members},
                    {"girth", girth_or_infinite(a.graph)},
                    {"b1", betti(a.graph)},
                    {"toroidal", toroidal},
                    {"catalog_match", match ? json(*match) : json()},
                    {"canonical_form", a.form.hex()}});
    table << "  " << construction << "  members " << a.members << "  girth " << girth_or_infinite(a.graph)
          << "  toroidal " << yes_no(toroidal) << (match ? "  " + *match : "") << '\n';
  }
  if (c.format == "json") out << json{{"name", name}, {"edges_added", c.edges}, {"min_girth", c.girth},
                                      {"classes", rows}}.dump(2)
                              << '\n';
  else out << table.str();
  return Success;
}

int cmd_verify_obstruction(const Config& c, std::ostream& out) {
  require_format(c, {"table", "json"});
  const auto [g, name] = load(c.graph);
  const auto s = embed::parse_surface(c.surface.empty() ? "torus" : c.surface);
  const auto verdict = obstruction::is_obstruction(g, s);
  if (c.format == "json") {
    json j = obstruction::to_json(verdict);
    j["name"] = name;
    out << j.dump(2) << '\n';
  } else {
    out << "graph: " << name << '\n' << obstruction::to_table(verdict);
  }
  return verdict.is_obstruction() ? Success : VerificationFailed;
}

int cmd_replay(const Config& c, std::ostream& out) {
  require_format(c, {"table", "json"});
  std::vector<obstruction::Section> sections;
  if (c.graph.empty() || c.graph == "all") sections = obstruction::all_sections();
  else sections.push_back(obstruction::parse_section(c.graph));
  bool ok = true;
  json reports = json::array();
  std::ostringstream table;
  for (auto s : sections) {
    const auto report = obstruction::replay_section(s);
    ok = ok && report.ok();
    reports.push_back(obstruction::to_json(report));
    table << obstruction::to_table(report) << '\n';
  }
  if (c.format == "json") out << (reports.size() == 1 ? reports[0] : reports).dump(2) << '\n';
  else out << table.str() << (ok ? "all replays agree\n" : "replay mismatch\n");
  return ok ? Success : VerificationFailed;
}

int cmd_classify(const Config& c, std::ostream& out) {
  require_format(c, {"table", "json"});
  const auto report = c.multigraphs ? obstruction::classify_multigraphs(c.b1_max) : obstruction::classify_all(c.b1_max);
  if (c.format == "json") out << obstruction::to_json(report).dump(2) << '\n';
  else out << obstruction::to_table(report);
  return report.ok() ? Success : VerificationFailed;
}

int cmd_gen_cubic(const Config& c, std::ostream& out) {
  require_format(c, {"table", "json", "sparse6"});
  if (!c.corpus.empty()) {
    if (c.max_vertices == 0) throw UsageFailure("--corpus needs --max-vertices");
    const auto rows = generate::write_corpus(c.corpus, c.max_vertices);
    for (const auto& r : rows) out << r.file << "  " << r.count << '\n';
    return Success;
  }
  std::vector<MultiGraph> graphs;
  if (c.max_vertices > 0) graphs = generate::generate_connected_cubic(c.max_vertices, c.simple);
  else graphs = generate::generate_all_cubic_b1_le(c.b1_max, !c.multigraphs);
  if (c.format == "sparse6") {
    for (const auto& g : graphs) out << io::to_sparse6(g) << '\n';
    return Success;
  }
  std::map<std::size_t, std::size_t> by_vertices;
  for (const auto& g : graphs) ++by_vertices[g.vertex_count()];
  if (c.format == "json") {
    json counts = json::object();
    for (auto [n, k] : by_vertices) counts[std::to_string(n)] = k;
    out << json{{"total", graphs.size()}, {"by_vertices", counts}}.dump(2) << '\n';
    return Success;
  }
  for (auto [n, k] : by_vertices) out << n << " vertices: " << k << '\n';
  out << "total: " << graphs.size() << '\n';
  return Success;
}

int cmd_convert(const Config& c, std::ostream& out) {
  std::vector<MultiGraph> graphs;
  std::ifstream probe(c.graph);
  if (!probe) throw UsageFailure("cannot open '" + c.graph + "'");
  std::string first;
  while (std::getline(probe, first) && first.empty()) {
  }
  if (!first.empty() && (first.front() == ':' || first.starts_with(">>sparse6<<"))) {
    std::ifstream in(c.graph);
    graphs = io::read_sparse6_stream(in);
  } else {
    graphs.push_back(io::read_graph_file(c.graph));
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (c.format == "table" && i > 0) out << '\n';
    out << render_graph(graphs[i], c.format, std::filesystem::path(c.graph).filename().string());
  }
  return Success;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cubic torus obstruction toolkit"};
  app.name(args.empty() ? "obstructionist" : args[0]);
  app.require_subcommand(1, 1);
  app.fallthrough();
  Config c;
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "table", "dot", "sparse6"}));
  app.add_option("--threads", c.threads, "Worker threads (0 = default)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", c.out, "Write output to this file");

  const auto graph_help = "Catalog name or graph file (sparse6 or edge list)";
  auto* catalog = app.add_subcommand("catalog", "List catalog graphs, print one, or verify fingerprints");
  catalog->add_option("name", c.graph, "Catalog name");
  catalog->add_flag("--verify", c.verify, "Recompute every recorded fingerprint");
  auto* info = app.add_subcommand("info", "Recomputed invariants of a graph");
  info->add_option("graph", c.graph, graph_help)->required();
  auto* genus = app.add_subcommand("genus", "Orientable and Euler genus, optionally with a witness embedding");
  genus->add_option("graph", c.graph, graph_help)->required();
  genus->add_option("--surface", c.surface)->check(CLI::IsMember({"sphere", "projective", "torus"}));
  auto* embed_count = app.add_subcommand("embed-count", "Torus embedding classes up to automorphism and reflection");
  embed_count->add_option("graph", c.graph, graph_help)->required();
  auto* orbits = app.add_subcommand("orbits", "Vertex and edge orbits of the automorphism group");
  orbits->add_option("graph", c.graph, graph_help)->required();
  auto* candidates = app.add_subcommand("candidates", "Isomorphism classes of G plus one or two edges");
  candidates->add_option("graph", c.graph, graph_help)->required();
  candidates->add_option("--edges", c.edges, "Edges to add")->check(CLI::IsMember({1, 2}));
  candidates->add_option("--girth", c.girth, "Minimum girth of the result");
  auto* verify = app.add_subcommand("verify-obstruction", "Certify a cubic graph as a surface obstruction");
  verify->add_option("graph", c.graph, graph_help)->required();
  verify->add_option("--surface", c.surface)->check(CLI::IsMember({"sphere", "projective", "torus"}));
  auto* replay = app.add_subcommand("replay", "Rerun one case analysis (F11, F12, F13, F14, G1-one-edge, G1-two-edges, all)");
  replay->add_option("section", c.graph, "Section name or 'all'");
  auto* classify = app.add_subcommand("classify", "Classify all cubic graphs of bounded Betti number");
  classify->add_option("--b1-max", c.b1_max, "Largest Betti number")->check(CLI::NonNegativeNumber);
  classify->add_flag("--multigraphs", c.multigraphs, "Include loops and parallel edges");
  auto* gen = app.add_subcommand("gen-cubic", "Generate cubic graphs");
  gen->add_option("--max-vertices", c.max_vertices, "Connected graphs up to this many vertices");
  gen->add_option("--b1-max", c.b1_max, "All simple graphs up to this Betti number (default when no --max-vertices)");
  gen->add_flag("--simple", c.simple, "Drop loops and parallel edges from --max-vertices output");
  gen->add_flag("--multigraphs", c.multigraphs, "Keep loops and parallel edges in --b1-max output");
  gen->add_option("--corpus", c.corpus, "Write a sparse6 corpus with a manifest into this directory");
  auto* convert = app.add_subcommand("convert", "Translate between sparse6, edge lists, DOT and JSON");
  convert->add_option("input", c.graph, "Input file")->required();

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Success : UsageError;
  }

  set_thread_count(c.threads);
  std::ostringstream buffer;
  int status = Success;
  try {
    if (*catalog) status = cmd_catalog(c, buffer);
    else if (*info) status = cmd_info(c, buffer);
    else if (*genus) status = cmd_genus(c, buffer);
    else if (*embed_count) status = cmd_embed_count(c, buffer);
    else if (*orbits) status = cmd_orbits(c, buffer);
    else if (*candidates) status = cmd_candidates(c, buffer);
    else if (*verify) status = cmd_verify_obstruction(c, buffer);
    else if (*replay) status = cmd_replay(c, buffer);
    else if (*classify) status = cmd_classify(c, buffer);
    else if (*gen) status = cmd_gen_cubic(c, buffer);
    else if (*convert) status = cmd_convert(c, buffer);
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << '\n';
    status = UsageError;
  } catch (const std::invalid_argument& e) {
    // Bad names, non-cubic input, budget violations and malformed arguments.
    err << "error: " << e.what() << '\n';
    status = UsageError;
  } catch (const io::FormatError& e) {
    err << "error: " << e.what() << '\n';
    status = UsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    status = VerificationFailed;
  }
  set_thread_count(0);
  if (status == UsageError) return status;

  if (c.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(c.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << c.out << "'\n";
      return UsageError;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace obstructionist::cli
