#include "obstructionist/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "catalog_data.hpp"
#include "obstructionist/embed.hpp"
#include "obstructionist/graph_io.hpp"
#include "obstructionist/iso.hpp"

namespace obstructionist::catalog {

namespace {

MultiGraph from_text(std::string_view name) {
  for (const auto& [file, text] : kEdgeLists)
    if (file == name) return io::parse_edge_list(text);
  throw UnknownGraph("no embedded edge list for '" + std::string(name) + "'");
}

// Applies "E1-E2" to g, naming the two new vertices.
MultiGraph bridge(const MultiGraph& g, std::string_view text, std::string first, std::string second) {
  return add_edge(g, bridge_by_name(g, text), {std::move(first), std::move(second)});
}

MultiGraph k33_pair() {
  const MultiGraph k33 = from_text("K33");
  return disjoint_union(k33, k33);
}

Expected h_expected(std::uint64_t four_cycles) {
  Expected e;
  e.vertices = 14;
  e.edges = 21;
  e.b0 = 1;
  e.b1 = 8;
  e.girth = 4;
  e.cycle_counts[4] = four_cycles;
  e.toroidal = false;
  return e;
}

Expected projective_obstruction_expected(std::size_t vertices, std::vector<std::size_t> orbits,
                                         std::size_t torus_classes) {
  Expected e;
  e.vertices = vertices;
  e.edges = vertices * 3 / 2;
  e.b0 = 1;
  e.b1 = vertices / 2 + 1;
  e.edge_orbit_sizes = std::move(orbits);
  e.planar = false;
  e.projective = false;
  e.toroidal = true;
  e.torus_embedding_classes = torus_classes;
  return e;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

std::string join(const std::vector<std::string>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i];
  return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> all = {"K4",  "K5",  "K33", "E42", "F11", "F12", "F13", "F14", "G1",
                                               "H0",  "H1",  "H2",  "H3",  "H4",  "H5",  "H6",  "H7",  "H8",
                                               "H9",  "H0+e"};
  return all;
}

const std::vector<std::string>& non_toroidal_names() {
  static const std::vector<std::string> all = {"H0", "H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8", "H9", "H0+e"};
  return all;
}

std::string canonical_name(std::string_view name) {
  if (name == "H0∪e" || name == "H0ue" || name == "H0+e") return "H0+e";
  if (name == "K3,3") return "K33";
  for (const auto& n : names())
    if (n == name) return n;
  throw UnknownGraph("unknown catalog graph '" + std::string(name) + "'");
}

CatalogEntry build(std::string_view requested) {
  CatalogEntry entry;
  entry.name = canonical_name(requested);
  const std::string& name = entry.name;
  Expected& ex = entry.expected;

  if (name == "K4") {
    entry.graph = from_text("K4");
    entry.construction = "complete graph on 4 vertices";
    ex.b1 = 3;
    ex.girth = 3;
    ex.planar = true;
  } else if (name == "K5") {
    entry.graph = from_text("K5");
    entry.construction = "complete graph on 5 vertices";
    ex.b1 = 6;
    ex.planar = false;
    ex.projective = true;
    ex.toroidal = true;
  } else if (name == "K33") {
    entry.graph = from_text("K33");
    entry.construction = "complete bipartite graph K3,3";
    ex.b1 = 4;
    ex.girth = 4;
    ex.planar = false;
    ex.projective = true;
    ex.toroidal = true;
    ex.edge_orbit_sizes = std::vector<std::size_t>{9};
  } else if (name == "E42" || name == "H0") {
    entry.graph = k33_pair();
    entry.construction = "K33 ⊔ K33";
    ex.vertices = 12;
    ex.b0 = 2;
    ex.b1 = 8;
    ex.girth = 4;
    ex.edge_connectivity = 0;
    ex.cycle_counts[4] = 18;
    ex.projective = false;
    ex.toroidal = false;
  } else if (name == "F11") {
    entry.graph = from_text("F11");
    entry.construction = "[AA'] ∪ [A2] ∪ [23]";
    ex = projective_obstruction_expected(12, {2, 8, 8}, 2);
    ex.edge_connectivity = 2;
    ex.min_cut = std::vector<std::string>{"23", "67"};
  } else if (name == "F12") {
    entry.graph = from_text("F12");
    entry.construction = "[AA'] ∪ [A8] ∪ [45]";
    ex = projective_obstruction_expected(12, {2, 8, 8}, 4);
  } else if (name == "F13") {
    entry.graph = from_text("F13");
    entry.construction = "[A1] ∪ [12]";
    ex = projective_obstruction_expected(12, {9, 9}, 2);
  } else if (name == "F14") {
    entry.graph = from_text("F14");
    entry.construction = "[AA'] ∪ [A1] ∪ [12]";
    ex = projective_obstruction_expected(12, {2, 8, 8}, 2);
  } else if (name == "G1") {
    entry.graph = from_text("G1");
    entry.construction = "[AA'] ∪ [A1]";
    ex = projective_obstruction_expected(10, {3, 12}, 2);
    ex.edge_connectivity = 3;
  } else if (name == "H1") {
    entry.graph = bridge(from_text("F11"), "AA'-18", "x", "y");
    entry.construction = "F11 ∪ (AA'-18)";
    ex = h_expected(7);
  } else if (name == "H2") {
    entry.graph = bridge(from_text("F11"), "A2-67", "x", "y");
    entry.construction = "F11 ∪ (A2-67)";
    ex = h_expected(8);
  } else if (name == "H3") {
    entry.graph = bridge(from_text("F11"), "23-67", "x", "y");
    entry.construction = "F11 ∪ (23-67)";
    ex = h_expected(10);
  } else if (name == "H4") {
    entry.graph = bridge(from_text("F11"), "A2-B'6", "x", "y");
    entry.construction = "F11 ∪ (A2-B'6)";
    ex = h_expected(6);
    ex.cycle_counts[5] = 4;
  } else if (name == "H5") {
    entry.graph = bridge(bridge(from_text("G1"), "AA'-BB'", "x", "y"), "A1-B2", "u", "v");
    entry.construction = "G1 ∪ (AA'-BB') ∪ (A1-B2)";
    ex = h_expected(5);
  } else if (name == "H6") {
    entry.graph = bridge(bridge(from_text("G1"), "A1-B2", "x", "y"), "Ax-By", "u", "v");
    entry.construction = "G1 ∪ (A1-B2) ∪ (Ax-By)";
    ex = h_expected(4);
    ex.cycle_counts[5] = 5;
  } else if (name == "H7") {
    entry.graph = bridge(bridge(from_text("G1"), "A1-B2", "x", "y"), "Ax-B1", "u", "v");
    entry.construction = "G1 ∪ (A1-B2) ∪ (Ax-B1)";
    ex = h_expected(4);
    ex.cycle_counts[5] = 4;
  } else if (name == "H8") {
    entry.graph = bridge(bridge(from_text("G1"), "A1-B2", "x", "y"), "A2-B1", "u", "v");
    entry.construction = "G1 ∪ (A1-B2) ∪ (A2-B1)";
    ex = h_expected(3);
  } else if (name == "H9") {
    entry.graph = bridge(bridge(from_text("G1"), "AA'-BB'", "x", "y"), "xy-CC'", "u", "v");
    entry.construction = "G1 ∪ (AA'-BB') ∪ (xy-CC')";
    ex = h_expected(6);
    ex.cycle_counts[5] = 0;
  } else if (name == "H0+e") {
    entry.graph = bridge(k33_pair(), "a1-a'1'", "x", "y");
    entry.construction = "(K33 ⊔ K33) ∪ (a1-a'1')";
    ex.vertices = 14;
    ex.b0 = 1;
    ex.b1 = 8;
    ex.girth = 4;
    ex.edge_connectivity = 1;
    ex.toroidal = false;
  }
  return entry;
}

std::optional<std::string> identify(const iso::CanonicalForm& form) {
  static const std::map<iso::CanonicalForm, std::string> forms = [] {
    std::map<iso::CanonicalForm, std::string> out;
    for (const auto& name : non_toroidal_names()) out.try_emplace(iso::canonical_form(build(name).graph), name);
    for (const auto& name : names()) out.try_emplace(iso::canonical_form(build(name).graph), name);
    return out;
  }();
  auto it = forms.find(form);
  if (it == forms.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> identify(const MultiGraph& g) { return identify(iso::canonical_form(g)); }

std::string edge_list_text(std::string_view name) { return io::to_edge_list(build(name).graph); }

bool FingerprintReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const FingerprintCheck& c) { return c.ok; });
}

FingerprintReport verify_fingerprints(const CatalogEntry& entry) {
  FingerprintReport report;
  report.name = entry.name;
  const MultiGraph& g = entry.graph;
  const Expected& ex = entry.expected;
  auto add = [&](std::string property, std::string expected, std::string actual) {
    const bool ok = expected == actual;
    report.checks.push_back({std::move(property), std::move(expected), std::move(actual), ok});
  };
  auto number = [&](const char* property, const std::optional<std::size_t>& want, std::size_t got) {
    if (want) add(property, std::to_string(*want), std::to_string(got));
  };

  number("vertices", ex.vertices, g.vertex_count());
  number("edges", ex.edges, g.edge_count());
  number("b0", ex.b0, component_count(g));
  number("b1", ex.b1, betti(g));
  if (ex.girth) number("girth", ex.girth, girth_or_infinite(g));
  if (ex.edge_connectivity || ex.min_cut) {
    const EdgeCut cut = edge_connectivity(g);
    number("edge connectivity", ex.edge_connectivity, cut.size);
    if (ex.min_cut) {
      std::vector<std::string> got;
      for (EdgeId e : cut.edges) got.push_back(g.edge_name(e));
      std::sort(got.begin(), got.end());
      add("minimum cut", join(*ex.min_cut), join(got));
    }
  }
  for (const auto& [k, count] : ex.cycle_counts)
    add(std::to_string(k) + "-cycles", std::to_string(count), std::to_string(iso::count_cycles(g, k)));
  if (ex.edge_orbit_sizes) {
    std::vector<std::size_t> got;
    for (const auto& orbit : iso::edge_orbits(g)) got.push_back(orbit.size());
    std::sort(got.begin(), got.end());
    add("edge orbit sizes", join(*ex.edge_orbit_sizes), join(got));
  }
  if (ex.planar) add("planar", yes_no(*ex.planar), yes_no(embed::embeds_in(g, embed::SurfaceKind::Sphere)));
  if (ex.projective)
    add("projective planar", yes_no(*ex.projective), yes_no(embed::embeds_in(g, embed::SurfaceKind::ProjectivePlane)));
  if (ex.toroidal) add("toroidal", yes_no(*ex.toroidal), yes_no(embed::embeds_in(g, embed::SurfaceKind::Torus)));
  if (ex.torus_embedding_classes)
    add("torus embedding classes", std::to_string(*ex.torus_embedding_classes),
        std::to_string(embed::count_torus_embedding_classes(g)));
  if (entry.name == "H4") {
    const MultiGraph via_g1 = bridge(bridge(from_text("G1"), "AA'-BB'", "x", "y"), "Ax-CC'", "u", "v");
    add("isomorphic to G1 ∪ (AA'-BB') ∪ (Ax-CC')", "yes", yes_no(iso::are_isomorphic(g, via_g1)));
  }
  if (entry.name == "H1") {
    const MultiGraph alt = bridge(from_text("F11"), "A2-A'7", "x", "y");
    add("isomorphic to F11 ∪ (A2-A'7)", "yes", yes_no(iso::are_isomorphic(g, alt)));
  }
  if (entry.name == "H5") {
    const auto matches = h5_fingerprint_matches();
    add("G1 ∪ (AA'-BB') ∪ e2 classes matching the fingerprints", "1", std::to_string(matches.size()));
    add("the unique match is the construction", "yes",
        yes_no(matches.size() == 1 && iso::are_isomorphic(matches.front(), g)));
  }
  return report;
}

std::vector<MultiGraph> h5_fingerprint_matches() {
  const MultiGraph base = bridge(from_text("G1"), "AA'-BB'", "x", "y");
  std::vector<EdgeAdditionSpec> specs;
  for (const auto& spec : all_specs(base))
    if (spec.mode == AttachMode::TwoEdgeBridge) specs.push_back(spec);
  std::vector<MultiGraph> out;
  for (const auto& cls : iso::spec_orbits(base, specs)) {
    if (girth_or_infinite(cls.graph) < 4) continue;
    if (iso::count_cycles(cls.graph, 4) != 5) continue;
    if (embed::embeds_in(cls.graph, embed::SurfaceKind::Torus)) continue;
    out.push_back(cls.graph);
  }
  return out;
}

}  // namespace obstructionist::catalog
