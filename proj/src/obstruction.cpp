#include "obstructionist/obstruction.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "obstructionist/catalog.hpp"
#include "obstructionist/generate.hpp"
#include "obstructionist/parallel.hpp"

namespace obstructionist::obstruction {

namespace {

using embed::SurfaceKind;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out + "}";
}

Check check(std::string name, std::string expected, std::string actual) {
  const bool ok = expected == actual;
  return {std::move(name), std::move(expected), std::move(actual), ok};
}

Check at_most(std::string name, std::size_t bound, std::size_t actual) {
  return {std::move(name), "<= " + std::to_string(bound), std::to_string(actual), actual <= bound};
}

std::string display_name(const std::optional<std::string>& name, const iso::CanonicalForm& form) {
  return name ? *name : "unmatched:" + form.hex().substr(0, 16);
}

std::optional<embed::EmbeddingReport> witness(const MultiGraph& g, SurfaceKind s) {
  if (!is_connected(g) || g.edge_count() == 0) return std::nullopt;
  if (s == SurfaceKind::ProjectivePlane) return embed::min_euler_genus_embedding(g).report;
  return embed::min_genus_embedding(g).report;
}

ClassRecord classify_one(const MultiGraph& g) {
  ClassRecord r;
  r.form = iso::canonical_form(g);
  r.graph = g;
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.b0 = component_count(g);
  r.b1 = betti(g);
  r.girth = girth(g).value_or(0);
  r.edge_connectivity = edge_connectivity(g).size;
  r.simple = is_simple(g);
  r.toroidal = embed::embeds_in(g, SurfaceKind::Torus);
  r.planar = embed::embeds_in(g, SurfaceKind::Sphere);
  r.projective = r.planar || embed::embeds_in(g, SurfaceKind::ProjectivePlane);
  if (!r.toroidal) r.obstruction = is_obstruction(g, SurfaceKind::Torus).is_obstruction();
  r.catalog_name = catalog::identify(r.form);
  return r;
}

ClassificationReport tally(std::vector<MultiGraph> graphs, std::size_t b1_max, bool simple,
                           std::size_t& monotone_violations) {
  std::vector<ClassRecord> records(graphs.size());
  const int threads = thread_count();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t i = 0; i < graphs.size(); ++i) records[i] = classify_one(graphs[i]);
  std::sort(records.begin(), records.end(), [](const ClassRecord& a, const ClassRecord& b) { return a.form < b.form; });

  ClassificationReport report;
  report.b1_max = b1_max;
  report.simple = simple;
  report.class_count = records.size();
  monotone_violations = 0;
  for (auto& r : records) {
    report.planar_count += r.planar;
    report.projective_count += r.projective;
    report.toroidal_count += r.toroidal;
    report.projective_not_toroidal += r.projective && !r.toroidal;
    monotone_violations += r.planar && !(r.projective && r.toroidal);
    if (!r.toroidal) {
      report.obstruction_count += r.obstruction;
      report.non_toroidal.push_back(std::move(r));
    }
  }
  return report;
}

std::string pad(const std::string& s, std::size_t width) {
  // Pads by code points so labels with primes or ∪ stay aligned.
  std::size_t points = 0;
  for (unsigned char c : s) points += (c & 0xC0) != 0x80;
  return s + std::string(width > points ? width - points : 0, ' ');
}

std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  auto width_of = [](const std::string& s) {
    std::size_t points = 0;
    for (unsigned char c : s) points += (c & 0xC0) != 0x80;
    return points;
  };
  std::vector<std::size_t> widths(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) widths[i] = width_of(header[i]);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], width_of(row[i]));
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) text += (i ? "  " : "") + pad(cells[i], widths[i]);
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : widths) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& row : rows) line(row);
  return out.str();
}

std::string checks_table(const std::vector<Check>& checks) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : checks) rows.push_back({c.ok ? "ok" : "FAIL", c.name, c.expected, c.actual});
  return render_table({"status", "check", "expected", "actual"}, rows);
}

nlohmann::json checks_json(const std::vector<Check>& checks) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : checks)
    out.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
  return out;
}

}  // namespace

ObstructionVerdict is_obstruction(const MultiGraph& g, SurfaceKind s) {
  if (!is_cubic(g)) throw ObstructionError("obstruction checks need a cubic graph");
  ObstructionVerdict v;
  v.graph = g;
  v.surface = s;
  v.embeds = embed::embeds_in(g, s);
  if (v.embeds) v.embedding = witness(g, s);

  const auto orbits = iso::edge_orbits(g);
  std::size_t covered = 0;
  bool stabilizers_ok = true;
  const bool simple = is_simple(g);
  const std::uint64_t aut = simple ? iso::automorphism_group(g).order : 0;
  v.minimal = true;
  for (const auto& orbit : orbits) {
    OrbitDeletion d;
    d.representative = orbit.front();
    d.edge = g.edge_name(d.representative);
    d.orbit_size = orbit.size();
    d.embeds = embed::embeds_in(delete_edge_and_smooth(g, d.representative), s);
    v.minimal = v.minimal && d.embeds;
    covered += orbit.size();
    if (simple) {
      std::vector<std::uint32_t> colours(g.vertex_count(), 0);
      colours[g.edge(d.representative).u] = 1;
      colours[g.edge(d.representative).v] = 1;
      stabilizers_ok = stabilizers_ok && d.orbit_size * iso::automorphism_group(g, colours).order == aut;
    }
    v.deletions.push_back(std::move(d));
  }
  v.orbit_guard = covered == g.edge_count() && stabilizers_ok;
  if (!v.orbit_guard) throw ObstructionError("edge orbits failed the orbit-stabilizer guard");
  return v;
}

bool ClassificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

std::string ClassificationReport::summary() const {
  return std::to_string(non_toroidal.size()) + " non-toroidal classes, " + std::to_string(obstruction_count) +
         " obstructions";
}

ClassificationReport classify_all(std::size_t b1_max) {
  if (b1_max > 8) throw BudgetExceeded("classification is limited to Betti number <= 8");
  std::size_t monotone = 0;
  ClassificationReport report = tally(generate::generate_all_cubic_b1_le(b1_max), b1_max, true, monotone);
  auto& checks = report.checks;
  checks.push_back(check("planar implies projective-planar and toroidal", "0 violations",
                         std::to_string(monotone) + " violations"));
  checks.push_back(check("projective-planar classes that are not toroidal", "0",
                         std::to_string(report.projective_not_toroidal)));

  std::vector<std::string> want_all, want_obstructions, want_non_minimal;
  for (const auto& name : catalog::non_toroidal_names()) {
    const auto entry = catalog::build(name);
    if (betti(entry.graph) > b1_max) continue;
    want_all.push_back(name);
    (name == "H0+e" ? want_non_minimal : want_obstructions).push_back(name);
  }
  std::vector<std::string> got_all, got_obstructions, got_non_minimal;
  bool girth_ok = true;
  for (const auto& r : report.non_toroidal) {
    const std::string name = display_name(r.catalog_name, r.form);
    got_all.push_back(name);
    (r.obstruction ? got_obstructions : got_non_minimal).push_back(name);
    if (r.obstruction) girth_ok = girth_ok && r.girth >= 4;
  }
  for (auto* v : {&want_all, &want_obstructions, &want_non_minimal, &got_all, &got_obstructions, &got_non_minimal})
    std::sort(v->begin(), v->end());
  checks.push_back(check("non-toroidal classes", join(want_all), join(got_all)));
  checks.push_back(check("torus obstructions", join(want_obstructions), join(got_obstructions)));
  checks.push_back(check("non-toroidal but not minimal", join(want_non_minimal), join(got_non_minimal)));
  checks.push_back(check("every obstruction has girth >= 4", "yes", yes_no(girth_ok)));
  return report;
}

ClassificationReport classify_multigraphs(std::size_t b1_max) {
  if (b1_max > 8) throw BudgetExceeded("classification is limited to Betti number <= 8");
  std::size_t monotone = 0;
  ClassificationReport report = tally(generate::generate_all_cubic_b1_le(b1_max, false), b1_max, false, monotone);
  report.checks.push_back(check("planar implies projective-planar and toroidal", "0 violations",
                                std::to_string(monotone) + " violations"));
  return report;
}

std::string to_string(Section s) {
  switch (s) {
    case Section::F11: return "F11";
    case Section::F12: return "F12";
    case Section::F13: return "F13";
    case Section::F14: return "F14";
    case Section::G1OneEdge: return "G1-one-edge";
    case Section::G1TwoEdges: return "G1-two-edges";
  }
  return "?";
}

Section parse_section(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (Section s : all_sections()) {
    std::string name = to_string(s);
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    if (name == lower) return s;
  }
  throw std::invalid_argument("unknown section '" + std::string(text) +
                              "' (expected F11, F12, F13, F14, G1-one-edge or G1-two-edges)");
}

const std::vector<Section>& all_sections() {
  static const std::vector<Section> all = {Section::F11, Section::F12, Section::F13,
                                           Section::F14, Section::G1OneEdge, Section::G1TwoEdges};
  return all;
}

bool ReplayReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

ReplayReport replay_section(Section s) {
  struct Setup {
    const char* base;
    int edges;
    std::size_t girth;
    std::size_t bound;         // case count as printed
    std::size_t merged_bound;  // after the printed isomorphism merges
    std::vector<std::string> non_toroidal;
  };
  static const std::map<Section, Setup> setups = {
      {Section::F11, {"F11", 1, 4, 10, 9, {"H1", "H2", "H3", "H4"}}},
      {Section::F12, {"F12", 1, 4, 14, 13, {}}},
      {Section::F13, {"F13", 1, 4, 10, 9, {}}},
      {Section::F14, {"F14", 1, 4, 12, 10, {}}},
      {Section::G1OneEdge, {"G1", 1, 3, 6, 6, {}}},
      {Section::G1TwoEdges, {"G1", 2, 4, 0, 0, {"H4", "H5", "H6", "H7", "H8", "H9"}}},
  };
  const Setup& setup = setups.at(s);
  ReplayReport report;
  report.section = s;
  report.base = setup.base;
  report.edges_added = setup.edges;
  report.min_girth = setup.girth;

  const MultiGraph base = catalog::build(setup.base).graph;
  const auto augmentations = generate::enumerate_augmentations(base, setup.edges, setup.girth);

  // Hosts are the graphs the last edge is added to; their torus embeddings
  // are shared by every class built on the same first edge.
  std::map<std::size_t, std::size_t> host_of;  // augmentation index -> host index
  std::vector<MultiGraph> hosts;
  std::map<std::tuple<int, EdgeId, EdgeId>, std::size_t> host_index;
  for (std::size_t i = 0; i < augmentations.size(); ++i) {
    // Keyed by the exact first spec so edge ids of the last spec stay valid.
    const auto& spec = augmentations[i].specs[0];
    const auto key = setup.edges == 1 ? std::tuple<int, EdgeId, EdgeId>{-1, 0, 0}
                                      : std::tuple<int, EdgeId, EdgeId>{static_cast<int>(spec.mode), spec.first,
                                                                        spec.second};
    auto [it, fresh] = host_index.try_emplace(key, hosts.size());
    if (fresh) hosts.push_back(setup.edges == 1 ? base : add_edge(base, spec));
    host_of[i] = it->second;
  }
  struct HostEmbeddings {
    std::size_t genus = 0;
    std::vector<embed::RotationSystem> torus;
  };
  std::vector<HostEmbeddings> host_embeddings(hosts.size());
  std::vector<ReplayClass> classes(augmentations.size());
  const int threads = thread_count();
#pragma omp parallel num_threads(threads)
  {
#pragma omp for schedule(dynamic, 1)
    for (std::size_t h = 0; h < hosts.size(); ++h) {
      host_embeddings[h].genus = embed::orientable_genus(hosts[h]);
      if (host_embeddings[h].genus == 1) host_embeddings[h].torus = embed::torus_embeddings(hosts[h]);
    }
#pragma omp for schedule(dynamic, 1)
    for (std::size_t i = 0; i < augmentations.size(); ++i) {
      const auto& a = augmentations[i];
      const auto& host = hosts[host_of.at(i)];
      const auto& emb = host_embeddings[host_of.at(i)];
      ReplayClass c;
      c.construction = a.descriptions;
      c.members = a.members;
      c.form = a.form;
      c.girth = girth_or_infinite(a.graph);
      c.toroidal = embed::orientable_genus(a.graph) <= 1;
      if (emb.genus == 0) {
        c.extends = true;
      } else if (emb.genus == 1) {
        c.extends = std::any_of(emb.torus.begin(), emb.torus.end(), [&](const embed::RotationSystem& r) {
          return embed::extends_to(host, r, a.specs.back());
        });
      }
      c.catalog_name = catalog::identify(a.form);
      classes[i] = std::move(c);
    }
  }
  report.classes = std::move(classes);

  std::vector<std::string> got;
  std::size_t disagreements = 0;
  bool girth_ok = true;
  for (const auto& c : report.classes) {
    if (!c.toroidal) got.push_back(display_name(c.catalog_name, c.form));
    disagreements += c.toroidal != c.extends;
    girth_ok = girth_ok && c.girth >= setup.girth;
  }
  std::vector<std::string> want = setup.non_toroidal;
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  auto& checks = report.checks;
  checks.push_back(check("non-toroidal classes", join(want), join(got)));
  checks.push_back(check("embedding-extension test agrees with genus", "0 disagreements",
                         std::to_string(disagreements) + " disagreements"));
  checks.push_back(check("every class meets the girth filter", "yes", yes_no(girth_ok)));

  if (setup.edges == 1) {
    checks.push_back(at_most("class count against the printed case count", setup.bound, report.classes.size()));
    checks.push_back(at_most("class count after the printed merges", setup.merged_bound, report.classes.size()));
  } else {
    // First edges with girth >= 3, then the two cyclically 4-connected cases:
    // e1 on a 4-cycle (A1-A'3) and e1 off every 4-cycle (A1-B'3). The second
    // case only counts classes the first one has not produced.
    const auto first = generate::enumerate_augmentations(base, 1, 3);
    checks.push_back(at_most("first-edge classes", 6, first.size()));
    auto second = [&](const char* e1) {
      std::set<iso::CanonicalForm> forms;
      const MultiGraph host = add_edge(base, bridge_by_name(base, e1), {"x", "y"});
      for (const auto& a : generate::enumerate_augmentations(host, 1, 4)) forms.insert(a.form);
      return forms;
    };
    const auto on_cycle = second("A1-A'3");
    const auto off_cycle = second("A1-B'3");
    std::size_t fresh = 0;
    for (const auto& f : off_cycle) fresh += !on_cycle.count(f);
    report.case_bounds.push_back({"A1-A'3", on_cycle.size(), 18, "all second-edge classes with girth >= 4"});
    report.case_bounds.push_back(
        {"A1-B'3", fresh, 32, "second-edge classes with girth >= 4 not already produced from A1-A'3"});
    for (const auto& b : report.case_bounds)
      checks.push_back(at_most("second-edge classes for e1 = " + b.first_edge, b.bound, b.classes));
  }
  return report;
}

nlohmann::json to_json(const ObstructionVerdict& v) {
  nlohmann::json deletions = nlohmann::json::array();
  for (const auto& d : v.deletions)
    deletions.push_back({{"edge", d.edge}, {"orbit_size", d.orbit_size}, {"embeds", d.embeds}});
  nlohmann::json out = {{"surface", embed::to_string(v.surface)},
                        {"vertices", v.graph.vertex_count()},
                        {"edges", v.graph.edge_count()},
                        {"embeds", v.embeds},
                        {"minimal", v.minimal},
                        {"obstruction", v.is_obstruction()},
                        {"orbit_guard", v.orbit_guard},
                        {"deletions", deletions}};
  if (v.embedding)
    out["embedding"] = {{"faces", v.embedding->faces},
                        {"face_count", v.embedding->face_count},
                        {"surface", v.embedding->surface.name()}};
  return out;
}

nlohmann::json to_json(const ClassificationReport& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : r.non_toroidal)
    classes.push_back({{"catalog_name", c.catalog_name ? nlohmann::json(*c.catalog_name) : nlohmann::json()},
                       {"canonical_form", c.form.hex()},
                       {"vertices", c.vertices},
                       {"edges", c.edges},
                       {"b0", c.b0},
                       {"b1", c.b1},
                       {"girth", c.girth},
                       {"edge_connectivity", c.edge_connectivity},
                       {"simple", c.simple},
                       {"planar", c.planar},
                       {"projective_planar", c.projective},
                       {"toroidal", c.toroidal},
                       {"obstruction", c.obstruction}});
  return {{"b1_max", r.b1_max},
          {"simple_only", r.simple},
          {"classes", r.class_count},
          {"planar", r.planar_count},
          {"projective_planar", r.projective_count},
          {"toroidal", r.toroidal_count},
          {"projective_not_toroidal", r.projective_not_toroidal},
          {"non_toroidal", classes},
          {"obstructions", r.obstruction_count},
          {"summary", r.summary()},
          {"checks", checks_json(r.checks)},
          {"ok", r.ok()}};
}

nlohmann::json to_json(const ReplayReport& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : r.classes)
    classes.push_back({{"construction", c.construction},
                       {"members", c.members},
                       {"canonical_form", c.form.hex()},
                       {"girth", c.girth},
                       {"toroidal", c.toroidal},
                       {"extends", c.extends},
                       {"catalog_name", c.catalog_name ? nlohmann::json(*c.catalog_name) : nlohmann::json()}});
  nlohmann::json bounds = nlohmann::json::array();
  for (const auto& b : r.case_bounds)
    bounds.push_back({{"first_edge", b.first_edge}, {"classes", b.classes}, {"bound", b.bound}, {"note", b.note}});
  return {{"section", to_string(r.section)},
          {"base", r.base},
          {"edges_added", r.edges_added},
          {"min_girth", r.min_girth},
          {"classes", classes},
          {"case_bounds", bounds},
          {"checks", checks_json(r.checks)},
          {"ok", r.ok()}};
}

std::string to_table(const ObstructionVerdict& v) {
  std::ostringstream out;
  out << "surface: " << embed::to_string(v.surface) << '\n'
      << "embeds: " << yes_no(v.embeds) << '\n'
      << "minimal: " << yes_no(v.minimal) << '\n'
      << "obstruction: " << yes_no(v.is_obstruction()) << '\n';
  if (v.embedding) out << "witness faces: " << v.embedding->face_count << " (" << v.embedding->surface.name() << ")\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& d : v.deletions) rows.push_back({d.edge, std::to_string(d.orbit_size), yes_no(d.embeds)});
  out << '\n' << render_table({"deleted edge", "orbit size", "embeds"}, rows);
  return out.str();
}

std::string to_table(const ClassificationReport& r) {
  std::ostringstream out;
  out << (r.simple ? "simple" : "multigraph") << " cubic classes with b1 <= " << r.b1_max << ": " << r.class_count
      << '\n'
      << "planar " << r.planar_count << ", projective-planar " << r.projective_count << ", toroidal "
      << r.toroidal_count << '\n'
      << '\n';
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : r.non_toroidal)
    rows.push_back({display_name(c.catalog_name, c.form), std::to_string(c.vertices), std::to_string(c.b0),
                    std::to_string(c.b1), std::to_string(c.girth), std::to_string(c.edge_connectivity),
                    yes_no(c.simple), yes_no(c.projective), yes_no(c.obstruction)});
  out << render_table({"class", "V", "b0", "b1", "girth", "conn", "simple", "projective", "obstruction"}, rows);
  out << '\n' << checks_table(r.checks) << '\n' << r.summary() << '\n';
  return out.str();
}

std::string to_table(const ReplayReport& r) {
  std::ostringstream out;
  out << "section " << to_string(r.section) << ": " << r.base << " plus " << r.edges_added
      << (r.edges_added == 1 ? " edge" : " edges") << ", girth >= " << r.min_girth << ", " << r.classes.size()
      << " classes\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : r.classes) {
    std::string construction;
    for (const auto& d : c.construction) construction += (construction.empty() ? "" : ", ") + d;
    rows.push_back({construction, std::to_string(c.members), std::to_string(c.girth), yes_no(c.toroidal),
                    yes_no(c.extends), c.catalog_name.value_or("")});
  }
  out << render_table({"added", "members", "girth", "toroidal", "extends", "catalog"}, rows);
  if (!r.case_bounds.empty()) {
    std::vector<std::vector<std::string>> bounds;
    for (const auto& b : r.case_bounds)
      bounds.push_back({b.first_edge, std::to_string(b.classes), std::to_string(b.bound), b.note});
    out << '\n' << render_table({"e1", "classes", "bound", "counted"}, bounds);
  }
  out << '\n' << checks_table(r.checks);
  return out.str();
}

}  // namespace obstructionist::obstruction
