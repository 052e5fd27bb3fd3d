// End-to-end acceptance run: one PASS/FAIL line per criterion, followed by
// indented detail lines. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "obstructionist/catalog.hpp"
#include "obstructionist/cli.hpp"
#include "obstructionist/embed.hpp"
#include "obstructionist/generate.hpp"
#include "obstructionist/graph_io.hpp"
#include "obstructionist/iso.hpp"
#include "obstructionist/obstruction.hpp"
#include "obstructionist/parallel.hpp"
#include "oracle.hpp"

using namespace obstructionist;
using embed::SurfaceKind;

namespace {

class Criterion {
 public:
  Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

  void expect(bool ok, const std::string& detail) {
    ok_ = ok_ && ok;
    details_.push_back(std::string(ok ? "ok    " : "FAIL  ") + detail);
  }
  void note(const std::string& detail) { details_.push_back("      " + detail); }

  bool report() const {
    std::cout << "CRITERION " << number_ << ' ' << (ok_ ? "PASS" : "FAIL") << ": " << title_ << '\n';
    for (const auto& d : details_) std::cout << "    " << d << '\n';
    std::cout.flush();
    return ok_;
  }

 private:
  int number_;
  std::string title_;
  bool ok_ = true;
  std::vector<std::string> details_;
};

template <typename T>
std::string str(const T& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

std::set<iso::CanonicalForm> forms_of(const std::vector<std::string>& names) {
  std::set<iso::CanonicalForm> out;
  for (const auto& n : names) out.insert(iso::canonical_form(catalog::build(n).graph));
  return out;
}

struct CliResult {
  int status;
  std::string out;
};

CliResult cli_run(std::vector<std::string> args) {
  args.insert(args.begin(), "obstructionist");
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str()};
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

MultiGraph shuffled(const MultiGraph& g, std::mt19937& rng) {
  std::vector<VertexId> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  return permute_vertices(g, perm);
}

struct RotationSystemPair {
  embed::RotationSystem rotation;
  embed::SignedRotationSystem signed_rotation;
};

RotationSystemPair random_rotation(const MultiGraph& g, std::mt19937& rng) {
  auto r = embed::RotationSystem::identity(g);
  for (auto& cyc : r.order) std::shuffle(cyc.begin(), cyc.end(), rng);
  auto s = embed::SignedRotationSystem::all_positive(r, g.edge_count());
  for (auto& sign : s.sign) sign = (rng() & 1u) ? 1 : -1;
  return {r, s};
}

}  // namespace

int main() {
  bool all_ok = true;
  const auto connected_catalog = [] {
    std::vector<std::string> out;
    for (const auto& n : catalog::names())
      if (is_connected(catalog::build(n).graph)) out.push_back(n);
    return out;
  }();

  // ---- 1 ---------------------------------------------------------------
  set_thread_count(1);
  const auto start = std::chrono::steady_clock::now();
  const auto report = obstruction::classify_all(8);
  const double classify_seconds = seconds_since(start);
  set_thread_count(0);
  {
    Criterion c(1, "b1 <= 8 classification finds exactly H0..H9 and H0+e");
    std::set<iso::CanonicalForm> non_toroidal, obstructions, non_minimal;
    for (const auto& r : report.non_toroidal) {
      non_toroidal.insert(r.form);
      (r.obstruction ? obstructions : non_minimal).insert(r.form);
    }
    c.note("simple cubic classes with b1 <= 8: " + str(report.class_count));
    c.expect(non_toroidal == forms_of(catalog::non_toroidal_names()),
             "non-toroidal classes equal the eleven catalog graphs as canonical forms (" +
                 str(non_toroidal.size()) + " found)");
    c.expect(obstructions == forms_of({"H0", "H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8", "H9"}),
             "certified obstructions are exactly H0..H9 (" + str(obstructions.size()) + " found)");
    c.expect(non_minimal == forms_of({"H0+e"}), "H0+e is the only non-toroidal class that is not minimal");
    c.expect(report.summary() == "11 non-toroidal classes, 10 obstructions", "summary: " + report.summary());
    for (const auto& check : report.checks)
      c.expect(check.ok, check.name + ": expected " + check.expected + ", got " + check.actual);
    const auto via_cli = cli_run({"classify", "--b1-max", "8"});
    c.expect(via_cli.status == 0 && via_cli.out.find("11 non-toroidal classes, 10 obstructions") != std::string::npos,
             "`classify --b1-max 8` exits 0 with the summary line");
    c.expect(classify_seconds < 600.0, "single-threaded runtime " + str(classify_seconds) + " s (budget 600 s)");
    all_ok = c.report() && all_ok;
  }

  // ---- 2 ---------------------------------------------------------------
  {
    Criterion c(2, "no projective-planar class in the corpus fails to embed in the torus");
    c.note("planar " + str(report.planar_count) + ", projective-planar " + str(report.projective_count) +
           ", toroidal " + str(report.toroidal_count) + " of " + str(report.class_count));
    c.expect(report.projective_not_toroidal == 0,
             "projective-planar but not toroidal: " + str(report.projective_not_toroidal));
    bool non_toroidal_non_projective = true;
    for (const auto& r : report.non_toroidal) non_toroidal_non_projective = non_toroidal_non_projective && !r.projective;
    c.expect(non_toroidal_non_projective, "every non-toroidal class is also non-projective-planar");
    all_ok = c.report() && all_ok;
  }

  // ---- 3 ---------------------------------------------------------------
  {
    Criterion c(3, "E42, F11-F14 and G1 are projective-plane obstructions");
    for (const char* name : {"E42", "F11", "F12", "F13", "F14", "G1"}) {
      const auto v = obstruction::is_obstruction(catalog::build(name).graph, SurfaceKind::ProjectivePlane);
      std::size_t orbits = v.deletions.size();
      c.expect(!v.embeds && v.minimal && v.orbit_guard,
               std::string(name) + ": embeds " + (v.embeds ? "yes" : "no") + ", all " + str(orbits) +
                   " edge-orbit deletions embed " + (v.minimal ? "yes" : "no"));
    }
    all_ok = c.report() && all_ok;
  }

  // ---- 4 ---------------------------------------------------------------
  {
    Criterion c(4, "torus embedding classes of F11, F12, F13, F14, G1 are 2, 4, 2, 2, 2");
    const std::vector<std::pair<const char*, std::size_t>> expected = {
        {"F11", 2}, {"F12", 4}, {"F13", 2}, {"F14", 2}, {"G1", 2}};
    for (const auto& [name, want] : expected) {
      const auto got = embed::count_torus_embedding_classes(catalog::build(name).graph);
      c.expect(got == want, std::string(name) + ": " + str(got) + " (expected " + str(want) + ")");
    }
    all_ok = c.report() && all_ok;
  }

  // ---- 5 ---------------------------------------------------------------
  {
    Criterion c(5, "fingerprints of the eleven non-toroidal graphs");
    const std::vector<std::uint64_t> four = {7, 8, 10, 6, 5, 4, 4, 3, 6};
    for (std::size_t i = 0; i < four.size(); ++i) {
      const std::string name = "H" + str(i + 1);
      const auto got = iso::count_cycles(catalog::build(name).graph, 4);
      c.expect(got == four[i], name + " 4-cycles: " + str(got) + " (expected " + str(four[i]) + ")");
    }
    for (const auto& [name, want] : std::vector<std::pair<const char*, std::uint64_t>>{
             {"H4", 4}, {"H9", 0}, {"H6", 5}, {"H7", 4}}) {
      const auto got = iso::count_cycles(catalog::build(name).graph, 5);
      c.expect(got == want, std::string(name) + " 5-cycles: " + str(got) + " (expected " + str(want) + ")");
    }
    const auto forms = forms_of(catalog::non_toroidal_names());
    c.expect(forms.size() == 11, "pairwise non-isomorphic: " + str(forms.size()) + " distinct canonical forms");
    std::vector<std::string> connectivity_one;
    for (const auto& name : catalog::non_toroidal_names())
      if (edge_connectivity(catalog::build(name).graph).size == 1) connectivity_one.push_back(name);
    c.expect(connectivity_one == std::vector<std::string>{"H0+e"},
             "connectivity-1 members: " + (connectivity_one.empty() ? std::string("none") : connectivity_one.front()) +
                 (connectivity_one.size() > 1 ? " and others" : ""));
    all_ok = c.report() && all_ok;
  }

  // ---- 6 ---------------------------------------------------------------
  std::size_t replay_candidates = 0, replay_disagreements = 0;
  {
    Criterion c(6, "section replays");
    for (auto s : obstruction::all_sections()) {
      const auto r = obstruction::replay_section(s);
      replay_candidates += r.classes.size();
      for (const auto& cls : r.classes) replay_disagreements += cls.toroidal != cls.extends;
      std::string non_toroidal;
      for (const auto& cls : r.classes)
        if (!cls.toroidal) non_toroidal += (non_toroidal.empty() ? "" : ", ") + cls.catalog_name.value_or("unmatched");
      for (const auto& check : r.checks)
        c.expect(check.ok, obstruction::to_string(s) + " " + check.name + ": expected " + check.expected + ", got " +
                               check.actual);
      c.note(obstruction::to_string(s) + ": " + str(r.classes.size()) + " classes, non-toroidal {" + non_toroidal +
             "}");
    }
    all_ok = c.report() && all_ok;
  }

  // ---- 7 ---------------------------------------------------------------
  {
    Criterion c(7, "generated simple connected cubic counts match the independent oracle");
    const auto generated = generate::generate_connected_cubic(8, true);
    for (std::size_t n : {4, 6, 8}) {
      const auto got = static_cast<std::uint64_t>(std::count_if(
          generated.begin(), generated.end(), [n](const MultiGraph& g) { return g.vertex_count() == n; }));
      const auto want = testing_support::unlabeled_cubic_count(n, true);
      c.expect(got == want, "n = " + str(n) + ": generated " + str(got) + ", oracle " + str(want));
    }
    all_ok = c.report() && all_ok;
  }

  // ---- 8 ---------------------------------------------------------------
  {
    Criterion c(8, "property suites on the b1 <= 8 corpus");
    std::mt19937 rng(20240817u);
    const auto corpus = generate::generate_all_cubic_b1_le(8);
    auto suite_start = std::chrono::steady_clock::now();
    auto lap = [&](const std::string& what) {
      c.note(what + " took " + str(seconds_since(suite_start)) + " s");
      suite_start = std::chrono::steady_clock::now();
    };

    // Euler's formula on minimum-genus witnesses and random rotation systems.
    std::size_t traced = 0, euler_failures = 0;
    for (const auto& g : corpus) {
      if (!is_connected(g)) continue;
      const long v = static_cast<long>(g.vertex_count()), e = static_cast<long>(g.edge_count());
      const auto genus = embed::orientable_genus(g);
      const auto w = embed::min_genus_embedding(g);
      ++traced;
      euler_failures += v - e + static_cast<long>(w.report.face_count) != 2 - 2 * static_cast<long>(genus);
      for (int k = 0; k < 2; ++k) {
        const auto [r, s] = random_rotation(g, rng);
        const auto plain = embed::trace_faces(g, r);
        const auto twisted = embed::trace_faces(g, s);
        traced += 2;
        euler_failures += v - e + static_cast<long>(plain.face_count) != plain.euler_characteristic;
        euler_failures += plain.euler_characteristic != 2 - static_cast<long>(plain.surface.euler_genus());
        euler_failures += plain.surface.genus < genus;
        euler_failures += v - e + static_cast<long>(twisted.face_count) != twisted.euler_characteristic;
        euler_failures += twisted.euler_characteristic != 2 - static_cast<long>(twisted.surface.euler_genus());
      }
    }
    c.expect(euler_failures == 0, "Euler's formula on " + str(traced) + " traced embeddings: " +
                                      str(euler_failures) + " failures");

    lap("Euler checks");

    // Subdivision and smoothing leave the genus and the graph unchanged.
    std::size_t subdivision_failures = 0, subdivided = 0;
    for (const auto& g : corpus) {
      if (!is_connected(g)) continue;
      const EdgeId edge = static_cast<EdgeId>(rng() % g.edge_count());
      const auto h = subdivide(g, edge, 1 + rng() % 3);
      ++subdivided;
      subdivision_failures += embed::orientable_genus(h) != embed::orientable_genus(g);
      subdivision_failures += !iso::are_isomorphic(smooth(h), g);
    }
    for (const auto& name : connected_catalog) {
      const auto g = catalog::build(name).graph;
      const auto h = subdivide(g, static_cast<EdgeId>(rng() % g.edge_count()), 2);
      ++subdivided;
      subdivision_failures += embed::euler_genus(h) != embed::euler_genus(g);
    }
    c.expect(subdivision_failures == 0, "genus invariance under subdivision and smoothing on " + str(subdivided) +
                                            " graphs: " + str(subdivision_failures) + " failures");

    lap("subdivision checks");

    // Additivity over components on seeded random catalog pairs, with the
    // union relabeled so the components interleave.
    std::size_t additivity_failures = 0;
    for (int pair = 0; pair < 50; ++pair) {
      const auto& a_name = connected_catalog[rng() % connected_catalog.size()];
      const auto& b_name = connected_catalog[rng() % connected_catalog.size()];
      const auto a = catalog::build(a_name).graph, b = catalog::build(b_name).graph;
      const auto u = shuffled(disjoint_union(shuffled(a, rng), shuffled(b, rng)), rng);
      const bool ok = embed::orientable_genus(u) == embed::orientable_genus(a) + embed::orientable_genus(b) &&
                      embed::euler_genus(u) == embed::euler_genus(a) + embed::euler_genus(b);
      if (!ok) c.note("additivity fails for " + a_name + " + " + b_name);
      additivity_failures += !ok;
    }
    // Joining two small components by an edge keeps the graph connected, so
    // its genus comes from the search kernel rather than the component split.
    for (const auto& [a_name, b_name] : std::vector<std::pair<const char*, const char*>>{
             {"K33", "K33"}, {"K5", "K33"}, {"K4", "K5"}, {"K4", "K33"}}) {
      const auto a = catalog::build(a_name).graph, b = catalog::build(b_name).graph;
      const auto joined = add_edge(disjoint_union(a, b), EdgeAdditionSpec::two_edge_bridge(0, a.edge_count()));
      const bool ok = embed::orientable_genus(joined) == embed::orientable_genus(a) + embed::orientable_genus(b) &&
                      embed::euler_genus(joined) == embed::euler_genus(a) + embed::euler_genus(b);
      if (!ok) c.note(std::string("bridged additivity fails for ") + a_name + " + " + b_name);
      additivity_failures += !ok;
    }
    c.expect(additivity_failures == 0,
             "genus additivity on 50 random catalog pairs and 4 bridged pairs: " + str(additivity_failures) +
                 " failures");

    lap("additivity checks");

    c.expect(replay_disagreements == 0 && replay_candidates > 0,
             "embedding-extension decisions agree with direct genus on " + str(replay_candidates) +
                 " candidates: " + str(replay_disagreements) + " disagreements");

    // Byte-identical output across thread counts.
    bool identical = true;
    for (std::vector<std::string> cmd : {std::vector<std::string>{"classify", "--b1-max", "8", "--format", "json"},
                                         std::vector<std::string>{"replay", "all", "--format", "json"},
                                         std::vector<std::string>{"candidates", "G1", "--edges", "2"}}) {
      auto one = cmd, many = cmd;
      one.insert(one.end(), {"--threads", "1"});
      many.insert(many.end(), {"--threads", "4"});
      const auto a = cli_run(one), b = cli_run(many);
      identical = identical && a.status == 0 && a.out == b.out;
    }
    set_thread_count(4);
    const auto regrown = generate::GenerationFrontier::grow(14);
    set_thread_count(0);
    std::vector<std::string> cached, fresh;
    for (const auto& g : generate::generate_connected_cubic(14, false)) cached.push_back(io::to_sparse6(g));
    for (const auto& [n, level] : regrown.levels)
      for (const auto& [form, g] : level) fresh.push_back(io::to_sparse6(g));
    identical = identical && cached == fresh;
    lap("determinism checks");
    c.expect(identical, "classify, replay, candidates and 14-vertex generation are byte-identical with 1 and 4 threads");
    all_ok = c.report() && all_ok;
  }

  std::cout << (all_ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << '\n';
  return all_ok ? 0 : 1;
}
