#include <algorithm>

#include "doctest.h"
#include "obstructionist/catalog.hpp"
#include "obstructionist/embed.hpp"
#include "obstructionist/obstruction.hpp"
#include "support.hpp"

using namespace obstructionist;
using namespace obstructionist::obstruction;
using embed::SurfaceKind;

TEST_CASE("H0 through H9 are torus obstructions") {
  for (const char* name : {"H0", "H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8", "H9"}) {
    const auto v = is_obstruction(catalog::build(name).graph, SurfaceKind::Torus);
    INFO(name);
    CHECK_FALSE(v.embeds);
    CHECK(v.minimal);
    CHECK(v.is_obstruction());
    CHECK(v.orbit_guard);
  }
}

TEST_CASE("H0+e does not embed in the torus but is not minimal") {
  const auto v = is_obstruction(catalog::build("H0+e").graph, SurfaceKind::Torus);
  CHECK_FALSE(v.embeds);
  CHECK_FALSE(v.minimal);
  CHECK_FALSE(v.is_obstruction());
  // Only deleting the bridge leaves a non-toroidal graph.
  std::size_t failing = 0;
  for (const auto& d : v.deletions) failing += !d.embeds;
  CHECK(failing == 1);
}

TEST_CASE("the six cubic projective-plane obstructions") {
  for (const char* name : {"E42", "F11", "F12", "F13", "F14", "G1"}) {
    INFO(name);
    CHECK(is_obstruction(catalog::build(name).graph, SurfaceKind::ProjectivePlane).is_obstruction());
  }
}

TEST_CASE("K33 is a sphere obstruction and K4 is not") {
  CHECK(is_obstruction(testing_support::complete_bipartite(3, 3), SurfaceKind::Sphere).is_obstruction());
  const auto k4 = is_obstruction(testing_support::complete(4), SurfaceKind::Sphere);
  CHECK(k4.embeds);
  CHECK(k4.embedding.has_value());
  CHECK_FALSE(k4.is_obstruction());
}

TEST_CASE("the Petersen graph embeds in the projective plane") {
  const auto v = is_obstruction(testing_support::petersen(), SurfaceKind::ProjectivePlane);
  CHECK(v.embeds);
  REQUIRE(v.embedding.has_value());
  CHECK(v.embedding->face_count == 6);
}

TEST_CASE("non-cubic input is rejected") {
  CHECK_THROWS_AS(is_obstruction(testing_support::complete(5), SurfaceKind::Torus), ObstructionError);
}

TEST_CASE("orbit representatives decide minimality exactly like every edge") {
  for (const char* name : {"H1", "H6", "H0+e", "F12"}) {
    const auto g = catalog::build(name).graph;
    const auto surface = std::string(name) == "F12" ? SurfaceKind::ProjectivePlane : SurfaceKind::Torus;
    bool all = true;
    for (EdgeId e = 0; e < g.edge_count(); ++e) all = all && embed::embeds_in(delete_edge_and_smooth(g, e), surface);
    INFO(name);
    CHECK(is_obstruction(g, surface).minimal == all);
  }
}

TEST_CASE("deleting an edge never raises the orientable genus") {
  for (const char* name : {"F11", "F13", "G1", "H2", "H0+e"}) {
    const auto g = catalog::build(name).graph;
    const auto genus = embed::orientable_genus(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) CHECK(embed::orientable_genus(delete_edge_and_smooth(g, e)) <= genus);
  }
}

TEST_CASE("classification below Betti number 8 finds nothing non-toroidal") {
  const auto report = classify_all(7);
  CHECK(report.ok());
  CHECK(report.non_toroidal.empty());
  CHECK(report.projective_not_toroidal == 0);
  CHECK(report.summary() == "0 non-toroidal classes, 0 obstructions");
  CHECK(report.class_count > 100);
}

TEST_CASE("classification budget is enforced") {
  CHECK_THROWS_AS(classify_all(9), BudgetExceeded);
  CHECK_THROWS_AS(classify_multigraphs(9), BudgetExceeded);
}

TEST_CASE("small multigraph classification has monotone flags and no non-toroidal class") {
  const auto report = classify_multigraphs(6);
  CHECK(report.ok());
  CHECK(report.non_toroidal.empty());
  CHECK(report.toroidal_count == report.class_count);
}

TEST_CASE("every section replay confirms its conclusion") {
  for (auto s : all_sections()) {
    const auto report = replay_section(s);
    INFO(to_string(s));
    for (const auto& c : report.checks) {
      INFO(c.name << ": expected " << c.expected << ", got " << c.actual);
      CHECK(c.ok);
    }
    for (const auto& c : report.classes) CHECK(c.toroidal == c.extends);
  }
}

TEST_CASE("section names parse") {
  CHECK(parse_section("g1-two-edges") == Section::G1TwoEdges);
  CHECK(parse_section("F13") == Section::F13);
  CHECK_THROWS(parse_section("F15"));
}

TEST_CASE("reports serialize") {
  const auto replay = replay_section(Section::F11);
  const auto j = to_json(replay);
  CHECK(j["section"] == "F11");
  CHECK(j["ok"] == true);
  CHECK(to_table(replay).find("H1") != std::string::npos);
}
