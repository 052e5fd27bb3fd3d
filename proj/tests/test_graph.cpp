#include <random>
#include <sstream>

#include "doctest.h"
#include "obstructionist/graph.hpp"
#include "obstructionist/graph_io.hpp"
#include "obstructionist/iso.hpp"
#include "support.hpp"

using namespace obstructionist;
using namespace testing_support;

TEST_CASE("darts and degrees") {
  MultiGraph g = from_pairs(2, {{0, 0}, {0, 1}});
  CHECK(g.dart_count() == 4);
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 1);
  for (DartId d = 0; d < g.dart_count(); ++d) {
    CHECK(MultiGraph::twin(MultiGraph::twin(d)) == d);
    CHECK(MultiGraph::edge_of(d) == MultiGraph::edge_of(MultiGraph::twin(d)));
  }
  CHECK(g.head(2) == 1);
  CHECK_THROWS_AS(g.add_edge(0, 5), GraphError);
}

TEST_CASE("labels are unique") {
  MultiGraph g;
  g.add_vertex("A");
  CHECK_THROWS_AS(g.add_vertex("A"), GraphError);
  g.add_vertex("A'");
  CHECK(g.find_label("A'") == VertexId{1});
  CHECK(g.label(1) == "A'");
}

TEST_CASE("betti number") {
  CHECK(betti(MultiGraph{}) == 0);
  CHECK(betti(complete(4)) == 3);
  CHECK(betti(disjoint_union(complete_bipartite(3, 3), complete_bipartite(3, 3))) == 8);
  CHECK(betti(MultiGraph(3)) == 0);
  for (const MultiGraph& g : {complete(4), complete_bipartite(3, 3), prism(), petersen(), theta(), dumbbell()})
    CHECK(betti(g) == g.vertex_count() / 2 + component_count(g));
}

TEST_CASE("girth") {
  CHECK(girth(from_pairs(1, {{0, 0}})) == std::size_t{1});
  CHECK(girth(theta()) == std::size_t{2});
  CHECK(girth(complete(4)) == std::size_t{3});
  CHECK(girth(complete_bipartite(3, 3)) == std::size_t{4});
  CHECK(girth(petersen()) == std::size_t{5});
  CHECK(girth(cycle(7)) == std::size_t{7});
  CHECK(!girth(from_pairs(3, {{0, 1}, {1, 2}})).has_value());
  CHECK(girth_or_infinite(MultiGraph(2)) == kInfiniteGirth);
  // even cycle found from a root where the two paths meet at equal depth
  CHECK(girth(cycle(6)) == std::size_t{6});
}

TEST_CASE("edge connectivity") {
  // two triangles with pendant vertices joined by a bridge
  MultiGraph g = from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
  auto cut = edge_connectivity(g);
  CHECK(cut.size == 1);
  CHECK(cut.edges == std::vector<EdgeId>{6});
  CHECK(edge_connectivity(complete(4)).size == 3);
  CHECK(edge_connectivity(petersen()).size == 3);
  CHECK(edge_connectivity(cycle(5)).size == 2);
  CHECK(edge_connectivity(MultiGraph(2)).size == 0);
  CHECK(edge_connectivity(MultiGraph(1)).size == 0);
  // the witness really disconnects the graph
  auto prism_cut = edge_connectivity(prism());
  CHECK(prism_cut.size == 3);
  CHECK(!is_connected(delete_edges(prism(), prism_cut.edges)));
}

TEST_CASE("cyclic 4-connectivity") {
  CHECK(is_cyclically_4_connected(complete(4)));
  CHECK(is_cyclically_4_connected(complete_bipartite(3, 3)));
  CHECK(is_cyclically_4_connected(petersen()));
  CHECK(!is_cyclically_4_connected(prism()));
  CHECK_THROWS_AS(is_cyclically_4_connected(cycle(4)), GraphError);
}

TEST_CASE("subdivide") {
  MultiGraph loop = from_pairs(1, {{0, 0}});
  MultiGraph s = subdivide(loop, 0, 1);
  CHECK(s.vertex_count() == 2);
  CHECK(s.edge_count() == 2);
  CHECK(girth(s) == std::size_t{2});
  MultiGraph k4 = subdivide(complete(4), 2, 1);
  CHECK(k4.vertex_count() == 5);
  CHECK(k4.edge_count() == 7);
  CHECK(betti(k4) == 3);
  CHECK_THROWS_AS(subdivide(complete(4), 9, 1), std::exception);
}

TEST_CASE("smooth") {
  // K4 with one edge replaced by the path 0-4-1
  MultiGraph g = from_pairs(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 1}});
  MultiGraph s = smooth(g);
  CHECK(s.vertex_count() == 4);
  CHECK(iso::are_isomorphic(s, complete(4)));
  MultiGraph tri = smooth(cycle(3));
  CHECK(tri.vertex_count() == 1);
  CHECK(tri.edge_count() == 1);
  CHECK(tri.edge(0).is_loop());
  // idempotent
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    MultiGraph r = random_multigraph(8, 9, true, rng);
    MultiGraph once = smooth(r);
    CHECK(iso::are_isomorphic(once, smooth(once)));
  }
  CHECK(iso::are_isomorphic(smooth(subdivide(subdivide(complete(4), 0, 2), 3, 1)), complete(4)));
}

TEST_CASE("add_edge modes") {
  const MultiGraph k4 = complete(4);
  MultiGraph loop = add_edge(k4, EdgeAdditionSpec::loop_attach(0));
  CHECK(loop.vertex_count() == 6);
  CHECK(is_cubic(loop));
  CHECK(girth(loop) == std::size_t{1});
  MultiGraph chord = add_edge(k4, EdgeAdditionSpec::same_edge_chord(0));
  CHECK(is_cubic(chord));
  CHECK(girth(chord) == std::size_t{2});
  MultiGraph bridge = add_edge(k4, EdgeAdditionSpec::two_edge_bridge(0, 5));
  CHECK(is_cubic(bridge));
  CHECK(iso::are_isomorphic(bridge, complete_bipartite(3, 3)));
  CHECK_THROWS_AS(EdgeAdditionSpec::two_edge_bridge(1, 1), GraphError);
  CHECK_THROWS_AS(add_edge(k4, EdgeAdditionSpec::loop_attach(10)), GraphError);

  // b1 grows by one unless two components are joined
  for (const auto& spec : all_specs(k4)) CHECK(betti(add_edge(k4, spec)) == 4);
  MultiGraph two = disjoint_union(k4, k4);
  MultiGraph joined = add_edge(two, EdgeAdditionSpec::two_edge_bridge(0, 6));
  CHECK(is_connected(joined));
  CHECK(betti(joined) == betti(two));
}

TEST_CASE("add then delete recovers the smoothed graph") {
  for (const MultiGraph& g : {complete(4), prism(), petersen(), complete_bipartite(3, 3)}) {
    for (const auto& spec : all_specs(g)) {
      MultiGraph h = add_edge(g, spec);
      MultiGraph back = delete_edge_and_smooth(h, static_cast<EdgeId>(h.edge_count() - 1));
      if (spec.mode == AttachMode::LoopAttach) {
        // the pendant stub remains; pruning it is not part of smoothing
        CHECK(back.vertex_count() == g.vertex_count() + 1);
        continue;
      }
      CHECK(iso::are_isomorphic(back, smooth(g)));
    }
  }
}

TEST_CASE("delete_edge_and_smooth") {
  MultiGraph k4_minus = delete_edge_and_smooth(complete(4), 0);
  CHECK(iso::are_isomorphic(k4_minus, theta()));
  MultiGraph h0 = disjoint_union(complete_bipartite(3, 3), complete_bipartite(3, 3));
  MultiGraph h0_minus = delete_edge_and_smooth(h0, 0);
  CHECK(iso::are_isomorphic(h0_minus, disjoint_union(complete_bipartite(3, 3), complete(4))));
  for (EdgeId e = 0; e < 15; ++e) CHECK(is_cubic(delete_edge_and_smooth(petersen(), e)));
}

TEST_CASE("cubic Y-delta") {
  MultiGraph k4 = complete(4);
  MultiGraph y = cubic_y_delta(k4, 0);
  CHECK(is_cubic(y));
  CHECK(iso::are_isomorphic(y, prism()));
  CHECK(iso::count_cycles(y, 3) == iso::count_cycles(k4, 3) - 3 + 1);
  CHECK_THROWS_AS(cubic_y_delta(cycle(4), 0), GraphError);

  // bridging two edges of a star closes a triangle at that vertex
  for (const MultiGraph& g : {petersen(), complete_bipartite(3, 3), prism()}) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto star = g.darts_at(v);
      auto spec = EdgeAdditionSpec::two_edge_bridge(MultiGraph::edge_of(star[0]), MultiGraph::edge_of(star[1]));
      CHECK(iso::are_isomorphic(cubic_y_delta(g, v), add_edge(g, spec)));
    }
  }
}

TEST_CASE("sparse6 matches the reference encoder") {
  MultiGraph g = from_pairs(7, {{0, 1}, {0, 2}, {1, 2}, {5, 6}});
  CHECK(io::to_sparse6(g) == ":Fa@x^");
  MultiGraph back = io::from_sparse6(":Fa@x^");
  CHECK(back.vertex_count() == 7);
  CHECK(back.edge_count() == 4);
  CHECK(iso::are_isomorphic(back, g));
  CHECK(io::from_sparse6(">>sparse6<<:Fa@x^\n").edge_count() == 4);
  CHECK_THROWS_AS(io::from_sparse6("Fa@x^"), io::FormatError);
}

TEST_CASE("sparse6 round trips multigraphs") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + rng() % 70;
    MultiGraph g = random_multigraph(n, rng() % 40, true, rng);
    MultiGraph back = io::from_sparse6(io::to_sparse6(g));
    REQUIRE(back.vertex_count() == n);
    std::vector<VertexId> id(n);
    std::iota(id.begin(), id.end(), 0u);
    CHECK(edge_multiset(back, id) == edge_multiset(g, id));
  }
}

TEST_CASE("edge list") {
  MultiGraph g = io::parse_edge_list("# comment\nA A'\n\nA 1  # trailing\nlonely\n1 1\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.degree(*g.find_label("lonely")) == 0);
  MultiGraph back = io::parse_edge_list(io::to_edge_list(g));
  CHECK(back.vertex_count() == 4);
  CHECK(iso::are_isomorphic(back, g));
  CHECK_THROWS_AS(io::parse_edge_list("a b c\n"), io::FormatError);
}

TEST_CASE("edge names") {
  MultiGraph g = io::parse_edge_list("A A'\nA 1\nA' 8\n1 8\n");
  CHECK(edge_by_name(g, "AA'") == 0);
  CHECK(edge_by_name(g, "A'8") == 2);
  CHECK(edge_by_name(g, "81") == 3);
  CHECK_THROWS_AS(edge_by_name(g, "A9"), GraphError);
  auto spec = bridge_by_name(g, "AA'-18");
  CHECK(spec.mode == AttachMode::TwoEdgeBridge);
  CHECK(describe(g, spec) == "AA'-18");
}

TEST_CASE("DOT output") {
  std::string dot = io::to_dot(complete(4));
  CHECK(dot.find("graph G {") == 0);
  CHECK(dot.find("v0 -- v1") != std::string::npos);
}
