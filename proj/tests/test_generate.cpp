#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "obstructionist/catalog.hpp"
#include "obstructionist/generate.hpp"
#include "obstructionist/graph_io.hpp"
#include "obstructionist/iso.hpp"
#include "obstructionist/parallel.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace obstructionist;
using namespace obstructionist::generate;

namespace {

std::size_t count_with_vertices(const std::vector<MultiGraph>& gs, std::size_t n) {
  return static_cast<std::size_t>(
      std::count_if(gs.begin(), gs.end(), [n](const MultiGraph& g) { return g.vertex_count() == n; }));
}

}  // namespace

TEST_CASE("simple connected cubic class counts match the labeled-enumeration oracle") {
  const auto gs = generate_connected_cubic(8, true);
  for (std::size_t n : {4, 6, 8}) {
    INFO("n = " << n);
    CHECK(count_with_vertices(gs, n) == testing_support::unlabeled_cubic_count(n, true));
  }
  CHECK(count_with_vertices(gs, 4) == 1);
  CHECK(count_with_vertices(gs, 6) == 2);
  CHECK(count_with_vertices(gs, 8) == 5);
}

TEST_CASE("connected cubic multigraph class counts match the labeled-enumeration oracle") {
  const auto gs = generate_connected_cubic(6, false);
  for (std::size_t n : {2, 4, 6}) {
    INFO("n = " << n);
    CHECK(count_with_vertices(gs, n) == testing_support::unlabeled_cubic_count(n, false));
  }
}

TEST_CASE("generated graphs are connected, cubic and pairwise non-isomorphic") {
  const auto gs = generate_connected_cubic(10, false);
  std::set<iso::CanonicalForm> forms;
  for (const auto& g : gs) {
    CHECK(is_cubic(g));
    CHECK(is_connected(g));
    forms.insert(iso::canonical_form(g));
  }
  CHECK(forms.size() == gs.size());
  CHECK(count_with_vertices(gs, 8) == 71);
}

TEST_CASE("simple output agrees with filtering the multigraph output") {
  const auto all = generate_connected_cubic(10, false);
  const auto simple = generate_connected_cubic(10, true);
  CHECK(simple.size() == static_cast<std::size_t>(std::count_if(all.begin(), all.end(), is_simple)));
  CHECK(count_with_vertices(simple, 10) == 19);
}

TEST_CASE("odd or tiny vertex bounds are rejected") {
  CHECK_THROWS_AS(generate_connected_cubic(7, true), GenerationError);
  CHECK_THROWS_AS(generate_connected_cubic(0, true), GenerationError);
}

TEST_CASE("graphs of bounded Betti number") {
  const auto three = generate_all_cubic_b1_le(3);
  REQUIRE(three.size() == 1);
  CHECK(iso::are_isomorphic(three[0], testing_support::complete(4)));

  const auto six = generate_all_cubic_b1_le(6);
  const auto g1 = iso::canonical_form(catalog::build("G1").graph);
  CHECK(std::any_of(six.begin(), six.end(), [&](const MultiGraph& g) { return iso::canonical_form(g) == g1; }));
  // K4 ⊔ K4 is the only disconnected member up to Betti number 6; with
  // components of Betti number 3 and 4 it reaches 7.
  for (const auto& g : six) {
    CHECK(is_simple(g));
    CHECK(betti(g) <= 6);
    if (!is_connected(g)) CHECK(iso::are_isomorphic(g, disjoint_union(testing_support::complete(4),
                                                                       testing_support::complete(4))));
  }

  const auto eight = generate_all_cubic_b1_le(8);
  const auto h0 = iso::canonical_form(catalog::build("H0").graph);
  CHECK(std::any_of(eight.begin(), eight.end(), [&](const MultiGraph& g) { return iso::canonical_form(g) == h0; }));
  std::size_t disconnected = 0;
  for (const auto& g : eight) disconnected += !is_connected(g);
  // Pairs of components with Betti numbers (3,3), (3,4), (3,5), (4,4):
  // 1 + 2 + 5 + 3 classes.
  CHECK(disconnected == 11);
  CHECK(std::is_sorted(eight.begin(), eight.end(), [](const MultiGraph& a, const MultiGraph& b) {
    return iso::canonical_form(a) < iso::canonical_form(b);
  }));
}

TEST_CASE("augmentation counts stay within the recorded bounds") {
  CHECK(enumerate_augmentations(catalog::build("F11").graph, 1, 4).size() <= 10);
  CHECK(enumerate_augmentations(catalog::build("F12").graph, 1, 4).size() <= 14);
  CHECK(enumerate_augmentations(catalog::build("F13").graph, 1, 4).size() <= 10);
  CHECK(enumerate_augmentations(catalog::build("F14").graph, 1, 4).size() <= 10);
  CHECK(enumerate_augmentations(catalog::build("G1").graph, 1, 3).size() <= 6);
}

TEST_CASE("augmentations raise the Betti number and respect the girth bound") {
  const auto g1 = catalog::build("G1").graph;
  for (int k : {1, 2}) {
    for (const auto& a : enumerate_augmentations(g1, k, 4)) {
      CHECK(betti(a.graph) == betti(g1) + static_cast<std::size_t>(k));
      CHECK(girth_or_infinite(a.graph) >= 4);
      CHECK(a.specs.size() == static_cast<std::size_t>(k));
      CHECK(a.form == iso::canonical_form(a.graph));
    }
  }
}

TEST_CASE("one-edge augmentation member counts cover every spec") {
  const auto k33 = catalog::build("K33").graph;
  std::size_t total = 0;
  for (const auto& a : enumerate_augmentations(k33, 1, 0)) total += a.members;
  CHECK(total == all_specs(k33).size());
}

TEST_CASE("every H graph appears among the augmentations of its base graph") {
  const auto f11 = enumerate_augmentations(catalog::build("F11").graph, 1, 4);
  const auto g1 = enumerate_augmentations(catalog::build("G1").graph, 2, 4);
  auto contains = [](const std::vector<Augmentation>& list, const MultiGraph& h) {
    const auto form = iso::canonical_form(h);
    return std::any_of(list.begin(), list.end(), [&](const Augmentation& a) { return a.form == form; });
  };
  for (const char* name : {"H1", "H2", "H3", "H4"}) CHECK_MESSAGE(contains(f11, catalog::build(name).graph), name);
  for (const char* name : {"H4", "H5", "H6", "H7", "H8", "H9"})
    CHECK_MESSAGE(contains(g1, catalog::build(name).graph), name);
}

TEST_CASE("augmentation rejects bad arguments") {
  CHECK_THROWS_AS(enumerate_augmentations(catalog::build("K5").graph, 1, 3), GenerationError);
  CHECK_THROWS_AS(enumerate_augmentations(catalog::build("K4").graph, 3, 3), GenerationError);
}

TEST_CASE("corpus files round-trip and the manifest matches") {
  const auto dir = std::filesystem::temp_directory_path() / "obstructionist_corpus_test";
  std::filesystem::remove_all(dir);
  const auto rows = write_corpus(dir, 8);
  const auto expected = generate_connected_cubic(8, false);
  std::size_t total = 0;
  for (const auto& row : rows) {
    std::ifstream in(dir / row.file);
    const auto graphs = io::read_sparse6_stream(in);
    CHECK(graphs.size() == row.count);
    for (const auto& g : graphs) {
      CHECK(g.vertex_count() == row.vertices);
      if (row.simple) CHECK(is_simple(g));
    }
    if (!row.simple) total += row.count;
  }
  CHECK(total == expected.size());
  CHECK(std::filesystem::exists(dir / "manifest.json"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("frontier growth does not depend on the thread count") {
  set_thread_count(1);
  const auto serial = GenerationFrontier::grow(10);
  set_thread_count(3);
  const auto parallel = GenerationFrontier::grow(10);
  set_thread_count(0);
  REQUIRE(serial.levels.size() == parallel.levels.size());
  for (const auto& [n, level] : serial.levels) {
    const auto& other = parallel.levels.at(n);
    REQUIRE(level.size() == other.size());
    auto a = level.begin();
    auto b = other.begin();
    for (; a != level.end(); ++a, ++b) {
      CHECK(a->first == b->first);
      CHECK(io::to_sparse6(a->second) == io::to_sparse6(b->second));
    }
  }
}
