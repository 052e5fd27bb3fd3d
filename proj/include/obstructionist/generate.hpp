#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "obstructionist/graph.hpp"
#include "obstructionist/iso.hpp"

namespace obstructionist::generate {

class GenerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Connected cubic multigraphs by vertex count, keyed by canonical form. Every
/// stored graph is the canonical relabeling of its class.
struct GenerationFrontier {
  std::map<std::size_t, std::map<iso::CanonicalForm, MultiGraph>> levels;

  /// Grows breadth-first by G ∪ e from the theta and dumbbell graphs.
  static GenerationFrontier grow(std::size_t max_vertices);
};

/// One graph per isomorphism class of connected cubic multigraphs with at
/// most `max_vertices` vertices, ordered by vertex count then canonical form.
/// `simple_only` drops classes with loops or parallel edges.
std::vector<MultiGraph> generate_connected_cubic(std::size_t max_vertices, bool simple_only);

/// Cubic graphs, connected or not, with Betti number at most `b1_max`, one
/// per isomorphism class and sorted by canonical form.
std::vector<MultiGraph> generate_all_cubic_b1_le(std::size_t b1_max, bool simple_only = true);

struct Augmentation {
  std::vector<EdgeAdditionSpec> specs;  // the k-th spec refers to the graph after k-1 additions
  std::vector<std::string> descriptions;
  MultiGraph graph;
  iso::CanonicalForm form;
  std::size_t members = 0;  // spec sequences landing in the class
};

/// One representative per isomorphism class of g ∪ e (edges_to_add = 1) or
/// g ∪ e1 ∪ e2 (edges_to_add = 2) with girth >= min_girth_final, sorted by
/// canonical form. Intermediate graphs of the two-edge case keep girth >= 3.
std::vector<Augmentation> enumerate_augmentations(const MultiGraph& g, int edges_to_add,
                                                  std::size_t min_girth_final);

struct CorpusEntry {
  std::size_t vertices = 0;
  bool simple = false;
  std::size_t count = 0;
  std::string file;
};

/// Writes connected cubic classes up to `max_vertices` as sparse6 files, one
/// per (vertex count, simple flag), plus manifest.json. Returns the manifest rows.
std::vector<CorpusEntry> write_corpus(const std::filesystem::path& dir, std::size_t max_vertices);

}  // namespace obstructionist::generate
