#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "obstructionist/embed.hpp"
#include "obstructionist/graph.hpp"
#include "obstructionist/iso.hpp"

namespace obstructionist::obstruction {

class ObstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A single invariant the report asserts; `ok` is false on mismatch.
struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct OrbitDeletion {
  EdgeId representative = 0;
  std::string edge;  // name of the representative
  std::size_t orbit_size = 0;
  bool embeds = false;  // delete_edge_and_smooth(g, representative) embeds
};

struct ObstructionVerdict {
  MultiGraph graph;
  embed::SurfaceKind surface = embed::SurfaceKind::Torus;
  bool embeds = false;
  bool minimal = false;  // every single-edge deletion followed by smoothing embeds
  /// Faces of a witness embedding when the graph embeds.
  std::optional<embed::EmbeddingReport> embedding;
  std::vector<OrbitDeletion> deletions;
  /// Orbit sizes sum to |E| and, for simple graphs, |orbit|·|stabilizer| = |Aut|.
  bool orbit_guard = false;

  bool is_obstruction() const { return !embeds && minimal; }
};

/// Certifies whether a cubic graph is a topological obstruction for s.
ObstructionVerdict is_obstruction(const MultiGraph& g, embed::SurfaceKind s);

struct ClassRecord {
  iso::CanonicalForm form;
  MultiGraph graph;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t b0 = 0;
  std::size_t b1 = 0;
  std::size_t girth = 0;  // 0 for forests
  std::size_t edge_connectivity = 0;
  bool simple = true;
  bool planar = false;
  bool projective = false;
  bool toroidal = false;
  bool obstruction = false;  // torus obstruction; only non-toroidal classes qualify
  std::optional<std::string> catalog_name;
};

struct ClassificationReport {
  std::size_t b1_max = 0;
  bool simple = true;
  std::size_t class_count = 0;
  std::size_t planar_count = 0;
  std::size_t projective_count = 0;
  std::size_t toroidal_count = 0;
  /// Only the non-toroidal classes are kept in full.
  std::vector<ClassRecord> non_toroidal;
  std::size_t obstruction_count = 0;
  /// Classes flagged projective-planar but not toroidal.
  std::size_t projective_not_toroidal = 0;
  std::vector<Check> checks;

  bool ok() const;
  std::string summary() const;  // "<k> non-toroidal classes, <j> obstructions"
};

/// Classifies every simple cubic graph with Betti number <= b1_max (at most 8)
/// and asserts the catalog classification on the result.
ClassificationReport classify_all(std::size_t b1_max);

/// Cubic multigraph classes (loops and parallel edges allowed) with Betti
/// number <= b1_max that do not embed in the torus, listed with their flags.
/// No catalog assertion is attached beyond flag monotonicity.
ClassificationReport classify_multigraphs(std::size_t b1_max);

enum class Section { F11, F12, F13, F14, G1OneEdge, G1TwoEdges };

std::string to_string(Section s);
/// Accepts "F11".."F14", "G1-one-edge", "G1-two-edges" (case-insensitive).
Section parse_section(std::string_view text);
const std::vector<Section>& all_sections();

struct ReplayClass {
  std::vector<std::string> construction;  // one description per added edge
  std::size_t members = 0;
  iso::CanonicalForm form;
  std::size_t girth = 0;
  bool toroidal = false;            // direct genus computation
  bool extends = false;             // some torus embedding of the host admits the last edge
  std::optional<std::string> catalog_name;
};

/// A per-first-edge count bound in the two-edge replay.
struct CaseBound {
  std::string first_edge;
  std::size_t classes = 0;  // classes counted for this case
  std::size_t bound = 0;
  std::string note;
};

struct ReplayReport {
  Section section = Section::F11;
  std::string base;
  int edges_added = 1;
  std::size_t min_girth = 4;
  std::vector<ReplayClass> classes;
  std::vector<CaseBound> case_bounds;
  std::vector<Check> checks;

  bool ok() const;
};

/// Reruns the augmentation enumeration behind one case analysis and asserts
/// its conclusion.
ReplayReport replay_section(Section s);

nlohmann::json to_json(const ObstructionVerdict& v);
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const ReplayReport& r);

std::string to_table(const ObstructionVerdict& v);
std::string to_table(const ClassificationReport& r);
std::string to_table(const ReplayReport& r);

}  // namespace obstructionist::obstruction
