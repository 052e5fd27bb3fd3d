#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "obstructionist/graph.hpp"

namespace obstructionist::embed {

class EmbeddingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SurfaceKind { Sphere, ProjectivePlane, Torus };

std::size_t euler_genus_of(SurfaceKind s);
std::string to_string(SurfaceKind s);
/// Accepts "sphere", "projective", "projective-plane", "torus".
SurfaceKind parse_surface(std::string_view text);

/// Cyclic order of the darts anchored at each vertex.
struct RotationSystem {
  std::vector<std::vector<DartId>> order;

  /// rot[d]: the dart following d around its anchor.
  std::vector<DartId> successor(std::size_t dart_count) const;
  static RotationSystem from_successor(const MultiGraph& g, const std::vector<DartId>& rot);
  /// Insertion order of darts at every vertex.
  static RotationSystem identity(const MultiGraph& g);
  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

struct SignedRotationSystem {
  RotationSystem rotation;
  std::vector<std::int8_t> sign;  // per edge, +1 or -1

  static SignedRotationSystem all_positive(RotationSystem r, std::size_t edge_count);
};

struct Surface {
  bool orientable = true;
  std::size_t genus = 0;  // handles when orientable, crosscaps otherwise

  std::size_t euler_genus() const { return orientable ? 2 * genus : genus; }
  std::string name() const;
  friend bool operator==(const Surface&, const Surface&) = default;
};

struct EmbeddingReport {
  std::size_t face_count = 0;
  /// One walk per face; nonorientable walks list the darts in traversal
  /// order (a dart may appear reversed, i.e. as its twin).
  std::vector<std::vector<DartId>> faces;
  long euler_characteristic = 0;
  Surface surface;
};

/// Requires a connected graph with at least one edge.
EmbeddingReport trace_faces(const MultiGraph& g, const RotationSystem& r);
EmbeddingReport trace_faces(const MultiGraph& g, const SignedRotationSystem& r);

/// Summed over components.
std::size_t orientable_genus(const MultiGraph& g);
std::size_t euler_genus(const MultiGraph& g);
bool embeds_in(const MultiGraph& g, SurfaceKind s);

/// Minimum-genus rotation system of a connected graph with its faces.
struct GenusWitness {
  RotationSystem rotation;
  EmbeddingReport report;
};
GenusWitness min_genus_embedding(const MultiGraph& g);

struct EulerGenusWitness {
  SignedRotationSystem rotation;
  EmbeddingReport report;
};
EulerGenusWitness min_euler_genus_embedding(const MultiGraph& g);

/// Every rotation system of a connected genus-1 graph realising the torus,
/// ordered lexicographically by successor table.
std::vector<RotationSystem> torus_embeddings(const MultiGraph& g);

/// Orbits of torus_embeddings(g) under Aut(g) acting on darts together with
/// global reversal of every rotation.
std::size_t count_torus_embedding_classes(const MultiGraph& g);

struct EmbeddingClass {
  RotationSystem representative;
  std::size_t members = 0;
  std::vector<std::size_t> face_lengths;  // sorted
};
std::vector<EmbeddingClass> torus_embedding_classes(const MultiGraph& g);

/// Whether the edge described by spec can be drawn inside one face of the
/// cellular embedding r.
bool extends_to(const MultiGraph& g, const RotationSystem& r, const EdgeAdditionSpec& spec);

nlohmann::json to_json(const MultiGraph& g, const RotationSystem& r, const EmbeddingReport& report);
nlohmann::json to_json(const MultiGraph& g, const SignedRotationSystem& r, const EmbeddingReport& report);

// ---- search kernels -------------------------------------------------------

namespace kernels {

enum class Orientation { Orientable, Signed };

struct FaceSearch {
  std::size_t faces = 0;  // best face count found (or `floor` if none beat it)
  bool found = false;     // a system with more than `floor` faces was found
  SignedRotationSystem witness;
  std::uint64_t nodes = 0;
};

/// Branch-and-bound maximisation of the face count over all rotation systems
/// (signed ones when `kind` is Signed) of a connected graph. Only systems with
/// more than `floor` faces are reported; the search stops at the first system
/// with at least `stop` faces. Results, including the witness, are identical
/// for every thread count.
FaceSearch max_faces(const MultiGraph& g, Orientation kind, std::size_t floor, std::size_t stop,
                     int threads);

/// Single-threaded exhaustive enumeration with full face tracing at every
/// leaf. Kept as the reference the search kernels are tested against.
std::size_t max_faces_reference(const MultiGraph& g, Orientation kind);

}  // namespace kernels

}  // namespace obstructionist::embed
