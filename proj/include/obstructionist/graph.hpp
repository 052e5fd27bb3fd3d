#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace obstructionist {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using DartId = std::uint32_t;

/// Raised for malformed requests against a graph: unknown ids, degree
/// preconditions, bad labels.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  bool is_loop() const { return u == v; }
};

/// Undirected multigraph in half-edge form. Edge `e` owns darts `2e`
/// (anchored at `edge(e).u`) and `2e+1` (anchored at `edge(e).v`); a loop
/// therefore contributes two darts to its vertex. Ids are dense and stable
/// for the lifetime of a value. Vertex labels are an optional overlay.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t vertex_count);

  VertexId add_vertex(std::string label = {});
  EdgeId add_edge(VertexId u, VertexId v);

  std::size_t vertex_count() const { return incidence_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t dart_count() const { return 2 * edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }

  static constexpr DartId twin(DartId d) { return d ^ 1u; }
  static constexpr EdgeId edge_of(DartId d) { return d >> 1; }
  VertexId anchor(DartId d) const {
    const Edge& e = edges_[d >> 1];
    return (d & 1u) ? e.v : e.u;
  }
  /// Vertex at the far end of the dart.
  VertexId head(DartId d) const { return anchor(twin(d)); }

  /// Darts anchored at v, in insertion order.
  std::span<const DartId> darts_at(VertexId v) const { return incidence_.at(v); }
  std::size_t degree(VertexId v) const { return incidence_.at(v).size(); }

  bool has_labels() const { return !labels_.empty(); }
  /// Label of v, or its decimal id when the graph is unlabeled.
  std::string label(VertexId v) const;
  std::optional<VertexId> find_label(std::string_view label) const;
  void set_label(VertexId v, std::string label);

  /// "u-v" using labels where available.
  std::string edge_name(EdgeId e) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<DartId>> incidence_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> label_index_;
};

enum class AttachMode { LoopAttach, SameEdgeChord, TwoEdgeBridge };

/// One application of the G ∪ e operation.
struct EdgeAdditionSpec {
  AttachMode mode = AttachMode::TwoEdgeBridge;
  EdgeId first = 0;
  EdgeId second = 0;  // only meaningful for TwoEdgeBridge

  static EdgeAdditionSpec loop_attach(EdgeId e) { return {AttachMode::LoopAttach, e, e}; }
  static EdgeAdditionSpec same_edge_chord(EdgeId e) { return {AttachMode::SameEdgeChord, e, e}; }
  static EdgeAdditionSpec two_edge_bridge(EdgeId a, EdgeId b);

  friend bool operator==(const EdgeAdditionSpec&, const EdgeAdditionSpec&) = default;
};

std::string to_string(AttachMode mode);
std::string describe(const MultiGraph& g, const EdgeAdditionSpec& spec);

/// All specs applicable to g: every loop attach, every chord, every
/// unordered pair of distinct edges.
std::vector<EdgeAdditionSpec> all_specs(const MultiGraph& g);

// ---- structural queries -------------------------------------------------

std::size_t component_count(const MultiGraph& g);
/// Component index per vertex, numbered by smallest member vertex.
std::vector<std::uint32_t> component_labels(const MultiGraph& g);
std::vector<std::vector<VertexId>> components(const MultiGraph& g);
bool is_connected(const MultiGraph& g);
bool is_cubic(const MultiGraph& g);
bool is_simple(const MultiGraph& g);
std::size_t loop_count(const MultiGraph& g);

std::size_t betti(const MultiGraph& g);

/// Shortest cycle length; nullopt for forests.
std::optional<std::size_t> girth(const MultiGraph& g);
inline constexpr std::size_t kInfiniteGirth = static_cast<std::size_t>(-1);
std::size_t girth_or_infinite(const MultiGraph& g);

struct EdgeCut {
  std::size_t size = 0;
  std::vector<EdgeId> edges;  // sorted
};

/// Minimum edge cut with one witness. Disconnected or single-vertex graphs
/// report 0 with an empty cut.
EdgeCut edge_connectivity(const MultiGraph& g);

/// Requires a connected cubic graph.
bool is_cyclically_4_connected(const MultiGraph& g);

struct GraphInvariants {
  std::size_t b0 = 0;
  std::size_t b1 = 0;
  std::optional<std::size_t> girth;
  EdgeCut edge_connectivity;
  std::optional<bool> cyclically_4_connected;  // set for connected cubic 3-edge-connected graphs
};
GraphInvariants invariants(const MultiGraph& g);

// ---- surgeries (pure; inputs untouched) ---------------------------------

MultiGraph subdivide(const MultiGraph& g, EdgeId e, std::size_t times);

/// Suppresses degree-2 vertices until none remain; a component that is a bare
/// cycle collapses to one vertex carrying one loop.
MultiGraph smooth(const MultiGraph& g);

/// G ∪ e. Subdivided host edges keep their id for the half next to the
/// original `u` endpoint; the inserted edge always gets the largest edge id and
/// the new vertices the largest vertex ids. `names` label the two new
/// vertices (u, v in the construction) when the graph carries labels.
MultiGraph add_edge(const MultiGraph& g, const EdgeAdditionSpec& spec,
                    const std::array<std::string, 2>& names = {});

MultiGraph delete_edge(const MultiGraph& g, EdgeId e);
MultiGraph delete_edges(const MultiGraph& g, std::span<const EdgeId> edges);
MultiGraph delete_edge_and_smooth(const MultiGraph& g, EdgeId e);

/// Replaces the star at v by a triangle.
MultiGraph cubic_y_delta(const MultiGraph& g, VertexId v);

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b);

/// Relabels vertex v as perm[v]; edge order follows the input edge order.
MultiGraph permute_vertices(const MultiGraph& g, std::span<const VertexId> perm);

/// Subgraph induced on a vertex subset, keeping every edge with both ends
/// inside; `old_to_new` receives the vertex map when non-null.
MultiGraph induced_subgraph(const MultiGraph& g, std::span<const VertexId> vertices,
                            std::vector<VertexId>* old_to_new = nullptr);

// ---- label helpers ------------------------------------------------------

/// Finds an edge joining two labeled vertices (lowest id when parallel).
std::optional<EdgeId> find_edge(const MultiGraph& g, std::string_view a, std::string_view b);

/// Resolves compact names such as "AA'", "B'6" or "xy" by splitting the
/// text into two existing labels. Throws when no or several splits match.
EdgeId edge_by_name(const MultiGraph& g, std::string_view name);

/// Resolves "AA'-18" style text into a TwoEdgeBridge spec.
EdgeAdditionSpec bridge_by_name(const MultiGraph& g, std::string_view text);

}  // namespace obstructionist
