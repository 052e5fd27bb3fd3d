#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "obstructionist/graph.hpp"

namespace obstructionist::iso {

/// Exact isomorphism certificate: the edge multiset of the graph under its
/// canonical relabeling. Equal certificates <=> isomorphic graphs.
struct CanonicalForm {
  std::vector<std::uint32_t> words;

  std::string hex() const;
  static CanonicalForm from_hex(std::string_view hex);
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// relabel[v] is the canonical index of vertex v.
  std::vector<VertexId> relabel;
};

/// Vertex permutations; each maps the edge multiset onto itself.
struct AutomorphismGroup {
  std::vector<std::vector<VertexId>> generators;
  std::uint64_t order = 1;
};

/// `colours` (optional, one per vertex) restrict the relabelings to
/// colour-preserving ones; the colours are part of the certificate.
CanonicalLabeling canonical_labeling(const MultiGraph& g, std::span<const std::uint32_t> colours = {});
CanonicalForm canonical_form(const MultiGraph& g);
/// g rewritten in canonical vertex order, labels carried along.
MultiGraph canonical_graph(const MultiGraph& g);

bool are_isomorphic(const MultiGraph& g, const MultiGraph& h);
/// smooth(g) ≅ smooth(h)
bool are_homeomorphic(const MultiGraph& g, const MultiGraph& h);

AutomorphismGroup automorphism_group(const MultiGraph& g, std::span<const std::uint32_t> colours = {});

std::vector<std::vector<VertexId>> vertex_orbits(const MultiGraph& g);
/// Orbits of Aut(g) on edges, each sorted, listed by smallest member.
std::vector<std::vector<EdgeId>> edge_orbits(const MultiGraph& g);

struct SpecClass {
  EdgeAdditionSpec spec;     // first spec of the input list landing in the class
  MultiGraph graph;          // add_edge(g, spec)
  CanonicalForm form;
  std::size_t members = 0;   // specs of the input list landing in the class
};

/// One representative per isomorphism class of add_edge(g, spec), sorted by
/// certificate.
std::vector<SpecClass> spec_orbits(const MultiGraph& g, std::span<const EdgeAdditionSpec> specs);

/// Number of k-cycles counted as edge sets: loops for k = 1, pairs of
/// parallel edges for k = 2, vertex-simple cycles otherwise.
std::uint64_t count_cycles(const MultiGraph& g, std::size_t k);

/// Searches for `deletions` edges of g whose removal (followed by pruning of
/// degree <= 1 vertices and smoothing) leaves a graph homeomorphic to
/// `target`. Returns the first such edge set in lexicographic order.
std::optional<std::vector<EdgeId>> find_homeomorphic_subgraph(const MultiGraph& g, const MultiGraph& target,
                                                              std::size_t deletions);

}  // namespace obstructionist::iso
