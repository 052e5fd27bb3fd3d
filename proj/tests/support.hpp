#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "obstructionist/graph.hpp"

namespace testing_support {

using obstructionist::Edge;
using obstructionist::MultiGraph;
using obstructionist::VertexId;

inline MultiGraph from_pairs(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
  MultiGraph g(n);
  for (auto [a, b] : pairs) g.add_edge(a, b);
  return g;
}

inline MultiGraph complete(std::size_t n) {
  MultiGraph g(n);
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

inline MultiGraph complete_bipartite(std::size_t p, std::size_t q) {
  MultiGraph g(p + q);
  for (VertexId a = 0; a < p; ++a)
    for (VertexId b = 0; b < q; ++b) g.add_edge(a, static_cast<VertexId>(p + b));
  return g;
}

inline MultiGraph cycle(std::size_t n) {
  MultiGraph g(n);
  for (VertexId v = 0; v < n; ++v) g.add_edge(v, static_cast<VertexId>((v + 1) % n));
  return g;
}

inline MultiGraph prism() { return from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}); }

inline MultiGraph petersen() {
  MultiGraph g(10);
  for (VertexId i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

inline MultiGraph theta() { return from_pairs(2, {{0, 1}, {0, 1}, {0, 1}}); }
inline MultiGraph dumbbell() { return from_pairs(2, {{0, 0}, {1, 1}, {0, 1}}); }

/// Sorted multiset of normalised endpoint pairs.
inline std::vector<std::pair<VertexId, VertexId>> edge_multiset(const MultiGraph& g,
                                                                const std::vector<VertexId>& perm) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const Edge& e : g.edges()) {
    VertexId a = perm[e.u], b = perm[e.v];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// |Aut(g)| by trying every vertex permutation.
inline std::uint64_t brute_force_aut_order(const MultiGraph& g) {
  std::vector<VertexId> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0u);
  const auto base = edge_multiset(g, perm);
  std::uint64_t count = 0;
  do {
    count += edge_multiset(g, perm) == base;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

inline bool brute_force_isomorphic(const MultiGraph& g, const MultiGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<VertexId> id(h.vertex_count());
  std::iota(id.begin(), id.end(), 0u);
  const auto target = edge_multiset(h, id);
  std::vector<VertexId> perm = id;
  do {
    if (edge_multiset(g, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline MultiGraph shuffled(const MultiGraph& g, std::mt19937& rng) {
  std::vector<VertexId> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  MultiGraph out(g.vertex_count());
  std::vector<Edge> edges = g.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  for (const Edge& e : edges) {
    if (rng() & 1u) out.add_edge(perm[e.u], perm[e.v]);
    else out.add_edge(perm[e.v], perm[e.u]);
  }
  return out;
}

/// Random multigraph with n vertices and m edges; loops allowed when asked.
inline MultiGraph random_multigraph(std::size_t n, std::size_t m, bool loops, std::mt19937& rng) {
  MultiGraph g(n);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  while (g.edge_count() < m) {
    VertexId a = pick(rng), b = pick(rng);
    if (a == b && !loops) continue;
    g.add_edge(a, b);
  }
  return g;
}

}  // namespace testing_support
