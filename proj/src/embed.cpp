#include "obstructionist/embed.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "embed_internal.hpp"
#include "obstructionist/iso.hpp"
#include "obstructionist/parallel.hpp"

namespace obstructionist::embed {

namespace {

void check_rotation(const MultiGraph& g, const RotationSystem& r) {
  if (r.order.size() != g.vertex_count()) throw EmbeddingError("rotation system: wrong vertex count");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<DartId> got = r.order[v];
    std::vector<DartId> want(g.darts_at(v).begin(), g.darts_at(v).end());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) throw EmbeddingError("rotation system: vertex " + g.label(v) + " does not list its darts");
  }
}

void require_connected(const MultiGraph& g) {
  if (g.vertex_count() == 0 || !is_connected(g)) throw EmbeddingError("face tracing needs a connected graph");
}

Surface surface_for(long chi, bool orientable) {
  Surface s;
  s.orientable = orientable;
  const long euler_genus = 2 - chi;
  s.genus = static_cast<std::size_t>(orientable ? euler_genus / 2 : euler_genus);
  return s;
}

// Whether some cycle carries an odd number of negative edges.
bool signs_orientable(const MultiGraph& g, const std::vector<std::int8_t>& sign) {
  std::vector<int> side(g.vertex_count(), 0);
  std::deque<VertexId> queue{0};
  side[0] = 1;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (DartId d : g.darts_at(x)) {
      VertexId y = g.head(d);
      const int want = side[x] * sign[MultiGraph::edge_of(d)];
      if (side[y] == 0) {
        side[y] = want;
        queue.push_back(y);
      } else if (side[y] != want) {
        return false;
      }
    }
  }
  return true;
}

std::vector<MultiGraph> component_graphs(const MultiGraph& g) {
  std::vector<MultiGraph> out;
  for (const auto& part : components(g)) out.push_back(induced_subgraph(g, part));
  return out;
}

std::size_t faces_needed(const MultiGraph& c, std::size_t euler_genus) {
  // V - E + F = 2 - euler_genus
  return c.edge_count() + 2 - c.vertex_count() - euler_genus;
}

bool component_has_faces(const MultiGraph& c, kernels::Orientation kind, std::size_t faces) {
  if (c.edge_count() == 0) return faces <= 1;
  auto r = kernels::max_faces(c, kind, faces - 1, faces, thread_count());
  return r.found;
}

// Smallest Euler genus among 0..limit reachable by a component; limit+1 when none.
std::size_t component_euler_genus_up_to(const MultiGraph& c, kernels::Orientation kind, std::size_t limit) {
  for (std::size_t eg = 0; eg <= limit; ++eg) {
    if (kind == kernels::Orientation::Orientable && eg % 2 == 1) continue;
    const long need = static_cast<long>(c.edge_count()) + 2 - static_cast<long>(c.vertex_count()) - static_cast<long>(eg);
    if (need < 1) break;
    const auto search = eg == 0 ? kernels::Orientation::Orientable : kind;
    if (component_has_faces(c, search, static_cast<std::size_t>(need))) return eg;
  }
  return limit + 1;
}

bool is_planar_component(const MultiGraph& c) {
  return component_has_faces(c, kernels::Orientation::Orientable, faces_needed(c, 0));
}

std::size_t max_faces_of(const MultiGraph& c, kernels::Orientation kind) {
  if (c.edge_count() == 0) return 1;
  const std::size_t top = faces_needed(c, 0);
  if (kind == kernels::Orientation::Orientable) return kernels::max_faces(c, kind, 0, top, thread_count()).faces;
  // Signed systems reach the planar count only for planar graphs, which the
  // orientable search settles much faster.
  if (is_planar_component(c)) return top;
  return kernels::max_faces(c, kind, 0, top - 1, thread_count()).faces;
}

}  // namespace

std::size_t euler_genus_of(SurfaceKind s) {
  switch (s) {
    case SurfaceKind::Sphere: return 0;
    case SurfaceKind::ProjectivePlane: return 1;
    case SurfaceKind::Torus: return 2;
  }
  return 0;
}

std::string to_string(SurfaceKind s) {
  switch (s) {
    case SurfaceKind::Sphere: return "sphere";
    case SurfaceKind::ProjectivePlane: return "projective";
    case SurfaceKind::Torus: return "torus";
  }
  return "?";
}

SurfaceKind parse_surface(std::string_view text) {
  if (text == "sphere" || text == "plane") return SurfaceKind::Sphere;
  if (text == "projective" || text == "projective-plane" || text == "rp2") return SurfaceKind::ProjectivePlane;
  if (text == "torus") return SurfaceKind::Torus;
  throw std::invalid_argument("unknown surface '" + std::string(text) + "'");
}

std::vector<DartId> RotationSystem::successor(std::size_t dart_count) const {
  std::vector<DartId> rot(dart_count, 0);
  for (const auto& cyc : order)
    for (std::size_t i = 0; i < cyc.size(); ++i) rot.at(cyc[i]) = cyc[(i + 1) % cyc.size()];
  return rot;
}

RotationSystem RotationSystem::from_successor(const MultiGraph& g, const std::vector<DartId>& rot) {
  RotationSystem r;
  r.order.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto darts = g.darts_at(v);
    if (darts.empty()) continue;
    DartId d = darts[0];
    do {
      r.order[v].push_back(d);
      d = rot.at(d);
      if (r.order[v].size() > darts.size()) throw EmbeddingError("successor table is not a rotation");
    } while (d != darts[0]);
  }
  check_rotation(g, r);
  return r;
}

RotationSystem RotationSystem::identity(const MultiGraph& g) {
  RotationSystem r;
  for (VertexId v = 0; v < g.vertex_count(); ++v) r.order.emplace_back(g.darts_at(v).begin(), g.darts_at(v).end());
  return r;
}

SignedRotationSystem SignedRotationSystem::all_positive(RotationSystem r, std::size_t edge_count) {
  return {std::move(r), std::vector<std::int8_t>(edge_count, 1)};
}

std::string Surface::name() const {
  if (orientable) {
    if (genus == 0) return "sphere";
    if (genus == 1) return "torus";
    return "orientable genus " + std::to_string(genus);
  }
  if (genus == 1) return "projective plane";
  if (genus == 2) return "Klein bottle";
  return "nonorientable genus " + std::to_string(genus);
}

EmbeddingReport trace_faces(const MultiGraph& g, const RotationSystem& r) {
  require_connected(g);
  check_rotation(g, r);
  const auto rot = r.successor(g.dart_count());
  EmbeddingReport report;
  std::vector<char> seen(g.dart_count(), 0);
  for (DartId d = 0; d < g.dart_count(); ++d) {
    if (seen[d]) continue;
    std::vector<DartId> walk;
    DartId cur = d;
    do {
      seen[cur] = 1;
      walk.push_back(cur);
      cur = rot[MultiGraph::twin(cur)];
    } while (cur != d);
    report.faces.push_back(std::move(walk));
  }
  if (g.edge_count() == 0) report.faces.emplace_back();
  report.face_count = report.faces.size();
  report.euler_characteristic = static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) +
                                static_cast<long>(report.face_count);
  report.surface = surface_for(report.euler_characteristic, true);
  return report;
}

EmbeddingReport trace_faces(const MultiGraph& g, const SignedRotationSystem& r) {
  require_connected(g);
  check_rotation(g, r.rotation);
  if (r.sign.size() != g.edge_count()) throw EmbeddingError("signed rotation system: wrong sign count");
  const std::size_t darts = g.dart_count();
  const auto rot = r.rotation.successor(darts);
  std::vector<DartId> pred(darts);
  for (DartId d = 0; d < darts; ++d) pred[rot[d]] = d;

  // state 2d + n: traversing dart d with local orientation (n ? -1 : +1)
  auto next = [&](std::uint32_t s) -> std::uint32_t {
    const DartId d = s >> 1;
    const bool positive_in = (s & 1u) == 0;
    const bool positive_edge = r.sign[MultiGraph::edge_of(d)] > 0;
    const bool positive_out = positive_in == positive_edge;
    const DartId x = MultiGraph::twin(d);
    const DartId out = positive_out ? rot[x] : pred[x];
    return 2 * out + (positive_out ? 0u : 1u);
  };
  auto mirror = [&](std::uint32_t s) -> std::uint32_t {
    const DartId d = s >> 1;
    const bool positive = (s & 1u) == 0;
    const bool positive_edge = r.sign[MultiGraph::edge_of(d)] > 0;
    // (twin d, -eps * sign)
    const bool mirrored_positive = !(positive == positive_edge);
    return 2 * MultiGraph::twin(d) + (mirrored_positive ? 0u : 1u);
  };

  EmbeddingReport report;
  std::vector<char> seen(2 * darts, 0);
  for (std::uint32_t s = 0; s < 2 * darts; ++s) {
    if (seen[s]) continue;
    std::vector<std::uint32_t> cycle;
    std::uint32_t cur = s;
    do {
      seen[cur] = 1;
      cycle.push_back(cur);
      cur = next(cur);
    } while (cur != s);
    std::vector<DartId> walk;
    for (std::uint32_t x : cycle) {
      const std::uint32_t m = mirror(x);
      if (seen[m] && std::find(cycle.begin(), cycle.end(), m) != cycle.end())
        throw std::logic_error("signed face tracing: walk is its own mirror");
      seen[m] = 1;
      walk.push_back(x >> 1);
    }
    report.faces.push_back(std::move(walk));
  }
  if (g.edge_count() == 0) report.faces.emplace_back();
  report.face_count = report.faces.size();
  report.euler_characteristic = static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) +
                                static_cast<long>(report.face_count);
  report.surface = surface_for(report.euler_characteristic, signs_orientable(g, r.sign));
  return report;
}

std::size_t orientable_genus(const MultiGraph& g) {
  std::size_t total = 0;
  for (const MultiGraph& c : component_graphs(smooth(g))) {
    const std::size_t f = max_faces_of(c, kernels::Orientation::Orientable);
    total += (c.edge_count() + 2 - c.vertex_count() - f) / 2;
  }
  return total;
}

std::size_t euler_genus(const MultiGraph& g) {
  std::size_t total = 0;
  for (const MultiGraph& c : component_graphs(smooth(g))) {
    const std::size_t f = max_faces_of(c, kernels::Orientation::Signed);
    total += c.edge_count() + 2 - c.vertex_count() - f;
  }
  return total;
}

bool embeds_in(const MultiGraph& g, SurfaceKind s) {
  const auto kind = s == SurfaceKind::ProjectivePlane ? kernels::Orientation::Signed : kernels::Orientation::Orientable;
  std::size_t budget = euler_genus_of(s);
  for (const MultiGraph& c : component_graphs(smooth(g))) {
    const std::size_t eg = component_euler_genus_up_to(c, kind, budget);
    if (eg > budget) return false;
    budget -= eg;
  }
  return true;
}

GenusWitness min_genus_embedding(const MultiGraph& g) {
  require_connected(g);
  GenusWitness out;
  if (g.edge_count() == 0) {
    out.rotation = RotationSystem::identity(g);
  } else {
    auto r = kernels::max_faces(g, kernels::Orientation::Orientable, 0, faces_needed(g, 0), thread_count());
    out.rotation = r.witness.rotation;
  }
  out.report = trace_faces(g, out.rotation);
  return out;
}

EulerGenusWitness min_euler_genus_embedding(const MultiGraph& g) {
  require_connected(g);
  EulerGenusWitness out;
  if (g.edge_count() == 0) {
    out.rotation = SignedRotationSystem::all_positive(RotationSystem::identity(g), 0);
  } else {
    auto r = kernels::max_faces(g, kernels::Orientation::Signed, 0, faces_needed(g, 0), thread_count());
    out.rotation = r.witness;
  }
  out.report = trace_faces(g, out.rotation);
  return out;
}

std::vector<RotationSystem> torus_embeddings(const MultiGraph& g) {
  require_connected(g);
  if (orientable_genus(g) != 1) throw EmbeddingError("torus_embeddings needs a graph of orientable genus 1");
  return detail::rotation_systems_with_faces(g, g.edge_count() - g.vertex_count());
}

namespace {

// Dart permutations generating the automorphism group acting on darts.
std::vector<std::vector<DartId>> dart_automorphisms(const MultiGraph& g) {
  const std::size_t darts = g.dart_count();
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> classes;
  auto key = [](VertexId a, VertexId b) { return std::pair{std::min(a, b), std::max(a, b)}; };
  for (EdgeId e = 0; e < g.edge_count(); ++e) classes[key(g.edge(e).u, g.edge(e).v)].push_back(e);
  // dart of edge e anchored at x (for loops: the first dart)
  auto dart_at = [&](EdgeId e, VertexId x) -> DartId { return g.edge(e).u == x ? 2 * e : 2 * e + 1; };

  std::vector<std::vector<DartId>> out;
  for (const auto& gen : iso::automorphism_group(g).generators) {
    std::vector<DartId> perm(darts);
    for (const auto& [ends, edges] : classes) {
      const auto& image = classes.at(key(gen[ends.first], gen[ends.second]));
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const EdgeId e = edges[i], f = image[i];
        if (g.edge(e).is_loop()) {
          perm[2 * e] = 2 * f;
          perm[2 * e + 1] = 2 * f + 1;
        } else {
          perm[dart_at(e, g.edge(e).u)] = dart_at(f, gen[g.edge(e).u]);
          perm[dart_at(e, g.edge(e).v)] = dart_at(f, gen[g.edge(e).v]);
        }
      }
    }
    out.push_back(std::move(perm));
  }
  std::vector<DartId> identity(darts);
  std::iota(identity.begin(), identity.end(), 0u);
  auto swap_edges = [&](EdgeId e, EdgeId f) {
    std::vector<DartId> perm = identity;
    const VertexId u = g.edge(e).u;
    perm[dart_at(e, u)] = dart_at(f, u);
    perm[dart_at(f, u)] = dart_at(e, u);
    const VertexId v = g.edge(e).v;
    if (u != v) {
      perm[dart_at(e, v)] = dart_at(f, v);
      perm[dart_at(f, v)] = dart_at(e, v);
    } else {
      perm[2 * e + 1] = 2 * f + 1;
      perm[2 * f + 1] = 2 * e + 1;
    }
    return perm;
  };
  for (const auto& [ends, edges] : classes) {
    for (std::size_t i = 1; i < edges.size(); ++i) out.push_back(swap_edges(edges[i - 1], edges[i]));
    if (ends.first == ends.second)
      for (EdgeId e : edges) {
        std::vector<DartId> flip = identity;
        std::swap(flip[2 * e], flip[2 * e + 1]);
        out.push_back(std::move(flip));
      }
  }
  return out;
}

}  // namespace

std::vector<EmbeddingClass> torus_embedding_classes(const MultiGraph& g) {
  const auto embeddings = torus_embeddings(g);
  const std::size_t darts = g.dart_count();
  std::vector<std::vector<DartId>> rots;
  std::map<std::vector<DartId>, std::size_t> index;
  for (const auto& r : embeddings) {
    rots.push_back(r.successor(darts));
    index.emplace(rots.back(), rots.size() - 1);
  }
  std::vector<std::size_t> parent(rots.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  auto lookup = [&](const std::vector<DartId>& rot) {
    auto it = index.find(rot);
    if (it == index.end()) throw std::logic_error("torus embedding image is missing from the enumeration");
    return it->second;
  };

  const auto generators = dart_automorphisms(g);
  std::vector<DartId> image(darts);
  for (std::size_t i = 0; i < rots.size(); ++i) {
    for (const auto& sigma : generators) {
      for (DartId d = 0; d < darts; ++d) image[sigma[d]] = sigma[rots[i][d]];
      unite(i, lookup(image));
    }
    for (DartId d = 0; d < darts; ++d) image[rots[i][d]] = d;  // reversed orientation
    unite(i, lookup(image));
  }

  std::map<std::size_t, EmbeddingClass> classes;
  for (std::size_t i = 0; i < rots.size(); ++i) {
    auto [it, fresh] = classes.try_emplace(find(i));
    if (fresh) {
      it->second.representative = embeddings[i];
      for (const auto& face : trace_faces(g, embeddings[i]).faces) it->second.face_lengths.push_back(face.size());
      std::sort(it->second.face_lengths.begin(), it->second.face_lengths.end());
    }
    ++it->second.members;
  }
  std::vector<EmbeddingClass> out;
  for (auto& [root, cls] : classes) out.push_back(std::move(cls));
  return out;
}

std::size_t count_torus_embedding_classes(const MultiGraph& g) { return torus_embedding_classes(g).size(); }

bool extends_to(const MultiGraph& g, const RotationSystem& r, const EdgeAdditionSpec& spec) {
  const std::size_t m = g.edge_count();
  if (spec.first >= m || (spec.mode == AttachMode::TwoEdgeBridge && (spec.second >= m || spec.second == spec.first)))
    throw EmbeddingError("extends_to: invalid edge addition");
  const EmbeddingReport report = trace_faces(g, r);
  if (spec.mode != AttachMode::TwoEdgeBridge) return true;  // every edge borders some face
  for (const auto& face : report.faces) {
    bool first = false, second = false;
    for (DartId d : face) {
      first |= MultiGraph::edge_of(d) == spec.first;
      second |= MultiGraph::edge_of(d) == spec.second;
    }
    if (first && second) return true;
  }
  return false;
}

namespace {

nlohmann::json embedding_json(const MultiGraph& g, const RotationSystem& r, const EmbeddingReport& report) {
  nlohmann::json darts = nlohmann::json::array();
  for (DartId d = 0; d < g.dart_count(); ++d)
    darts.push_back({{"id", d}, {"from", g.label(g.anchor(d))}, {"to", g.label(g.head(d))}, {"edge", d >> 1}});
  nlohmann::json rotation = nlohmann::json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) rotation[g.label(v)] = r.order[v];
  return {{"darts", darts},
          {"rotation", rotation},
          {"faces", report.faces},
          {"face_count", report.face_count},
          {"euler_characteristic", report.euler_characteristic},
          {"surface", report.surface.name()},
          {"orientable", report.surface.orientable},
          {"genus", report.surface.genus}};
}

}  // namespace

nlohmann::json to_json(const MultiGraph& g, const RotationSystem& r, const EmbeddingReport& report) {
  return embedding_json(g, r, report);
}

nlohmann::json to_json(const MultiGraph& g, const SignedRotationSystem& r, const EmbeddingReport& report) {
  nlohmann::json out = embedding_json(g, r.rotation, report);
  out["signs"] = r.sign;
  return out;
}

}  // namespace obstructionist::embed
