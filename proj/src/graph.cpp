#include "obstructionist/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace obstructionist {

MultiGraph::MultiGraph(std::size_t vertex_count) : incidence_(vertex_count) {}

VertexId MultiGraph::add_vertex(std::string label) {
  const auto v = static_cast<VertexId>(incidence_.size());
  if (!label.empty() && label_index_.count(label)) throw GraphError("duplicate vertex label '" + label + "'");
  incidence_.emplace_back();
  if (!label.empty()) set_label(v, std::move(label));
  return v;
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v) {
  if (u >= vertex_count() || v >= vertex_count())
    throw GraphError("add_edge: vertex out of range");
  const auto e = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v});
  incidence_[u].push_back(2 * e);
  incidence_[v].push_back(2 * e + 1);
  return e;
}

std::string MultiGraph::label(VertexId v) const {
  if (v < labels_.size() && !labels_[v].empty()) return labels_[v];
  return std::to_string(v);
}

std::optional<VertexId> MultiGraph::find_label(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

void MultiGraph::set_label(VertexId v, std::string label) {
  if (v >= vertex_count()) throw GraphError("set_label: vertex out of range");
  if (label.empty()) throw GraphError("set_label: empty label");
  auto it = label_index_.find(label);
  if (it != label_index_.end() && it->second != v)
    throw GraphError("duplicate vertex label '" + label + "'");
  if (labels_.size() < vertex_count()) labels_.resize(vertex_count());
  if (!labels_[v].empty()) label_index_.erase(labels_[v]);
  labels_[v] = label;
  label_index_.emplace(std::move(label), v);
}

std::string MultiGraph::edge_name(EdgeId e) const {
  const Edge& ed = edge(e);
  if (has_labels()) return label(ed.u) + label(ed.v);
  return "{" + std::to_string(ed.u) + "," + std::to_string(ed.v) + "}";
}

EdgeAdditionSpec EdgeAdditionSpec::two_edge_bridge(EdgeId a, EdgeId b) {
  if (a == b) throw GraphError("TwoEdgeBridge needs two distinct host edges");
  return {AttachMode::TwoEdgeBridge, a, b};
}

std::string to_string(AttachMode mode) {
  switch (mode) {
    case AttachMode::LoopAttach: return "loop-attach";
    case AttachMode::SameEdgeChord: return "same-edge-chord";
    case AttachMode::TwoEdgeBridge: return "two-edge-bridge";
  }
  return "?";
}

std::string describe(const MultiGraph& g, const EdgeAdditionSpec& spec) {
  switch (spec.mode) {
    case AttachMode::LoopAttach: return "loop(" + g.edge_name(spec.first) + ")";
    case AttachMode::SameEdgeChord: return "chord(" + g.edge_name(spec.first) + ")";
    case AttachMode::TwoEdgeBridge:
      return g.edge_name(spec.first) + "-" + g.edge_name(spec.second);
  }
  return "?";
}

std::vector<EdgeAdditionSpec> all_specs(const MultiGraph& g) {
  std::vector<EdgeAdditionSpec> out;
  const auto m = static_cast<EdgeId>(g.edge_count());
  for (EdgeId e = 0; e < m; ++e) out.push_back(EdgeAdditionSpec::loop_attach(e));
  for (EdgeId e = 0; e < m; ++e) out.push_back(EdgeAdditionSpec::same_edge_chord(e));
  for (EdgeId a = 0; a < m; ++a)
    for (EdgeId b = a + 1; b < m; ++b) out.push_back(EdgeAdditionSpec::two_edge_bridge(a, b));
  return out;
}

// ---- structural queries -------------------------------------------------

std::vector<std::uint32_t> component_labels(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> comp(n, kUnset);
  std::uint32_t next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (DartId d : g.darts_at(x)) {
        VertexId y = g.head(d);
        if (comp[y] == kUnset) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::size_t component_count(const MultiGraph& g) {
  auto comp = component_labels(g);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

std::vector<std::vector<VertexId>> components(const MultiGraph& g) {
  auto comp = component_labels(g);
  std::vector<std::vector<VertexId>> out(comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1);
  for (VertexId v = 0; v < comp.size(); ++v) out[comp[v]].push_back(v);
  return out;
}

bool is_connected(const MultiGraph& g) { return component_count(g) <= 1; }

bool is_cubic(const MultiGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

bool is_simple(const MultiGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return false;
    pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

std::size_t loop_count(const MultiGraph& g) {
  return static_cast<std::size_t>(
      std::count_if(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.is_loop(); }));
}

std::size_t betti(const MultiGraph& g) {
  return g.edge_count() + component_count(g) - g.vertex_count();
}

std::optional<std::size_t> girth(const MultiGraph& g) {
  if (loop_count(g) > 0) return 1;
  if (!is_simple(g)) return 2;
  const std::size_t n = g.vertex_count();
  std::size_t best = kInfiniteGirth;
  std::vector<std::size_t> dist(n);
  std::vector<EdgeId> via(n);
  std::deque<VertexId> queue;
  constexpr auto kNone = static_cast<std::size_t>(-1);
  for (VertexId root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kNone);
    dist[root] = 0;
    via[root] = static_cast<EdgeId>(-1);
    queue.assign(1, root);
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      if (2 * dist[x] >= best) break;
      for (DartId d : g.darts_at(x)) {
        const EdgeId e = MultiGraph::edge_of(d);
        if (e == via[x]) continue;
        VertexId y = g.head(d);
        if (dist[y] == kNone) {
          dist[y] = dist[x] + 1;
          via[y] = e;
          queue.push_back(y);
        } else {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == kInfiniteGirth) return std::nullopt;
  return best;
}

std::size_t girth_or_infinite(const MultiGraph& g) { return girth(g).value_or(kInfiniteGirth); }

namespace {

// Unit-capacity max flow on the undirected edges; flow[e] in {-1,0,1} with
// positive meaning u -> v.
struct UnitFlow {
  const MultiGraph& g;
  std::vector<int> flow;

  explicit UnitFlow(const MultiGraph& graph) : g(graph), flow(graph.edge_count(), 0) {}

  bool residual(DartId d) const {
    const EdgeId e = MultiGraph::edge_of(d);
    if (g.edge(e).is_loop()) return false;
    return (d & 1u) ? flow[e] > -1 : flow[e] < 1;
  }

  std::size_t run(VertexId s, VertexId t, std::size_t cap) {
    std::fill(flow.begin(), flow.end(), 0);
    std::size_t total = 0;
    const std::size_t n = g.vertex_count();
    std::vector<DartId> pred(n);
    std::vector<char> seen(n);
    while (total < cap) {
      std::fill(seen.begin(), seen.end(), 0);
      std::deque<VertexId> queue{s};
      seen[s] = 1;
      while (!queue.empty() && !seen[t]) {
        VertexId x = queue.front();
        queue.pop_front();
        for (DartId d : g.darts_at(x)) {
          if (!residual(d)) continue;
          VertexId y = g.head(d);
          if (seen[y]) continue;
          seen[y] = 1;
          pred[y] = d;
          queue.push_back(y);
        }
      }
      if (!seen[t]) break;
      for (VertexId y = t; y != s;) {
        DartId d = pred[y];
        flow[MultiGraph::edge_of(d)] += (d & 1u) ? -1 : 1;
        y = g.anchor(d);
      }
      ++total;
    }
    return total;
  }

  std::vector<char> source_side(VertexId s) const {
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (DartId d : g.darts_at(x)) {
        if (!residual(d)) continue;
        VertexId y = g.head(d);
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    return seen;
  }
};

}  // namespace

EdgeCut edge_connectivity(const MultiGraph& g) {
  if (g.vertex_count() < 2 || !is_connected(g)) return {};
  UnitFlow flow(g);
  std::size_t best = g.edge_count() + 1;
  VertexId best_t = 1;
  for (VertexId t = 1; t < g.vertex_count(); ++t) {
    std::size_t f = flow.run(0, t, best);
    if (f < best) {
      best = f;
      best_t = t;
    }
  }
  flow.run(0, best_t, best);
  auto side = flow.source_side(0);
  EdgeCut cut{best, {}};
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (side[g.edge(e).u] != side[g.edge(e).v]) cut.edges.push_back(e);
  return cut;
}

bool is_cyclically_4_connected(const MultiGraph& g) {
  if (!is_cubic(g)) throw GraphError("is_cyclically_4_connected: graph is not cubic");
  if (!is_connected(g) || edge_connectivity(g).size < 3) return false;
  const auto m = static_cast<EdgeId>(g.edge_count());
  for (EdgeId a = 0; a < m; ++a)
    for (EdgeId b = a + 1; b < m; ++b)
      for (EdgeId c = b + 1; c < m; ++c) {
        const std::array<EdgeId, 3> cut{a, b, c};
        MultiGraph rest = delete_edges(g, cut);
        auto parts = components(rest);
        if (parts.size() < 2) continue;
        auto comp = component_labels(rest);
        std::vector<std::size_t> edges_in(parts.size(), 0);
        for (const Edge& e : rest.edges()) ++edges_in[comp[e.u]];
        std::size_t cyclic = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
          if (edges_in[i] >= parts[i].size()) ++cyclic;
        if (cyclic > 1) return false;
      }
  return true;
}

GraphInvariants invariants(const MultiGraph& g) {
  GraphInvariants inv;
  inv.b0 = component_count(g);
  inv.b1 = betti(g);
  inv.girth = girth(g);
  inv.edge_connectivity = edge_connectivity(g);
  if (is_cubic(g) && inv.b0 == 1 && inv.edge_connectivity.size >= 3)
    inv.cyclically_4_connected = is_cyclically_4_connected(g);
  return inv;
}

// ---- surgeries ----------------------------------------------------------

namespace {

struct EdgeListBuilder {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<std::string> labels;  // empty string: unlabeled

  static EdgeListBuilder from(const MultiGraph& g) {
    EdgeListBuilder b;
    b.n = g.vertex_count();
    b.edges = g.edges();
    if (g.has_labels()) {
      b.labels.resize(b.n);
      for (VertexId v = 0; v < b.n; ++v) b.labels[v] = g.label(v);
    }
    return b;
  }

  VertexId new_vertex(std::string label = {}) {
    if (!labels.empty() || !label.empty()) labels.resize(n);
    if (!labels.empty()) labels.push_back(std::move(label));
    return static_cast<VertexId>(n++);
  }

  MultiGraph build() const {
    MultiGraph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    if (!labels.empty()) {
      for (VertexId v = 0; v < n; ++v)
        if (v < labels.size() && !labels[v].empty()) g.set_label(v, labels[v]);
    }
    return g;
  }

  std::string fresh_label(const std::string& wanted, const std::string& fallback) const {
    if (labels.empty() && wanted.empty()) return {};
    std::string base = wanted.empty() ? fallback : wanted;
    auto taken = [&](const std::string& s) {
      return std::find(labels.begin(), labels.end(), s) != labels.end();
    };
    if (!wanted.empty() && taken(wanted)) throw GraphError("label '" + wanted + "' already in use");
    while (taken(base)) base += "'";
    return base;
  }

  // Splits edge e = (u, w) into u - n1 - ... - nt - w; returns the new vertices.
  std::vector<VertexId> subdivide(EdgeId e, std::size_t times,
                                  const std::vector<std::string>& names) {
    if (e >= edges.size()) throw GraphError("unknown edge id " + std::to_string(e));
    std::vector<VertexId> fresh;
    const VertexId far = edges[e].v;
    VertexId prev = edges[e].u;
    for (std::size_t i = 0; i < times; ++i) {
      const std::string want = i < names.size() ? names[i] : std::string{};
      VertexId x = new_vertex(fresh_label(want, "s" + std::to_string(n)));
      fresh.push_back(x);
      if (i == 0) {
        edges[e].v = x;
      } else {
        edges.push_back({prev, x});
      }
      prev = x;
    }
    edges.push_back({prev, far});
    return fresh;
  }
};

}  // namespace

MultiGraph subdivide(const MultiGraph& g, EdgeId e, std::size_t times) {
  if (times == 0) throw GraphError("subdivide: times must be positive");
  auto b = EdgeListBuilder::from(g);
  b.subdivide(e, times, {});
  return b.build();
}

MultiGraph smooth(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  std::vector<char> edge_alive(edges.size(), 1);
  std::vector<char> vertex_alive(n, 1);
  std::vector<std::vector<EdgeId>> inc(n);
  for (EdgeId e = 0; e < edges.size(); ++e) {
    inc[edges[e].u].push_back(e);
    inc[edges[e].v].push_back(e);
  }
  auto other = [&](EdgeId e, VertexId x) { return edges[e].u == x ? edges[e].v : edges[e].u; };
  for (VertexId v = 0; v < n; ++v) {
    if (inc[v].size() != 2 || inc[v][0] == inc[v][1]) continue;
    const EdgeId e1 = inc[v][0];
    const EdgeId e2 = inc[v][1];
    const VertexId a = other(e1, v);
    const VertexId b = other(e2, v);
    const auto ne = static_cast<EdgeId>(edges.size());
    edges.push_back({a, b});
    edge_alive.push_back(1);
    edge_alive[e1] = edge_alive[e2] = 0;
    vertex_alive[v] = 0;
    inc[v].clear();
    *std::find(inc[a].begin(), inc[a].end(), e1) = ne;
    *std::find(inc[b].begin(), inc[b].end(), e2) = ne;
  }
  // One pass suffices: suppression never changes a degree, and a skipped
  // degree-2 vertex already carries a loop.
  std::vector<VertexId> remap(n, 0);
  MultiGraph out;
  for (VertexId v = 0; v < n; ++v) {
    if (!vertex_alive[v]) continue;
    remap[v] = out.add_vertex();
    if (g.has_labels()) out.set_label(remap[v], g.label(v));
  }
  for (EdgeId e = 0; e < edges.size(); ++e)
    if (edge_alive[e]) out.add_edge(remap[edges[e].u], remap[edges[e].v]);
  return out;
}

MultiGraph add_edge(const MultiGraph& g, const EdgeAdditionSpec& spec,
                    const std::array<std::string, 2>& names) {
  auto b = EdgeListBuilder::from(g);
  const std::size_t m = g.edge_count();
  if (spec.first >= m) throw GraphError("unknown host edge " + std::to_string(spec.first));
  switch (spec.mode) {
    case AttachMode::LoopAttach: {
      VertexId u = b.subdivide(spec.first, 1, {names[0]})[0];
      VertexId v = b.new_vertex(b.fresh_label(names[1], "s" + std::to_string(b.n)));
      b.edges.push_back({v, v});
      b.edges.push_back({u, v});
      break;
    }
    case AttachMode::SameEdgeChord: {
      auto fresh = b.subdivide(spec.first, 2, {names[0], names[1]});
      b.edges.push_back({fresh[0], fresh[1]});
      break;
    }
    case AttachMode::TwoEdgeBridge: {
      if (spec.second >= m) throw GraphError("unknown host edge " + std::to_string(spec.second));
      if (spec.second == spec.first) throw GraphError("TwoEdgeBridge hosts must differ");
      VertexId u = b.subdivide(spec.first, 1, {names[0]})[0];
      VertexId v = b.subdivide(spec.second, 1, {names[1]})[0];
      b.edges.push_back({u, v});
      break;
    }
  }
  return b.build();
}

MultiGraph delete_edges(const MultiGraph& g, std::span<const EdgeId> doomed) {
  std::vector<char> drop(g.edge_count(), 0);
  for (EdgeId e : doomed) {
    if (e >= g.edge_count()) throw GraphError("unknown edge id " + std::to_string(e));
    drop[e] = 1;
  }
  MultiGraph out(g.vertex_count());
  if (g.has_labels())
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.set_label(v, g.label(v));
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!drop[e]) out.add_edge(g.edge(e).u, g.edge(e).v);
  return out;
}

MultiGraph delete_edge(const MultiGraph& g, EdgeId e) {
  const std::array<EdgeId, 1> one{e};
  return delete_edges(g, one);
}

MultiGraph delete_edge_and_smooth(const MultiGraph& g, EdgeId e) { return smooth(delete_edge(g, e)); }

MultiGraph cubic_y_delta(const MultiGraph& g, VertexId v) {
  if (v >= g.vertex_count()) throw GraphError("cubic_y_delta: unknown vertex");
  if (g.degree(v) != 3) throw GraphError("cubic_y_delta: vertex degree is not 3");
  auto darts = g.darts_at(v);
  for (DartId d : darts)
    if (g.edge(MultiGraph::edge_of(d)).is_loop()) throw GraphError("cubic_y_delta: loop at vertex");
  auto b = EdgeListBuilder::from(g);
  std::array<VertexId, 3> corner{v, 0, 0};
  for (int i = 1; i < 3; ++i)
    corner[i] = b.new_vertex(b.fresh_label({}, g.label(v) + "_" + std::to_string(i)));
  for (int i = 1; i < 3; ++i) {
    DartId d = darts[i];
    Edge& e = b.edges[MultiGraph::edge_of(d)];
    if (d & 1u) e.v = corner[i]; else e.u = corner[i];
  }
  b.edges.push_back({corner[0], corner[1]});
  b.edges.push_back({corner[1], corner[2]});
  b.edges.push_back({corner[2], corner[0]});
  return b.build();
}

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
  MultiGraph out(a.vertex_count() + b.vertex_count());
  const auto shift = static_cast<VertexId>(a.vertex_count());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(e.u + shift, e.v + shift);
  if (a.has_labels() && b.has_labels()) {
    for (VertexId v = 0; v < a.vertex_count(); ++v) out.set_label(v, a.label(v));
    for (VertexId v = 0; v < b.vertex_count(); ++v) {
      std::string l = b.label(v);
      while (out.find_label(l)) l += "'";
      out.set_label(v + shift, l);
    }
  }
  return out;
}

MultiGraph permute_vertices(const MultiGraph& g, std::span<const VertexId> perm) {
  if (perm.size() != g.vertex_count()) throw GraphError("permute_vertices: size mismatch");
  MultiGraph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  if (g.has_labels())
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.set_label(perm[v], g.label(v));
  return out;
}

MultiGraph induced_subgraph(const MultiGraph& g, std::span<const VertexId> vertices,
                            std::vector<VertexId>* old_to_new) {
  constexpr auto kOut = static_cast<VertexId>(-1);
  std::vector<VertexId> map(g.vertex_count(), kOut);
  MultiGraph out;
  for (VertexId v : vertices) {
    map[v] = out.add_vertex();
    if (g.has_labels()) out.set_label(map[v], g.label(v));
  }
  for (const Edge& e : g.edges())
    if (map[e.u] != kOut && map[e.v] != kOut) out.add_edge(map[e.u], map[e.v]);
  if (old_to_new) *old_to_new = std::move(map);
  return out;
}

// ---- label helpers ------------------------------------------------------

std::optional<EdgeId> find_edge(const MultiGraph& g, std::string_view a, std::string_view b) {
  auto va = g.find_label(a);
  auto vb = g.find_label(b);
  if (!va || !vb) return std::nullopt;
  for (DartId d : g.darts_at(*va))
    if (g.head(d) == *vb) return MultiGraph::edge_of(d);
  return std::nullopt;
}

EdgeId edge_by_name(const MultiGraph& g, std::string_view name) {
  std::optional<EdgeId> found;
  for (std::size_t cut = 1; cut < name.size(); ++cut) {
    auto e = find_edge(g, name.substr(0, cut), name.substr(cut));
    if (!e) continue;
    if (found && *found != *e) throw GraphError("ambiguous edge name '" + std::string(name) + "'");
    found = e;
  }
  if (!found) throw GraphError("no edge named '" + std::string(name) + "'");
  return *found;
}

EdgeAdditionSpec bridge_by_name(const MultiGraph& g, std::string_view text) {
  auto dash = text.find('-');
  if (dash == std::string_view::npos || text.find('-', dash + 1) != std::string_view::npos)
    throw GraphError("expected 'EDGE-EDGE', got '" + std::string(text) + "'");
  return EdgeAdditionSpec::two_edge_bridge(edge_by_name(g, text.substr(0, dash)),
                                           edge_by_name(g, text.substr(dash + 1)));
}

}  // namespace obstructionist
