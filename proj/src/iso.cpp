#include "obstructionist/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace obstructionist::iso {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

// Ordered partition of the vertex set. Cells are contiguous runs of `lab`;
// a cell is identified by its first position.
struct Partition {
  std::vector<VertexId> lab;
  std::vector<std::uint32_t> cell;  // vertex -> first position of its cell
  std::vector<std::uint32_t> end;   // first position -> one past the cell
  std::uint32_t cells = 0;

  bool discrete() const { return cells == lab.size(); }
};

class Canonizer {
 public:
  Canonizer(const MultiGraph& g, std::span<const std::uint32_t> colours) : g_(g), n_(g.vertex_count()) {
    if (!colours.empty() && colours.size() != n_) throw GraphError("canonical_labeling: colour count mismatch");
    colours_.assign(colours.begin(), colours.end());
    build_adjacency();
  }

  void run() {
    stack_.assign(n_ + 1, Partition{});
    initial_partition(stack_[0]);
    refine(stack_[0]);
    path_.clear();
    search(0, true);
    compute_order();
  }

  std::vector<std::uint32_t> best_code;
  std::vector<VertexId> best_lab;
  std::vector<std::vector<VertexId>> generators;
  std::uint64_t order = 1;

 private:
  void build_adjacency() {
    loops_.assign(n_, 0);
    std::vector<std::map<VertexId, std::uint32_t>> nbrs(n_);
    for (const Edge& e : g_.edges()) {
      if (e.is_loop()) {
        ++loops_[e.u];
      } else {
        ++nbrs[e.u][e.v];
        ++nbrs[e.v][e.u];
      }
    }
    offset_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) offset_[v + 1] = offset_[v] + static_cast<std::uint32_t>(nbrs[v].size());
    nbr_.resize(offset_[n_]);
    mult_.resize(offset_[n_]);
    key_.resize(offset_[n_]);
    for (std::size_t v = 0; v < n_; ++v) {
      std::uint32_t at = offset_[v];
      for (auto [w, m] : nbrs[v]) {
        nbr_[at] = w;
        mult_[at] = m;
        ++at;
      }
    }
  }

  // Per-vertex invariant: colour, degree, loops, neighbour multiplicities and
  // the BFS layer sizes.
  std::vector<std::uint32_t> vertex_invariant(VertexId v) const {
    std::vector<std::uint32_t> inv;
    inv.push_back(colours_.empty() ? 0 : colours_[v]);
    inv.push_back(static_cast<std::uint32_t>(g_.degree(v)));
    inv.push_back(loops_[v]);
    inv.push_back(offset_[v + 1] - offset_[v]);
    std::vector<std::uint32_t> mults(mult_.begin() + offset_[v], mult_.begin() + offset_[v + 1]);
    std::sort(mults.begin(), mults.end());
    inv.insert(inv.end(), mults.begin(), mults.end());

    std::vector<std::uint32_t> dist(n_, UINT32_MAX);
    std::queue<VertexId> q;
    dist[v] = 0;
    q.push(v);
    std::vector<std::uint32_t> layers;
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      if (dist[x] >= layers.size()) layers.push_back(0);
      ++layers[dist[x]];
      for (std::uint32_t i = offset_[x]; i < offset_[x + 1]; ++i) {
        VertexId y = nbr_[i];
        if (dist[y] == UINT32_MAX) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
      }
    }
    inv.push_back(static_cast<std::uint32_t>(layers.size()));
    inv.insert(inv.end(), layers.begin(), layers.end());
    return inv;
  }

  void initial_partition(Partition& p) const {
    std::vector<std::vector<std::uint32_t>> inv(n_);
    for (VertexId v = 0; v < n_; ++v) inv[v] = vertex_invariant(v);
    p.lab.resize(n_);
    std::iota(p.lab.begin(), p.lab.end(), 0u);
    std::stable_sort(p.lab.begin(), p.lab.end(), [&](VertexId a, VertexId b) { return inv[a] < inv[b]; });
    p.cell.assign(n_, 0);
    p.end.assign(n_, 0);
    p.cells = 0;
    for (std::uint32_t i = 0; i < n_;) {
      std::uint32_t j = i + 1;
      while (j < n_ && inv[p.lab[j]] == inv[p.lab[i]]) ++j;
      p.end[i] = j;
      for (std::uint32_t k = i; k < j; ++k) p.cell[p.lab[k]] = i;
      ++p.cells;
      i = j;
    }
  }

  bool key_less(VertexId a, VertexId b) const {
    return std::lexicographical_compare(key_.begin() + offset_[a], key_.begin() + offset_[a + 1],
                                        key_.begin() + offset_[b], key_.begin() + offset_[b + 1]);
  }
  bool key_equal(VertexId a, VertexId b) const {
    return std::equal(key_.begin() + offset_[a], key_.begin() + offset_[a + 1], key_.begin() + offset_[b],
                      key_.begin() + offset_[b + 1]);
  }

  // Splits cells by the multiset of (neighbour cell, multiplicity) until stable.
  void refine(Partition& p) {
    for (;;) {
      for (std::uint32_t s = 0; s < n_; s = p.end[s]) {
        if (p.end[s] - s < 2) continue;
        for (std::uint32_t i = s; i < p.end[s]; ++i) {
          VertexId v = p.lab[i];
          for (std::uint32_t k = offset_[v]; k < offset_[v + 1]; ++k)
            key_[k] = (static_cast<std::uint64_t>(p.cell[nbr_[k]]) << 32) | mult_[k];
          std::sort(key_.begin() + offset_[v], key_.begin() + offset_[v + 1]);
        }
      }
      bool split = false;
      for (std::uint32_t s = 0; s < n_;) {
        const std::uint32_t e = p.end[s];
        if (e - s >= 2) {
          std::sort(p.lab.begin() + s, p.lab.begin() + e, [&](VertexId a, VertexId b) { return key_less(a, b); });
          std::uint32_t start = s;
          for (std::uint32_t i = s + 1; i <= e; ++i) {
            if (i < e && key_equal(p.lab[i], p.lab[i - 1])) continue;
            if (start != s || i != e) {
              p.end[start] = i;
              for (std::uint32_t k = start; k < i; ++k) p.cell[p.lab[k]] = start;
              if (start != s) {
                ++p.cells;
                split = true;
              }
            }
            start = i;
          }
        }
        s = e;
      }
      if (!split) return;
    }
  }

  static void individualize(Partition& p, VertexId w) {
    const std::uint32_t s = p.cell[w];
    const std::uint32_t e = p.end[s];
    auto it = std::find(p.lab.begin() + s, p.lab.begin() + e, w);
    std::iter_swap(p.lab.begin() + s, it);
    p.end[s] = s + 1;
    p.end[s + 1] = e;
    for (std::uint32_t k = s + 1; k < e; ++k) p.cell[p.lab[k]] = s + 1;
    ++p.cells;
  }

  std::uint32_t target_cell(const Partition& p) const {
    std::uint32_t best = UINT32_MAX, best_size = UINT32_MAX;
    for (std::uint32_t s = 0; s < n_; s = p.end[s]) {
      const std::uint32_t size = p.end[s] - s;
      if (size > 1 && size < best_size) {
        best = s;
        best_size = size;
      }
    }
    return best;
  }

  void leaf_code(const Partition& p, std::vector<std::uint32_t>& out) {
    rel_.resize(n_);
    for (std::uint32_t i = 0; i < n_; ++i) rel_[p.lab[i]] = i;
    pairs_.clear();
    for (const Edge& e : g_.edges()) {
      std::uint32_t a = rel_[e.u], b = rel_[e.v];
      if (a > b) std::swap(a, b);
      pairs_.emplace_back(a, b);
    }
    std::sort(pairs_.begin(), pairs_.end());
    out.clear();
    out.push_back(static_cast<std::uint32_t>(n_));
    out.push_back(static_cast<std::uint32_t>(g_.edge_count()));
    out.push_back(colours_.empty() ? 0 : 1);
    if (!colours_.empty())
      for (std::uint32_t i = 0; i < n_; ++i) out.push_back(colours_[p.lab[i]]);
    for (auto [a, b] : pairs_) {
      out.push_back(a);
      out.push_back(b);
    }
  }

  static std::size_t divergence(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
  }

  void record_automorphism(const std::vector<VertexId>& from_lab, const Partition& p) {
    std::vector<VertexId> perm(n_);
    for (std::uint32_t i = 0; i < n_; ++i) perm[from_lab[i]] = p.lab[i];
    generators.push_back(std::move(perm));
    levels_.push_back(divergence(path_, first_path_));
  }

  void process_leaf(const Partition& p) {
    leaf_code(p, code_);
    if (!have_first_) {
      have_first_ = true;
      first_code_ = best_code = code_;
      first_lab_ = best_lab = p.lab;
      first_path_ = best_path_ = path_;
      return;
    }
    if (code_ == first_code_) {
      record_automorphism(first_lab_, p);
      jump_to_ = static_cast<int>(divergence(path_, first_path_));
      return;
    }
    if (code_ == best_code) {
      record_automorphism(best_lab, p);
      jump_to_ = static_cast<int>(divergence(path_, best_path_));
      return;
    }
    if (code_ < best_code) {
      best_code = code_;
      best_lab = p.lab;
      best_path_ = path_;
    }
  }

  void search(std::size_t depth, bool on_first_path) {
    Partition& p = stack_[depth];
    if (p.discrete()) {
      process_leaf(p);
      return;
    }
    const std::uint32_t s = target_cell(p);
    std::vector<VertexId> children(p.lab.begin() + s, p.lab.begin() + p.end[s]);
    std::sort(children.begin(), children.end());
    std::vector<VertexId> explored;
    for (VertexId w : children) {
      if (on_first_path && !explored.empty() && !generators.empty()) {
        UnionFind uf(n_);
        for (const auto& gen : generators)
          for (VertexId v = 0; v < n_; ++v) uf.unite(v, gen[v]);
        const auto root = uf.find(w);
        if (std::any_of(explored.begin(), explored.end(), [&](VertexId x) { return uf.find(x) == root; }))
          continue;
      }
      explored.push_back(w);
      stack_[depth + 1] = p;
      individualize(stack_[depth + 1], w);
      refine(stack_[depth + 1]);
      path_.push_back(w);
      search(depth + 1, on_first_path && (!have_first_ || first_path_[depth] == w));
      path_.pop_back();
      if (jump_to_ >= 0) {
        if (static_cast<std::size_t>(jump_to_) < depth) return;
        jump_to_ = -1;
      }
    }
  }

  // |Aut| as the product of the first-path orbit sizes in the stabiliser chain.
  void compute_order() {
    order = 1;
    for (std::size_t k = 0; k < first_path_.size(); ++k) {
      UnionFind uf(n_);
      for (std::size_t i = 0; i < generators.size(); ++i)
        if (levels_[i] >= k)
          for (VertexId v = 0; v < n_; ++v) uf.unite(v, generators[i][v]);
      const auto root = uf.find(first_path_[k]);
      std::uint64_t size = 0;
      for (VertexId v = 0; v < n_; ++v) size += uf.find(v) == root;
      order *= size;
    }
  }

  const MultiGraph& g_;
  std::size_t n_;
  std::vector<std::uint32_t> colours_;
  std::vector<std::uint32_t> loops_;
  std::vector<std::uint32_t> offset_;
  std::vector<VertexId> nbr_;
  std::vector<std::uint32_t> mult_;
  std::vector<std::uint64_t> key_;

  std::vector<Partition> stack_;
  std::vector<VertexId> path_;
  std::vector<std::uint32_t> rel_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
  std::vector<std::uint32_t> code_;

  bool have_first_ = false;
  std::vector<std::uint32_t> first_code_;
  std::vector<VertexId> first_lab_;
  std::vector<VertexId> first_path_;
  std::vector<VertexId> best_path_;
  std::vector<std::size_t> levels_;
  int jump_to_ = -1;
};

MultiGraph prune_leaves(MultiGraph g) {
  for (;;) {
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) >= 2) keep.push_back(v);
    if (keep.size() == g.vertex_count()) return g;
    g = induced_subgraph(g, keep);
  }
}

MultiGraph topological_core(const MultiGraph& g) { return smooth(prune_leaves(g)); }

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(words.size() * 8);
  for (std::uint32_t w : words)
    for (int shift = 28; shift >= 0; shift -= 4) out.push_back(kDigits[(w >> shift) & 15u]);
  return out;
}

CanonicalForm CanonicalForm::from_hex(std::string_view hex) {
  if (hex.size() % 8 != 0) throw std::invalid_argument("certificate length must be a multiple of 8");
  CanonicalForm form;
  for (std::size_t i = 0; i < hex.size(); i += 8) {
    std::uint32_t w = 0;
    for (std::size_t j = i; j < i + 8; ++j) {
      const char c = hex[j];
      std::uint32_t digit;
      if (c >= '0' && c <= '9') digit = static_cast<std::uint32_t>(c - '0');
      else if (c >= 'a' && c <= 'f') digit = static_cast<std::uint32_t>(c - 'a' + 10);
      else throw std::invalid_argument("certificate: bad hex digit");
      w = (w << 4) | digit;
    }
    form.words.push_back(w);
  }
  return form;
}

CanonicalLabeling canonical_labeling(const MultiGraph& g, std::span<const std::uint32_t> colours) {
  Canonizer c(g, colours);
  c.run();
  CanonicalLabeling out;
  out.form.words = std::move(c.best_code);
  out.relabel.resize(g.vertex_count());
  for (std::uint32_t i = 0; i < c.best_lab.size(); ++i) out.relabel[c.best_lab[i]] = i;
  return out;
}

CanonicalForm canonical_form(const MultiGraph& g) { return canonical_labeling(g).form; }

MultiGraph canonical_graph(const MultiGraph& g) { return permute_vertices(g, canonical_labeling(g).relabel); }

bool are_isomorphic(const MultiGraph& g, const MultiGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

bool are_homeomorphic(const MultiGraph& g, const MultiGraph& h) { return are_isomorphic(smooth(g), smooth(h)); }

AutomorphismGroup automorphism_group(const MultiGraph& g, std::span<const std::uint32_t> colours) {
  Canonizer c(g, colours);
  c.run();
  return {std::move(c.generators), c.order};
}

std::vector<std::vector<VertexId>> vertex_orbits(const MultiGraph& g) {
  const auto group = automorphism_group(g);
  UnionFind uf(g.vertex_count());
  for (const auto& gen : group.generators)
    for (VertexId v = 0; v < g.vertex_count(); ++v) uf.unite(v, gen[v]);
  std::map<std::uint32_t, std::vector<VertexId>> by_root;
  for (VertexId v = 0; v < g.vertex_count(); ++v) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<VertexId>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

std::vector<std::vector<EdgeId>> edge_orbits(const MultiGraph& g) {
  const auto group = automorphism_group(g);
  std::map<std::pair<VertexId, VertexId>, EdgeId> representative;
  UnionFind uf(g.edge_count());
  auto key = [](VertexId a, VertexId b) { return std::pair{std::min(a, b), std::max(a, b)}; };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [it, fresh] = representative.emplace(key(g.edge(e).u, g.edge(e).v), e);
    if (!fresh) uf.unite(it->second, e);  // parallel copies are interchangeable
  }
  for (const auto& gen : group.generators)
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      uf.unite(e, representative.at(key(gen[g.edge(e).u], gen[g.edge(e).v])));
  std::map<std::uint32_t, std::vector<EdgeId>> by_root;
  for (EdgeId e = 0; e < g.edge_count(); ++e) by_root[uf.find(e)].push_back(e);
  std::vector<std::vector<EdgeId>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

std::vector<SpecClass> spec_orbits(const MultiGraph& g, std::span<const EdgeAdditionSpec> specs) {
  std::map<CanonicalForm, SpecClass> classes;
  for (const EdgeAdditionSpec& spec : specs) {
    MultiGraph h = add_edge(g, spec);
    CanonicalForm form = canonical_form(h);
    auto it = classes.find(form);
    if (it == classes.end()) {
      it = classes.emplace(form, SpecClass{spec, std::move(h), form, 0}).first;
    }
    ++it->second.members;
  }
  std::vector<SpecClass> out;
  out.reserve(classes.size());
  for (auto& [form, cls] : classes) out.push_back(std::move(cls));
  return out;
}

std::uint64_t count_cycles(const MultiGraph& g, std::size_t k) {
  if (k == 0) return 0;
  if (k == 1) return loop_count(g);
  const std::size_t n = g.vertex_count();
  std::vector<std::map<VertexId, std::uint64_t>> adj(n);
  for (const Edge& e : g.edges())
    if (!e.is_loop()) {
      ++adj[e.u][e.v];
      ++adj[e.v][e.u];
    }
  if (k == 2) {
    std::uint64_t total = 0;
    for (VertexId v = 0; v < n; ++v)
      for (auto [w, m] : adj[v])
        if (v < w) total += m * (m - 1) / 2;
    return total;
  }
  // Walks from the smallest vertex of each cycle; every cycle is seen twice.
  std::uint64_t total = 0;
  std::vector<char> on_path(n, 0);
  auto walk = [&](auto&& self, VertexId start, VertexId at, std::size_t length, std::uint64_t weight) -> void {
    for (auto [w, m] : adj[at]) {
      if (w == start && length == k) {
        total += weight * m;
        continue;
      }
      if (w <= start || on_path[w] || length >= k) continue;
      on_path[w] = 1;
      self(self, start, w, length + 1, weight * m);
      on_path[w] = 0;
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    on_path[s] = 1;
    walk(walk, s, s, 1, 1);
    on_path[s] = 0;
  }
  return total / 2;
}

std::optional<std::vector<EdgeId>> find_homeomorphic_subgraph(const MultiGraph& g, const MultiGraph& target,
                                                              std::size_t deletions) {
  const MultiGraph goal = topological_core(target);
  const CanonicalForm goal_form = canonical_form(goal);
  const std::size_t m = g.edge_count();
  if (deletions > m) return std::nullopt;
  std::vector<EdgeId> pick(deletions);
  std::iota(pick.begin(), pick.end(), 0u);
  for (;;) {
    const MultiGraph core = topological_core(delete_edges(g, pick));
    if (core.vertex_count() == goal.vertex_count() && core.edge_count() == goal.edge_count() &&
        canonical_form(core) == goal_form)
      return pick;
    // next combination
    std::size_t i = deletions;
    while (i > 0 && pick[i - 1] == m - deletions + i - 1) --i;
    if (i == 0) return std::nullopt;
    ++pick[i - 1];
    for (std::size_t j = i; j < deletions; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace obstructionist::iso
