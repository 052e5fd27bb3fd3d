#include "obstructionist/generate.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <utility>

#include "json.hpp"

#include "obstructionist/graph_io.hpp"
#include "obstructionist/parallel.hpp"

namespace obstructionist::generate {

namespace {

using Found = std::vector<std::pair<iso::CanonicalForm, MultiGraph>>;

// Canonical relabeling with edges sorted, so the stored representative does
// not depend on which parent produced it.
std::pair<iso::CanonicalForm, MultiGraph> normalized(const MultiGraph& g) {
  auto labeling = iso::canonical_labeling(g);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    VertexId a = labeling.relabel[e.u], b = labeling.relabel[e.v];
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(pairs.begin(), pairs.end());
  MultiGraph out(g.vertex_count());
  for (auto [a, b] : pairs) out.add_edge(a, b);
  return {std::move(labeling.form), std::move(out)};
}

MultiGraph theta() {
  MultiGraph g(2);
  for (int i = 0; i < 3; ++i) g.add_edge(0, 1);
  return g;
}

MultiGraph dumbbell() {
  MultiGraph g(2);
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  g.add_edge(1, 1);
  return g;
}

Found children(const MultiGraph& parent) {
  std::map<iso::CanonicalForm, MultiGraph> local;
  for (const auto& spec : all_specs(parent)) {
    auto [form, graph] = normalized(add_edge(parent, spec));
    local.try_emplace(std::move(form), std::move(graph));
  }
  return {std::make_move_iterator(local.begin()), std::make_move_iterator(local.end())};
}

// Frontier shared across calls, grown on demand.
std::mutex cache_mutex;
GenerationFrontier cached;
std::size_t cached_max = 0;

const GenerationFrontier& frontier_up_to(std::size_t max_vertices) {
  std::lock_guard lock(cache_mutex);
  if (max_vertices > cached_max) {
    cached = GenerationFrontier::grow(max_vertices);
    cached_max = max_vertices;
  }
  return cached;
}

std::string fresh_name(const MultiGraph& g, std::string base, const std::vector<std::string>& taken) {
  while (g.find_label(base) || std::find(taken.begin(), taken.end(), base) != taken.end()) base += "'";
  return base;
}

std::array<std::string, 2> new_vertex_names(const MultiGraph& g, const char* a, const char* b) {
  if (!g.has_labels()) return {};
  std::string first = fresh_name(g, a, {});
  std::string second = fresh_name(g, b, {first});
  return {first, second};
}

void check_even(std::size_t max_vertices) {
  if (max_vertices < 2 || max_vertices % 2 != 0)
    throw GenerationError("cubic graphs need an even vertex count >= 2, got " + std::to_string(max_vertices));
}

}  // namespace

GenerationFrontier GenerationFrontier::grow(std::size_t max_vertices) {
  check_even(max_vertices);
  GenerationFrontier f;
  auto& base = f.levels[2];
  for (const MultiGraph& g : {theta(), dumbbell()}) {
    auto [form, graph] = normalized(g);
    base.emplace(std::move(form), std::move(graph));
  }
  for (std::size_t n = 4; n <= max_vertices; n += 2) {
    std::vector<const MultiGraph*> parents;
    for (const auto& [form, g] : f.levels[n - 2]) parents.push_back(&g);
    std::vector<Found> found(parents.size());
    const int threads = thread_count();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < parents.size(); ++i) found[i] = children(*parents[i]);
    auto& level = f.levels[n];
    for (auto& batch : found)
      for (auto& [form, graph] : batch) level.try_emplace(std::move(form), std::move(graph));
  }
  return f;
}

std::vector<MultiGraph> generate_connected_cubic(std::size_t max_vertices, bool simple_only) {
  check_even(max_vertices);
  const GenerationFrontier& f = frontier_up_to(max_vertices);
  std::vector<MultiGraph> out;
  for (const auto& [n, level] : f.levels) {
    if (n > max_vertices) break;
    for (const auto& [form, g] : level)
      if (!simple_only || is_simple(g)) out.push_back(g);
  }
  return out;
}

std::vector<MultiGraph> generate_all_cubic_b1_le(std::size_t b1_max, bool simple_only) {
  if (b1_max < 2) return {};
  std::vector<MultiGraph> connected = generate_connected_cubic(2 * (b1_max - 1), simple_only);
  std::vector<std::size_t> b1(connected.size());
  for (std::size_t i = 0; i < connected.size(); ++i) b1[i] = betti(connected[i]);

  std::map<iso::CanonicalForm, MultiGraph> all;
  for (const auto& g : connected) all.emplace(iso::canonical_form(g), g);

  // Multisets as non-decreasing index sequences of length >= 2.
  std::vector<std::size_t> chosen;
  auto extend = [&](auto&& self, std::size_t from, std::size_t budget) -> void {
    if (chosen.size() >= 2) {
      MultiGraph u = connected[chosen[0]];
      for (std::size_t k = 1; k < chosen.size(); ++k) u = disjoint_union(u, connected[chosen[k]]);
      auto [form, graph] = normalized(u);
      all.try_emplace(std::move(form), std::move(graph));
    }
    for (std::size_t i = from; i < connected.size(); ++i) {
      if (b1[i] > budget) continue;
      chosen.push_back(i);
      self(self, i, budget - b1[i]);
      chosen.pop_back();
    }
  };
  extend(extend, 0, b1_max);

  std::vector<MultiGraph> out;
  out.reserve(all.size());
  for (auto& [form, g] : all) out.push_back(std::move(g));
  return out;
}

std::vector<Augmentation> enumerate_augmentations(const MultiGraph& g, int edges_to_add,
                                                  std::size_t min_girth_final) {
  if (edges_to_add != 1 && edges_to_add != 2)
    throw GenerationError("edges_to_add must be 1 or 2, got " + std::to_string(edges_to_add));
  if (!is_cubic(g)) throw GenerationError("augmentation needs a cubic graph");

  auto one_step = [](const MultiGraph& host, const char* a, const char* b, std::size_t min_girth) {
    const auto names = new_vertex_names(host, a, b);
    std::map<iso::CanonicalForm, Augmentation> classes;
    for (const auto& spec : all_specs(host)) {
      MultiGraph h = add_edge(host, spec, names);
      if (girth_or_infinite(h) < min_girth) continue;
      auto form = iso::canonical_form(h);
      auto it = classes.find(form);
      if (it == classes.end())
        it = classes.emplace(form, Augmentation{{spec}, {describe(host, spec)}, std::move(h), form, 0}).first;
      ++it->second.members;
    }
    std::vector<Augmentation> out;
    for (auto& [form, a] : classes) out.push_back(std::move(a));
    return out;
  };

  if (edges_to_add == 1) return one_step(g, "x", "y", min_girth_final);

  std::vector<Augmentation> first = one_step(g, "x", "y", 3);
  std::vector<std::vector<Augmentation>> second(first.size());
  const int threads = thread_count();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t i = 0; i < first.size(); ++i) second[i] = one_step(first[i].graph, "u", "v", min_girth_final);

  std::map<iso::CanonicalForm, Augmentation> merged;
  for (std::size_t i = 0; i < first.size(); ++i) {
    for (auto& a : second[i]) {
      const std::size_t members = first[i].members * a.members;
      auto it = merged.find(a.form);
      if (it == merged.end()) {
        Augmentation combined{{first[i].specs[0], a.specs[0]},
                              {first[i].descriptions[0], a.descriptions[0]},
                              std::move(a.graph),
                              a.form,
                              0};
        it = merged.emplace(combined.form, std::move(combined)).first;
      }
      it->second.members += members;
    }
  }
  std::vector<Augmentation> out;
  for (auto& [form, a] : merged) out.push_back(std::move(a));
  return out;
}

std::vector<CorpusEntry> write_corpus(const std::filesystem::path& dir, std::size_t max_vertices) {
  check_even(max_vertices);
  std::filesystem::create_directories(dir);
  const GenerationFrontier& f = frontier_up_to(max_vertices);
  std::vector<CorpusEntry> rows;
  for (const auto& [n, level] : f.levels) {
    if (n > max_vertices) break;
    for (bool simple : {false, true}) {
      CorpusEntry row{n, simple, 0, "cubic_" + std::to_string(n) + (simple ? "_simple" : "_multi") + ".s6"};
      std::ofstream out(dir / row.file);
      if (!out) throw std::runtime_error("cannot write " + (dir / row.file).string());
      for (const auto& [form, g] : level) {
        if (simple && !is_simple(g)) continue;
        out << io::to_sparse6(g) << '\n';
        ++row.count;
      }
      rows.push_back(row);
    }
  }
  nlohmann::json manifest = nlohmann::json::array();
  for (const auto& r : rows)
    manifest.push_back({{"vertices", r.vertices}, {"simple", r.simple}, {"count", r.count}, {"file", r.file}});
  std::ofstream(dir / "manifest.json") << manifest.dump(2) << '\n';
  return rows;
}

}  // namespace obstructionist::generate
