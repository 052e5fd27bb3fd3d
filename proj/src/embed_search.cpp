// Face-count search over rotation systems.
//
// Faces are the cycles of the permutation "enter the next vertex, turn to the
// rotation successor". Vertices are assigned in BFS order; assigning a vertex
// fixes the outgoing link of every dart (or dart state, for signed systems)
// entering it. Links are kept as a union of disjoint chains so that closing a
// face is detected in O(1) and undone from a stack.

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>

#include "embed_internal.hpp"
#include "obstructionist/embed.hpp"

namespace obstructionist::embed::kernels {

namespace {

struct RotationChoice {
  // For each dart x at the vertex: x, its successor and its predecessor.
  std::vector<std::array<DartId, 3>> links;
};

struct Level {
  VertexId vertex = 0;
  std::vector<RotationChoice> rotations;
  std::vector<EdgeId> new_signs;  // cotree edges whose sign is chosen at this level
  std::uint64_t choice_count() const { return static_cast<std::uint64_t>(rotations.size()) << new_signs.size(); }
};

struct Plan {
  Orientation kind = Orientation::Orientable;
  std::size_t elements = 0;
  std::size_t edges = 0;
  std::size_t girth = 1;
  std::size_t parity = 0;  // orientable face counts are congruent to E - V mod 2
  std::vector<Level> levels;
};

std::vector<RotationChoice> rotations_at(const MultiGraph& g, VertexId v, bool mirror_reduced) {
  std::vector<DartId> darts(g.darts_at(v).begin(), g.darts_at(v).end());
  std::vector<RotationChoice> out;
  if (darts.empty()) {
    out.emplace_back();
    return out;
  }
  std::vector<DartId> tail(darts.begin() + 1, darts.end());
  std::sort(tail.begin(), tail.end());
  do {
    if (mirror_reduced && tail.size() >= 2) {
      // keep one of each mirror pair: darts[1] must precede darts[2]
      auto p1 = std::find(tail.begin(), tail.end(), darts[1]);
      auto p2 = std::find(tail.begin(), tail.end(), darts[2]);
      if (p1 > p2) continue;
    }
    std::vector<DartId> cyc;
    cyc.push_back(darts[0]);
    cyc.insert(cyc.end(), tail.begin(), tail.end());
    RotationChoice choice;
    const std::size_t k = cyc.size();
    for (std::size_t i = 0; i < k; ++i) choice.links.push_back({cyc[i], cyc[(i + 1) % k], cyc[(i + k - 1) % k]});
    out.push_back(std::move(choice));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

Plan make_plan(const MultiGraph& g, Orientation kind, bool mirror_reduced) {
  Plan plan;
  plan.kind = kind;
  plan.edges = g.edge_count();
  plan.elements = kind == Orientation::Orientable ? g.dart_count() : 2 * g.dart_count();
  plan.girth = std::max<std::size_t>(1, girth(g).value_or(1));
  plan.parity = (g.edge_count() + g.vertex_count()) % 2;

  const std::size_t n = g.vertex_count();
  VertexId root = 0;
  for (VertexId v = 1; v < n; ++v)
    if (g.degree(v) > g.degree(root)) root = v;
  std::vector<std::size_t> position(n, SIZE_MAX);
  std::vector<char> tree(g.edge_count(), 0);
  std::vector<VertexId> order;
  std::deque<VertexId> queue{root};
  position[root] = 0;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    order.push_back(x);
    for (DartId d : g.darts_at(x)) {
      VertexId y = g.head(d);
      if (position[y] == SIZE_MAX) {
        position[y] = order.size() + queue.size();
        tree[MultiGraph::edge_of(d)] = 1;
        queue.push_back(y);
      }
    }
  }
  if (order.size() != n) throw EmbeddingError("genus search needs a connected graph");

  for (std::size_t i = 0; i < n; ++i) {
    Level level;
    level.vertex = order[i];
    level.rotations = rotations_at(g, order[i], mirror_reduced && i == 0);
    if (kind == Orientation::Signed) {
      for (DartId d : g.darts_at(order[i])) {
        EdgeId e = MultiGraph::edge_of(d);
        if (tree[e]) continue;
        VertexId other = g.head(d);
        if (position[other] < i) continue;
        if (other == order[i] && (d & 1u)) continue;  // loops are listed once
        level.new_signs.push_back(e);
      }
    }
    plan.levels.push_back(std::move(level));
  }
  return plan;
}

struct Undo {
  std::uint32_t a, b, sa, eb;
  bool closed;
};

class ChainState {
 public:
  explicit ChainState(const Plan& plan) : plan_(plan) { reset(); }

  void reset() {
    const std::size_t n = plan_.elements;
    start_of_.resize(n);
    end_of_.resize(n);
    len_.assign(n, 1);
    for (std::uint32_t i = 0; i < n; ++i) start_of_[i] = end_of_[i] = i;
    sign_.assign(plan_.edges, 1);
    closed_ = 0;
    open_chains_ = n;
    open_elements_ = n;
    undo_.clear();
    marks_.clear();
  }

  void apply(std::size_t level_index, std::uint64_t choice) {
    const Level& level = plan_.levels[level_index];
    marks_.push_back(undo_.size());
    const std::size_t ns = level.new_signs.size();
    const auto& rot = level.rotations[choice >> ns];
    for (std::size_t j = 0; j < ns; ++j) sign_[level.new_signs[j]] = ((choice >> j) & 1u) ? -1 : 1;
    if (plan_.kind == Orientation::Orientable) {
      for (const auto& [x, succ, pred] : rot.links) link(MultiGraph::twin(x), succ);
    } else {
      for (const auto& [x, succ, pred] : rot.links) {
        const bool positive = sign_[MultiGraph::edge_of(x)] > 0;
        const DartId in = MultiGraph::twin(x);
        // entering with orientation +1 leaves with the edge sign, and vice versa
        link(state(in, false), positive ? state(succ, false) : state(pred, true));
        link(state(in, true), positive ? state(pred, true) : state(succ, false));
      }
    }
  }

  void retract() {
    const std::size_t mark = marks_.back();
    marks_.pop_back();
    while (undo_.size() > mark) {
      const Undo u = undo_.back();
      undo_.pop_back();
      if (u.closed) {
        --closed_;
        ++open_chains_;
        open_elements_ += len_[u.b];
      } else {
        start_of_[u.eb] = u.b;
        end_of_[u.sa] = u.a;
        len_[u.sa] -= len_[u.b];
        ++open_chains_;
      }
    }
  }

  std::size_t bound() const {
    std::size_t cycles = closed_ + std::min(open_chains_, open_elements_ / plan_.girth);
    if (plan_.kind == Orientation::Signed) return cycles / 2;
    if ((cycles + plan_.parity) % 2 != 0) --cycles;
    return cycles;
  }

  std::size_t faces() const { return plan_.kind == Orientation::Signed ? closed_ / 2 : closed_; }

 private:
  static std::uint32_t state(DartId d, bool negative) { return 2 * d + (negative ? 1u : 0u); }

  void link(std::uint32_t a, std::uint32_t b) {
    const std::uint32_t sa = start_of_[a];
    if (sa == b) {
      ++closed_;
      --open_chains_;
      open_elements_ -= len_[b];
      undo_.push_back({a, b, sa, 0, true});
      return;
    }
    const std::uint32_t eb = end_of_[b];
    start_of_[eb] = sa;
    end_of_[sa] = eb;
    len_[sa] += len_[b];
    --open_chains_;
    undo_.push_back({a, b, sa, eb, false});
  }

  const Plan& plan_;
  std::vector<std::uint32_t> start_of_, end_of_, len_;
  std::vector<std::int8_t> sign_;
  std::size_t closed_ = 0, open_chains_ = 0, open_elements_ = 0;
  std::vector<Undo> undo_;
  std::vector<std::size_t> marks_;
};

constexpr std::size_t kNoTask = std::numeric_limits<std::size_t>::max();

struct Shared {
  std::atomic<std::size_t> best;
  std::atomic<std::size_t> min_stop_task{kNoTask};
  std::atomic<std::uint64_t> nodes{0};
  std::size_t stop;
};

struct TaskResult {
  bool found = false;
  bool stopped = false;
  std::size_t faces = 0;
  std::vector<std::uint64_t> choices;
};

class Worker {
 public:
  Worker(const Plan& plan, Shared& shared) : plan_(plan), shared_(shared), state_(plan) {}

  TaskResult run(std::size_t task, const std::vector<std::uint64_t>& prefix, std::size_t floor) {
    task_ = task;
    result_ = TaskResult{};
    result_.faces = floor;
    local_nodes_ = 0;
    state_.reset();
    path_.assign(plan_.levels.size(), 0);
    bool alive = true;
    for (std::size_t level = 0; level < prefix.size() && alive; ++level) {
      path_[level] = prefix[level];
      state_.apply(level, prefix[level]);
      alive = promising();
    }
    if (alive && !aborted()) dfs(prefix.size());
    shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
    return result_;
  }

 private:
  bool aborted() const { return shared_.min_stop_task.load(std::memory_order_relaxed) < task_; }

  bool promising() const {
    const std::size_t b = state_.bound();
    const std::size_t threshold = std::min(shared_.best.load(std::memory_order_relaxed), shared_.stop);
    return b > result_.faces && b >= threshold;
  }

  // false aborts the task
  bool dfs(std::size_t level) {
    ++local_nodes_;
    if (level == plan_.levels.size()) {
      const std::size_t f = state_.faces();
      if (f > result_.faces) {
        result_.faces = f;
        result_.found = true;
        result_.choices = path_;
        std::size_t seen = shared_.best.load();
        while (seen < f && !shared_.best.compare_exchange_weak(seen, f)) {
        }
        if (f >= shared_.stop) {
          result_.stopped = true;
          std::size_t current = shared_.min_stop_task.load();
          while (task_ < current && !shared_.min_stop_task.compare_exchange_weak(current, task_)) {
          }
          return false;
        }
      }
      return true;
    }
    const std::uint64_t count = plan_.levels[level].choice_count();
    for (std::uint64_t c = 0; c < count; ++c) {
      path_[level] = c;
      state_.apply(level, c);
      bool keep_going = true;
      if (promising()) keep_going = dfs(level + 1);
      state_.retract();
      if (!keep_going || aborted()) return false;
    }
    return true;
  }

  const Plan& plan_;
  Shared& shared_;
  ChainState state_;
  std::size_t task_ = 0;
  TaskResult result_;
  std::vector<std::uint64_t> path_;
  std::uint64_t local_nodes_ = 0;
};

SignedRotationSystem decode(const MultiGraph& g, const Plan& plan, const std::vector<std::uint64_t>& choices) {
  SignedRotationSystem out;
  out.rotation.order.assign(g.vertex_count(), {});
  out.sign.assign(g.edge_count(), 1);
  for (std::size_t i = 0; i < plan.levels.size(); ++i) {
    const Level& level = plan.levels[i];
    const std::size_t ns = level.new_signs.size();
    for (std::size_t j = 0; j < ns; ++j) out.sign[level.new_signs[j]] = ((choices[i] >> j) & 1u) ? -1 : 1;
    auto& cyc = out.rotation.order[level.vertex];
    for (const auto& link : level.rotations[choices[i] >> ns].links) cyc.push_back(link[0]);
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> make_prefixes(const Plan& plan, std::size_t wanted) {
  std::vector<std::vector<std::uint64_t>> prefixes{{}};
  for (std::size_t level = 0; level < plan.levels.size() && prefixes.size() < wanted; ++level) {
    std::vector<std::vector<std::uint64_t>> next;
    const std::uint64_t count = plan.levels[level].choice_count();
    for (const auto& p : prefixes)
      for (std::uint64_t c = 0; c < count; ++c) {
        next.push_back(p);
        next.back().push_back(c);
      }
    prefixes = std::move(next);
  }
  return prefixes;
}

}  // namespace

FaceSearch max_faces(const MultiGraph& g, Orientation kind, std::size_t floor, std::size_t stop, int threads) {
  FaceSearch out;
  out.faces = floor;
  if (g.edge_count() == 0) {
    if (g.vertex_count() != 1) throw EmbeddingError("genus search needs a connected graph");
    out.witness.rotation.order.assign(1, {});
    if (1 > floor) {
      out.faces = 1;
      out.found = true;
    }
    return out;
  }
  const Plan plan = make_plan(g, kind, true);
  Shared shared;
  shared.best.store(floor);
  shared.stop = stop;

  std::vector<std::vector<std::uint64_t>> prefixes;
  if (threads <= 1) {
    prefixes.emplace_back();
  } else {
    prefixes = make_prefixes(plan, static_cast<std::size_t>(threads) * 16);
  }
  std::vector<TaskResult> results(prefixes.size());

  if (threads <= 1) {
    Worker worker(plan, shared);
    results[0] = worker.run(0, prefixes[0], floor);
  } else {
#pragma omp parallel num_threads(threads)
    {
      Worker worker(plan, shared);
#pragma omp for schedule(dynamic, 1)
      for (std::size_t t = 0; t < prefixes.size(); ++t) {
        if (shared.min_stop_task.load() < t) continue;
        results[t] = worker.run(t, prefixes[t], floor);
      }
    }
  }
  out.nodes = shared.nodes.load();

  const TaskResult* winner = nullptr;
  const std::size_t stop_task = shared.min_stop_task.load();
  if (stop_task != kNoTask) {
    winner = &results[stop_task];
  } else {
    for (const auto& r : results)
      if (r.found && (!winner || r.faces > winner->faces)) winner = &r;
  }
  if (winner) {
    out.found = true;
    out.faces = winner->faces;
    out.witness = decode(g, plan, winner->choices);
  }
  return out;
}

std::size_t max_faces_reference(const MultiGraph& g, Orientation kind) {
  if (g.edge_count() == 0) return 1;
  const Plan plan = make_plan(g, kind, false);
  std::vector<std::uint64_t> choices(plan.levels.size(), 0);
  std::size_t best = 0;
  for (;;) {
    SignedRotationSystem r = decode(g, plan, choices);
    const EmbeddingReport report =
        kind == Orientation::Orientable ? trace_faces(g, r.rotation) : trace_faces(g, r);
    best = std::max(best, report.face_count);
    std::size_t i = 0;
    while (i < choices.size() && ++choices[i] == plan.levels[i].choice_count()) choices[i++] = 0;
    if (i == choices.size()) return best;
  }
}

}  // namespace obstructionist::embed::kernels

namespace obstructionist::embed::detail {

std::vector<RotationSystem> rotation_systems_with_faces(const MultiGraph& g, std::size_t faces) {
  using namespace kernels;
  const Plan plan = make_plan(g, Orientation::Orientable, false);
  ChainState state(plan);
  std::vector<std::uint64_t> path(plan.levels.size(), 0);
  std::vector<RotationSystem> out;
  auto dfs = [&](auto&& self, std::size_t level) -> void {
    if (level == plan.levels.size()) {
      if (state.faces() == faces) out.push_back(decode(g, plan, path).rotation);
      return;
    }
    const std::uint64_t count = plan.levels[level].choice_count();
    for (std::uint64_t c = 0; c < count; ++c) {
      path[level] = c;
      state.apply(level, c);
      if (state.bound() >= faces) self(self, level + 1);
      state.retract();
    }
  };
  dfs(dfs, 0);
  std::vector<std::pair<std::vector<DartId>, RotationSystem>> keyed;
  for (auto& r : out) keyed.emplace_back(r.successor(g.dart_count()), std::move(r));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.clear();
  for (auto& [key, r] : keyed) out.push_back(std::move(r));
  return out;
}

}  // namespace obstructionist::embed::detail
