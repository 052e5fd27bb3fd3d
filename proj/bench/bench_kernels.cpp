// Serial versus OpenMP face-maximisation kernels, plus the exhaustive
// reference enumeration on graphs small enough for it.

#include <benchmark/benchmark.h>

#include <limits>
#include <string>

#include "obstructionist/catalog.hpp"
#include "obstructionist/embed.hpp"
#include "obstructionist/parallel.hpp"

using namespace obstructionist;
using embed::kernels::Orientation;

namespace {

constexpr std::size_t kNoStop = std::numeric_limits<std::size_t>::max();

const char* kGraphs[] = {"K33", "F11", "G1", "H3", "H5"};

void max_faces(benchmark::State& state, Orientation kind) {
  const std::string name = kGraphs[state.range(0)];
  const int threads = static_cast<int>(state.range(1));
  const auto g = catalog::build(name).graph;
  std::size_t faces = 0;
  for (auto _ : state) {
    const auto r = embed::kernels::max_faces(g, kind, 0, kNoStop, threads);
    faces = r.faces;
    benchmark::DoNotOptimize(faces);
  }
  state.SetLabel(name + (threads == 1 ? " serial" : " omp x" + std::to_string(threads)));
  state.counters["faces"] = static_cast<double>(faces);
}

void orientable(benchmark::State& state) { max_faces(state, Orientation::Orientable); }
void signed_systems(benchmark::State& state) { max_faces(state, Orientation::Signed); }

void reference(benchmark::State& state) {
  const std::string name = state.range(0) == 0 ? "K4" : "K33";
  const auto g = catalog::build(name).graph;
  for (auto _ : state) benchmark::DoNotOptimize(embed::kernels::max_faces_reference(g, Orientation::Orientable));
  state.SetLabel(name + " reference");
}

void kernel_grid(benchmark::internal::Benchmark* b) {
  const int parallel = std::max(2, thread_count());
  for (int graph = 0; graph < static_cast<int>(std::size(kGraphs)); ++graph)
    for (int threads : {1, parallel}) b->Args({graph, threads});
}

}  // namespace

BENCHMARK(orientable)->Apply(kernel_grid)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(signed_systems)->Apply(kernel_grid)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(reference)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
