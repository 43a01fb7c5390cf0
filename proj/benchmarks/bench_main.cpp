#include <benchmark/benchmark.h>

#include "godbersen/ak_solver.hpp"
#include "godbersen/concave.hpp"
#include "godbersen/harness.hpp"
#include "godbersen/mixed_volume.hpp"

using namespace godbersen;

namespace {

Polytope body(long n, long verts) {
  return generate({GenKind::RandomHull, static_cast<std::size_t>(n), static_cast<std::size_t>(verts), 11, 4});
}

std::vector<Point> cloud(long n, long verts) {
  Polytope k = body(n, verts);
  Polytope l = reflect(k);
  std::vector<Point> pts;
  for (const auto& a : k.vertices()) {
    for (const auto& b : l.vertices()) pts.push_back(a + b);
  }
  return pts;
}

void BM_Hull(benchmark::State& state) {
  const auto pts = cloud(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_hull(pts));
  state.counters["points"] = static_cast<double>(pts.size());
}
BENCHMARK(BM_Hull)->Args({2, 10})->Args({3, 10})->Args({4, 10})->Unit(benchmark::kMillisecond);

void BM_Report(benchmark::State& state) {
  const Polytope k = body(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(godbersen_report(k));
}
BENCHMARK(BM_Report)->Args({2, 8})->Args({3, 8})->Args({4, 8})->Unit(benchmark::kMillisecond);

void BM_FourierMotzkin(benchmark::State& state) {
  const System s = ak_system(body(state.range(0), state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(fm_feasible(s));
  state.counters["rows"] = static_cast<double>(s.halfspaces.size());
}
BENCHMARK(BM_FourierMotzkin)->Args({3, 12})->Args({4, 12})->Unit(benchmark::kMillisecond);

void BM_ConcaveIntegral(benchmark::State& state) {
  const PLConcave f = random_pl_concave(3);
  for (auto _ : state) benchmark::DoNotOptimize(godbersen_integral(f, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_ConcaveIntegral)->Arg(2)->Arg(8);

}  // namespace
BENCHMARK_MAIN();
