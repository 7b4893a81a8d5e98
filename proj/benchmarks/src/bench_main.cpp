#include <memory>

#include <benchmark/benchmark.h>

#include "omlprob/analysis.hpp"
#include "omlprob/bimap.hpp"
#include "omlprob/lattice.hpp"
#include "omlprob/states.hpp"

using namespace omlprob;

namespace {

void BM_BooleanAlgebra(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(boolean_algebra(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_BooleanAlgebra)->Arg(3)->Arg(5);

void BM_StateVertices(benchmark::State& st) {
  const Oml l = mo(static_cast<int>(st.range(0)));
  const LinSystem sys = state_system(l);
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_vertices(sys, 1000));
}
BENCHMARK(BM_StateVertices)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SmapVertices(benchmark::State& st) {
  const Oml l = mo(2);
  const LinSystem sys = smap_system(l);
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_vertices(sys, 1000));
}
BENCHMARK(BM_SmapVertices)->Unit(benchmark::kMillisecond);

void BM_GmapMaximize(benchmark::State& st) {
  const Oml l = mo(3);
  const Polyhedron p(gmap_system(l, corners_of(9)));
  RatVec obj(p.system().size(), Rat(1));
  for (auto _ : st) benchmark::DoNotOptimize(p.maximize(obj, true));
}
BENCHMARK(BM_GmapMaximize)->Unit(benchmark::kMillisecond);

void BM_Bell1State(benchmark::State& st) {
  const Oml l = mo(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(bell1_state(l));
}
BENCHMARK(BM_Bell1State)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Bell1Smap(benchmark::State& st) {
  const Oml l = mo(2);
  for (auto _ : st) benchmark::DoNotOptimize(bell1_smap(l));
}
BENCHMARK(BM_Bell1Smap)->Unit(benchmark::kMillisecond);

void BM_CheckGMap(benchmark::State& st) {
  const auto l = std::make_shared<const Oml>(mo(2));
  const BiMap g = build_table3_family(l, Rat(1, 3), Rat(2, 3), Rat(0), Rat(1));
  for (auto _ : st) benchmark::DoNotOptimize(check_g_map(g));
}
BENCHMARK(BM_CheckGMap);

}  // namespace
BENCHMARK_MAIN();
