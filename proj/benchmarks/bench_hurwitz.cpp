#include <benchmark/benchmark.h>

#include "ambix/ambix.hpp"

using namespace ambix;

static void BM_BraidOrbits_Sym3(benchmark::State& state) {
  Config cfg;
  EquippedGroup eg = equipped("sym:3", {"cycles:2"}, cfg);
  auto tuples = enumerate_tuples(*eg.group, eg.equipment_classes(), {static_cast<int>(state.range(0))});
  for (auto _ : state) {
    auto rep = braid_orbits(tuples);
    benchmark::DoNotOptimize(rep.orbit_count);
  }
  state.SetComplexityN(tuples.tuples.size());
}
BENCHMARK(BM_BraidOrbits_Sym3)->Arg(4)->Arg(6)->Arg(8)->Complexity();
