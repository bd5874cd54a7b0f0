#include <benchmark/benchmark.h>

#include "ambix/catalog.hpp"

using namespace ambix;

static void BM_SchreierSims_Sym8(benchmark::State& state) {
  std::vector<Permutation> gens = {parse_cycles("(1,2)", 8), parse_cycles("(1,2,3,4,5,6,7,8)", 8)};
  for (auto _ : state) {
    auto G = PermGroup::from_generators(gens, 8);
    benchmark::DoNotOptimize(G.order());
  }
}
BENCHMARK(BM_SchreierSims_Sym8);

static void BM_ConjugacyClasses_Alt6(benchmark::State& state) {
  auto G = make_group("alt:6");
  for (auto _ : state) {
    auto classes = G->conjugacy_classes();
    benchmark::DoNotOptimize(classes.size());
  }
}
BENCHMARK(BM_ConjugacyClasses_Alt6);

static void BM_StructureReport_Saltman2(benchmark::State& state) {
  auto G = make_group("saltman:2");
  for (auto _ : state) {
    auto rep = G->structure_report();
    benchmark::DoNotOptimize(rep.center_order);
  }
}
BENCHMARK(BM_StructureReport_Saltman2);

BENCHMARK_MAIN();
