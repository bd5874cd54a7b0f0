#include <benchmark/benchmark.h>

#include "ambix/ambix.hpp"

using namespace ambix;

static void BM_H2_Sym4(benchmark::State& state) {
  auto G = make_group("sym:4");
  auto pt = PermGroupTable::build(*G);
  auto Gt = std::make_shared<GroupTable>(pt.table);
  for (auto _ : state) benchmark::DoNotOptimize(h2_order(Gt));
}
BENCHMARK(BM_H2_Sym4);

static void BM_H2_Sym5(benchmark::State& state) {
  auto G = make_group("sym:5");
  auto pt = PermGroupTable::build(*G);
  auto Gt = std::make_shared<GroupTable>(pt.table);
  for (auto _ : state) benchmark::DoNotOptimize(h2_order(Gt));
}
BENCHMARK(BM_H2_Sym5);

static void BM_ScanEquipments_Alt5(benchmark::State& state) {
  Config cfg;
  for (auto _ : state) {
    auto rep = scan_equipments("alt:5", cfg);
    benchmark::DoNotOptimize(rep.rows.size());
  }
}
BENCHMARK(BM_ScanEquipments_Alt5);
