#include <benchmark/benchmark.h>

#include "ambix/recipe.hpp"

using namespace ambix;

static void BM_ToddCoxeter_235(benchmark::State& state) {
  auto P = parse_presentation("<a,b | a^2, b^3, (a*b)^5>");
  for (auto _ : state) {
    auto T = todd_coxeter(P, {});
    benchmark::DoNotOptimize(T.coset_count());
  }
}
BENCHMARK(BM_ToddCoxeter_235);

static void BM_ValidateRecipe_2alt7(benchmark::State& state) {
  auto r = load_recipe("2.alt7");
  for (auto _ : state) {
    auto c = validate_cover_recipe(r);
    benchmark::DoNotOptimize(c.cover->order());
  }
}
BENCHMARK(BM_ValidateRecipe_2alt7);
