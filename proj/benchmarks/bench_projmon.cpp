#include <benchmark/benchmark.h>

#include "projmon/analysis.hpp"
#include "projmon/catalog.hpp"
#include "projmon/classify.hpp"
#include "projmon/normalizer.hpp"

using namespace projmon;

static void BM_CloseA(benchmark::State& state) {
  Field q;
  auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Matrix> g;
  for (const auto& a : a_generators(n, q)) g.push_back(a.m);
  for (auto _ : state) {
    Monoid m(q, n, g);
    m.close();
    benchmark::DoNotOptimize(m.size());
  }
}
BENCHMARK(BM_CloseA)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_CloseZ(benchmark::State& state) {
  Field c3(FieldSpec::cyclotomic(3));
  auto gens = make_Z(static_cast<int>(state.range(0)), c3, 1).generators();
  for (auto _ : state) {
    Monoid m(c3, 2, gens);
    m.close();
    benchmark::DoNotOptimize(m.size());
  }
}
BENCHMARK(BM_CloseZ)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

static void BM_Analyze(benchmark::State& state) {
  Monoid m = make_A(3, Field());
  for (auto _ : state) benchmark::DoNotOptimize(analyze(m).irreducible.irreducible);
}
BENCHMARK(BM_Analyze)->Unit(benchmark::kMillisecond);

static void BM_Normalizer(benchmark::State& state) {
  Field c3(FieldSpec::cyclotomic(3));
  Monoid m = make_Z(5, c3);
  for (auto _ : state) benchmark::DoNotOptimize(normalizing_reflections(m).group_order);
}
BENCHMARK(BM_Normalizer)->Unit(benchmark::kMillisecond);

static void BM_ClassifyC2(benchmark::State& state) {
  Field c3(FieldSpec::cyclotomic(3));
  Monoid m = make_Z(4, c3);
  for (auto _ : state) benchmark::DoNotOptimize(classify_c2(m).index);
}
BENCHMARK(BM_ClassifyC2)->Unit(benchmark::kMillisecond);

static void BM_ClassifyR3(benchmark::State& state) {
  Monoid m = dual(make_A(3, Field()));
  for (auto _ : state) benchmark::DoNotOptimize(classify_r3(m).via_dual);
}
BENCHMARK(BM_ClassifyR3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
