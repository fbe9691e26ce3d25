#include <benchmark/benchmark.h>

#include "catalan/families.hpp"
#include "catalan/genrank.hpp"
#include "catalan/greens.hpp"

using namespace catalan;

static void enumerate_ic(benchmark::State& state) {
  auto const spec = FamilySpec::ic(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_members(spec));
  }
}
BENCHMARK(enumerate_ic)->DenseRange(6, 10, 2);

static void table_qprime(benchmark::State& state) {
  auto const spec = FamilySpec::qprime(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SemigroupTable::enumerate(spec));
  }
}
BENCHMARK(table_qprime)->DenseRange(4, 6);

static void starred_l(benchmark::State& state) {
  auto const S = SemigroupTable::enumerate(FamilySpec::ic(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(starred_L(S));
  }
}
BENCHMARK(starred_l)->DenseRange(3, 5);

static void starred_j(benchmark::State& state) {
  auto const S = SemigroupTable::enumerate(FamilySpec::ic(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(starred_J(S));
  }
}
BENCHMARK(starred_j)->DenseRange(3, 5);

static void generating_set(benchmark::State& state) {
  auto const S = SemigroupTable::enumerate(FamilySpec::qprime(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimal_generating_set(S));
  }
}
BENCHMARK(generating_set)->DenseRange(4, 6);

static void closure_top(benchmark::State& state) {
  int const  n = static_cast<int>(state.range(0));
  auto const S = SemigroupTable::enumerate(FamilySpec::ic(n));
  std::vector<Index> gens;
  for (Index i = 0; i < S.size(); ++i) {
    if (S.height(i) >= n - 1) {
      gens.push_back(i);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure(S, gens));
  }
}
BENCHMARK(closure_top)->DenseRange(4, 6);

BENCHMARK_MAIN();
