#include <benchmark/benchmark.h>

#include <random>

#include "denthex/condensation.hpp"
#include "denthex/formulas.hpp"
#include "denthex/oracle.hpp"
#include "denthex/pfaffian.hpp"

using namespace denthex;

static void BM_macmahon(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(macmahon(n, n, n));
}
BENCHMARK(BM_macmahon)->Arg(4)->Arg(8)->Arg(16);

static void BM_oracle_hexagon(benchmark::State& state) {
  const long n = state.range(0);
  Region r = hexagon_cells(n, n, n, 0);
  for (auto _ : state) benchmark::DoNotOptimize(count_tilings(r));
}
BENCHMARK(BM_oracle_hexagon)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

static void BM_oracle_notch(benchmark::State& state) {
  Region r = build_notch_region(false, 3, 3, 3, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_tilings(r));
}
BENCHMARK(BM_oracle_notch);

static void BM_notch_formula(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gk_notch({3, 3, 3, 2, 2, false}));
}
BENCHMARK(BM_notch_formula);

static void BM_theorem1(benchmark::State& state) {
  HexDentSpec spec{2, 2, 2, 2,
                   {{Side::Bottom, 3, DentKind::Alpha},
                    {Side::NorthEast, 1, DentKind::Alpha},
                    {Side::NorthWest, 4, DentKind::Alpha}},
                   {{Side::Top, 1, DentKind::Beta}},
                   false};
  for (auto _ : state) benchmark::DoNotOptimize(theorem1_count(spec));
}
BENCHMARK(BM_theorem1);

static void BM_theorem1_oracle_entries(benchmark::State& state) {
  HexDentSpec spec{2, 2, 2, 2,
                   {{Side::Bottom, 3, DentKind::Alpha},
                    {Side::NorthEast, 1, DentKind::Alpha},
                    {Side::NorthWest, 4, DentKind::Alpha}},
                   {{Side::Top, 1, DentKind::Beta}},
                   false};
  for (auto _ : state)
    benchmark::DoNotOptimize(theorem1_count(spec, EntryMode::Oracle));
}
BENCHMARK(BM_theorem1_oracle_entries);

static void BM_pfaffian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  SkewMatrix a(n);
  std::uniform_int_distribution<long> d(-99, 99);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a.set(i, j, Rat(d(rng)));
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(a));
}
BENCHMARK(BM_pfaffian)->Arg(8)->Arg(12)->Arg(16);

BENCHMARK_MAIN();
