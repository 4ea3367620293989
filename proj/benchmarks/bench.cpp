#include <benchmark/benchmark.h>

#include "qvir/bosonic.hpp"
#include "qvir/fermionic.hpp"
#include "qvir/paths.hpp"
#include "qvir/qspecial.hpp"

using namespace qvir;

static void BM_PolyMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  QPoly a = q_pochhammer(n);
  QPoly b = q_binomial(n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_PolyMultiply)->Arg(20)->Arg(40);

static void BM_EnumerateBandPaths(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_abf(4, 2, 2, 0, 0, L));
  }
}
BENCHMARK(BM_EnumerateBandPaths)->Arg(12)->Arg(16);

static void BM_QuasiParticleSum(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(melzer_finitized(5, 2, 3, 0, 0, 2 * L + 1));
  }
}
BENCHMARK(BM_QuasiParticleSum)->Arg(12)->Arg(20);

static void BM_Trinomial(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_trinomial(0, 0, L));
  }
}
BENCHMARK(BM_Trinomial)->Arg(20)->Arg(40);

static void BM_CharacterSeries(benchmark::State& state) {
  const QExp order = QExp::integer(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hl_character(5, 2, 2, 'a', order));
  }
}
BENCHMARK(BM_CharacterSeries)->Arg(12)->Arg(24);

static void BM_AlternatingSeries(benchmark::State& state) {
  const QExp order = QExp::integer(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rocha_caridi(5, 6, 2, 4, order));
  }
}
BENCHMARK(BM_AlternatingSeries)->Arg(12)->Arg(24);
