#include <benchmark/benchmark.h>

#include <complex>

#include "resurgentia/alien/engine.hpp"
#include "resurgentia/borel/numeric.hpp"
#include "resurgentia/hae/family.hpp"
#include "resurgentia/lr/large_radius.hpp"

using namespace resurgentia;

static void BM_FreeEnergy(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hae::gen_g_f(N));
}
BENCHMARK(BM_FreeEnergy)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_BridgeCheck(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alien::bridge_check({k, k}));
}
BENCHMARK(BM_BridgeCheck)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_H0(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lr::gen_H0(N));
}
BENCHMARK(BM_H0)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Bhat(benchmark::State& state) {
  const std::complex<double> zeta(0.7, 1.1);
  for (auto _ : state)
    benchmark::DoNotOptimize(borel::eval_Bhat<double>(zeta, borel::BhatBranch::B, 1e-12));
}
BENCHMARK(BM_Bhat)->Unit(benchmark::kMicrosecond);

static void BM_SectorialSum(benchmark::State& state) {
  borel::Settings<double> s;
  for (auto _ : state)
    benchmark::DoNotOptimize(borel::G_pm<double>(+1, {3, 0}, 0.0, 1.0, s));
}
BENCHMARK(BM_SectorialSum)->Unit(benchmark::kMillisecond);

static void BM_SectorialSumExtended(benchmark::State& state) {
  borel::Settings<long double> s;
  for (auto _ : state)
    benchmark::DoNotOptimize(borel::G_pm<long double>(+1, {3, 0}, 0.0L, 1.0L, s));
}
BENCHMARK(BM_SectorialSumExtended)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
