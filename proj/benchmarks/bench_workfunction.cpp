#include <benchmark/benchmark.h>

#include <random>

#include "wfbench/analysis.hpp"
#include "wfbench/configuration.hpp"
#include "wfbench/oracle.hpp"
#include "wfbench/search.hpp"
#include "wfbench/workfunction.hpp"

namespace {

wfbench::Instance bench_instance(std::int64_t n, std::int64_t k, std::int64_t t) {
  wfbench::SearchConfig cfg;
  cfg.seed = 1234;
  cfg.points = {n, n};
  cfg.servers = {k, k};
  cfg.length = {t, t};
  cfg.filter = wfbench::MetricFilter::metric_only;
  return wfbench::generate_instance(cfg, 0);
}

void BM_RunHistory(benchmark::State& state) {
  const auto inst = bench_instance(state.range(0), state.range(1), 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wfbench::run_history(inst, wfbench::Mode::multiset));
  }
}
BENCHMARK(BM_RunHistory)->Args({5, 3})->Args({8, 3})->Args({10, 4})->Args({12, 5});

void BM_CheckHistory(benchmark::State& state) {
  const auto inst = bench_instance(state.range(0), 3, 8);
  const auto history = wfbench::run_history(inst, wfbench::Mode::set);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wfbench::check_history(history));
  }
}
BENCHMARK(BM_CheckHistory)->Arg(5)->Arg(6)->Arg(8);

void BM_MatchingDistance(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto inst = bench_instance(12, 1, 0);
  std::mt19937_64 rng(5);
  std::vector<wfbench::PointId> a, b;
  for (std::size_t i = 0; i < k; ++i) {
    a.push_back(static_cast<wfbench::PointId>(rng() % 12));
    b.push_back(static_cast<wfbench::PointId>(rng() % 12));
  }
  const wfbench::Configuration x(a), y(b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wfbench::matching_distance(x, y, inst.space));
  }
}
BENCHMARK(BM_MatchingDistance)->DenseRange(2, 9);

void BM_BruteForceTable(benchmark::State& state) {
  const auto inst = bench_instance(5, 3, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wfbench::brute_force_table(
        inst, static_cast<std::size_t>(state.range(0)), wfbench::Mode::set));
  }
}
BENCHMARK(BM_BruteForceTable)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
