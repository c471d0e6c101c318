// Parallel kernels against their serial references.
//
//   ./build/bench/hlx_bench --benchmark_filter=Sieve
//   OMP_NUM_THREADS=8 ./build/bench/hlx_bench

#include <benchmark/benchmark.h>

#include "hlx/prime_tuples.hpp"
#include "hlx/sequences.hpp"
#include "hlx/sieve.hpp"

namespace {

void BM_SieveSegmentedParallel(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hlx::sieve(limit));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SieveSerialReference(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hlx::sieve_serial(limit));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_SieveSegmentedParallel)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SieveSerialReference)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_TupleCountParallel(benchmark::State& state) {
  const auto s = hlx::sieve(10'000'100);
  const hlx::TuplePattern pattern({0, 2, 6});
  for (auto _ : state) benchmark::DoNotOptimize(hlx::tuple_count(s, pattern, 1e7));
}

void BM_TupleCountSerialReference(benchmark::State& state) {
  const auto s = hlx::sieve(10'000'100);
  const hlx::TuplePattern pattern({0, 2, 6});
  for (auto _ : state) benchmark::DoNotOptimize(hlx::tuple_count_serial(s, pattern, 1e7));
}

BENCHMARK(BM_TupleCountParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TupleCountSerialReference)->Unit(benchmark::kMillisecond);

void BM_IndecomposableParallel(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hlx::indecomposable_bruteforce(n));
}

void BM_IndecomposableSerialReference(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hlx::indecomposable_bruteforce_serial(n));
}

BENCHMARK(BM_IndecomposableParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IndecomposableSerialReference)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
