// Parallel kernels against their serial references.
//   ./build/bench/bench_kernels --benchmark_filter=Admissible

#include "localmodel/alcove.hpp"
#include "localmodel/poset.hpp"
#include "localmodel/verify.hpp"

#include <benchmark/benchmark.h>

#include <omp.h>

namespace {

using namespace localmodel;

void shape_args(benchmark::internal::Benchmark* b) {
  for (auto [n, r] : {std::pair{4, 2}, {5, 2}, {6, 3}, {7, 3}}) b->Args({n, r});
}

void BM_AdmissibleSerial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0)), r = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_admissible_serial(n, r));
  st.counters["alcoves"] = static_cast<double>(enumerate_admissible_serial(n, r).size());
}

void BM_AdmissibleParallel(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0)), r = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_admissible(n, r));
  st.counters["threads"] = omp_get_max_threads();
}

void BM_PosetSerial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0)), r = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(strata_poset_serial(n, r));
}

void BM_PosetParallel(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0)), r = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(strata_poset(n, r));
  st.counters["threads"] = omp_get_max_threads();
}

// Chart pool: the same charts verified one at a time versus through verify_charts.
void BM_ChartsSerial(benchmark::State& st) {
  const auto charts = select_charts(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), "all");
  VerifyOptions opts;
  opts.field = algebra::Field::prime(32003);
  const int d = static_cast<int>(st.range(1) * (st.range(0) - st.range(1)));
  for (auto _ : st)
    for (const auto& c : charts) benchmark::DoNotOptimize(verify_chart(c, d, opts));
  st.counters["charts"] = static_cast<double>(charts.size());
}

void BM_ChartsParallel(benchmark::State& st) {
  const auto charts = select_charts(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), "all");
  VerifyOptions opts;
  opts.field = algebra::Field::prime(32003);
  const int d = static_cast<int>(st.range(1) * (st.range(0) - st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(verify_charts(charts, d, opts));
  st.counters["threads"] = omp_get_max_threads();
}

} // namespace

BENCHMARK(BM_AdmissibleSerial)->Apply(shape_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdmissibleParallel)->Apply(shape_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PosetSerial)->Apply(shape_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PosetParallel)->Apply(shape_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChartsSerial)->Args({4, 2})->Args({5, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChartsParallel)->Args({4, 2})->Args({5, 2})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
