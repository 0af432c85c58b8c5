// Serial reference vs OpenMP kernels. Set OMP_NUM_THREADS to vary the parallel side.

#include <benchmark/benchmark.h>

#include "surgery/kernels.hpp"
#include "surgery/lens.hpp"

using namespace surgery;

namespace {

void BM_RatioSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::ratio_scan(st.range(0)));
}
void BM_RatioParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(parallel::ratio_scan(st.range(0)));
}

void BM_FranzSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::franz_scan(st.range(0), 3));
}
void BM_FranzParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(parallel::franz_scan(st.range(0), 3));
}

const LaurentIntPoly kTrefoil = KnotModel::right_trefoil().alexander();

void BM_TorsionSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::torsion_pair_scan(st.range(0), kTrefoil));
}
void BM_TorsionParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(parallel::torsion_pair_scan(st.range(0), kTrefoil));
}

}  // namespace

BENCHMARK(BM_RatioSerial)->Arg(27)->Arg(45)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RatioParallel)->Arg(27)->Arg(45)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FranzSerial)->Arg(19)->Arg(23)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FranzParallel)->Arg(19)->Arg(23)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorsionSerial)->Arg(27)->Arg(45)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorsionParallel)->Arg(27)->Arg(45)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
