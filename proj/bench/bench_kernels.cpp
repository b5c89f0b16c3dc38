// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "casimir/sweep.hpp"
#include "casimir/tensor.hpp"

namespace {

casimir::DynkinLabels probe_labels(int n) {
  std::vector<casimir::Label> labels(n - 1, 0);
  labels.front() = 2;
  labels[1] = 1;
  labels[n - 3] += 1;
  labels.back() = 2;
  return casimir::DynkinLabels(n, labels);
}

void BM_TensorWithAdjointSerial(benchmark::State& state) {
  const auto labels = probe_labels(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(casimir::tensor_with_adjoint_serial(labels));
}
BENCHMARK(BM_TensorWithAdjointSerial)->Arg(9)->Arg(20)->Arg(40);

void BM_TensorWithAdjointOmp(benchmark::State& state) {
  const auto labels = probe_labels(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(casimir::tensor_with_adjoint(labels));
}
BENCHMARK(BM_TensorWithAdjointOmp)->Arg(9)->Arg(20)->Arg(40);

void BM_StableSweepSerial(benchmark::State& state) {
  const auto reps = casimir::enumerate_stable_reps(2, 3);
  const std::vector<int> n_values{5, 9, 13, 17, 21, 25};
  for (auto _ : state) benchmark::DoNotOptimize(casimir::stable_sweep_serial(reps, n_values));
}
BENCHMARK(BM_StableSweepSerial);

void BM_StableSweepOmp(benchmark::State& state) {
  const auto reps = casimir::enumerate_stable_reps(2, 3);
  const std::vector<int> n_values{5, 9, 13, 17, 21, 25};
  for (auto _ : state) benchmark::DoNotOptimize(casimir::stable_sweep(reps, n_values));
}
BENCHMARK(BM_StableSweepOmp);

void BM_AdPower(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(casimir::ad_power_decompose(9, 3));
}
BENCHMARK(BM_AdPower);

}  // namespace

BENCHMARK_MAIN();
