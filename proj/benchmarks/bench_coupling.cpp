#include <benchmark/benchmark.h>

#include "magsky/device.hpp"

using namespace magsky;

namespace {

DeviceParams reference_device(double R_K) {
  DeviceParams d;
  d.R_K = R_K;
  d.d_K = 10e-9;
  d.M_s = 587e3;
  d.B_K = 0.5;
  return d;
}

}  // namespace

static void BM_CouplingQuadrature(benchmark::State& state) {
  auto dev = reference_device(state.range(0) * 1e-9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coupling_strength(dev));
  }
}
BENCHMARK(BM_CouplingQuadrature)->Arg(50)->Arg(100)->Arg(1000);

static void BM_SqueezeTransform(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(squeezing_transform(1.0, 0.9, 1.0, 1e3));
  }
}
BENCHMARK(BM_SqueezeTransform);

BENCHMARK_MAIN();
