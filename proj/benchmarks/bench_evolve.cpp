#include <benchmark/benchmark.h>

#include "magsky/scenarios.hpp"

using namespace magsky;

static void BM_EvolveExchange(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  JCParams p;
  auto m = build_jc(p, n_max);
  auto rho0 = jc_excited_vacuum(n_max);
  auto times = time_grid(10.0, 51);
  for (auto _ : state) {
    auto traj = evolve(m, rho0, times, 1e-8);
    benchmark::DoNotOptimize(traj.states.back());
  }
  state.SetComplexityN(2 * (n_max + 1));
}
BENCHMARK(BM_EvolveExchange)->Arg(5)->Arg(10)->Arg(20)->Arg(40)->Complexity();

static void BM_EvolveDissipativeCascade(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  TwoSkyrmionParams p;
  auto m = build_two_skyrmion_full(p, n_max);
  auto rho0 = two_qubit_boson_state(true, false, n_max);
  auto times = time_grid(5.0, 21);
  for (auto _ : state) {
    auto traj = evolve(m, rho0, times, 1e-7);
    benchmark::DoNotOptimize(traj.states.back());
  }
  state.SetComplexityN(4 * (n_max + 1));
}
BENCHMARK(BM_EvolveDissipativeCascade)->Arg(4)->Arg(8)->Arg(12)->Complexity();

static void BM_Dissipator(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  auto space = HilbertSpace::boson(dim - 1);
  auto L = annihilate(space, 0);
  Matrix rho = Matrix::Zero(dim, dim);
  rho(0, 0) = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dissipator(L, rho));
  }
}
BENCHMARK(BM_Dissipator)->Arg(16)->Arg(64)->Arg(128);
