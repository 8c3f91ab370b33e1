#include <benchmark/benchmark.h>

#include "modesplit/background.hpp"
#include "modesplit/decompose.hpp"
#include "modesplit/energetics.hpp"
#include "modesplit/evolve.hpp"
#include "modesplit/modal_relations.hpp"

using namespace modesplit;

namespace {

AtmosphereParams params() {
  AtmosphereParams p;
  p.alphaH0 = 0.1;
  return p;
}

// Mixed data: entropy part from a pressure pulse plus a sound pulse.
FieldState mixed(const BackgroundProfile& prof) {
  FieldState s = FieldState::zeros(prof.grid);
  s.P = make_pulse({PulseKind::gaussian, 1.0, 0.3, 3.0}, prof.grid);
  s.Phi = make_pulse({PulseKind::gaussian_derivative, 0.5, 0.3, 3.0}, prof.grid);
  return s;
}

void BM_BuildProfile(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_profile(params(), n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildProfile)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_Decompose(benchmark::State& state, SolveMethod method) {
  const BackgroundProfile prof = build_profile(params(), static_cast<std::size_t>(state.range(0)));
  const FieldState total = mixed(prof);
  DecomposeOptions opt;
  opt.method = method;
  for (auto _ : state) benchmark::DoNotOptimize(decompose(total, prof, opt));
  state.SetComplexityN(state.range(0));
}
BENCHMARK_CAPTURE(BM_Decompose, bvp, SolveMethod::bvp)
    ->RangeMultiplier(4)->Range(256, 16384)->Complexity();
BENCHMARK_CAPTURE(BM_Decompose, quadrature, SolveMethod::quadrature)
    ->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_Rk4Step(benchmark::State& state) {
  const BackgroundProfile prof = build_profile(params(), static_cast<std::size_t>(state.range(0)));
  FieldState s = mixed(prof);
  const double dt = max_stable_dt(prof, 0.4);
  for (auto _ : state) {
    s = step(s, prof, dt);
    benchmark::ClobberMemory();
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rk4Step)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_Energy(benchmark::State& state) {
  const BackgroundProfile prof = build_profile(params(), static_cast<std::size_t>(state.range(0)));
  const FieldState s = mixed(prof);
  for (auto _ : state) benchmark::DoNotOptimize(transformed_energy(s, prof));
}
BENCHMARK(BM_Energy)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
