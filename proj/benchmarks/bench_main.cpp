#include <benchmark/benchmark.h>

#include "ree/css_opt.hpp"
#include "ree/monogamy.hpp"
#include "ree/sampling.hpp"
#include "ree/xfamily.hpp"

namespace {

void BM_ClosedForm(benchmark::State& state) {
  ree::SplitMix64 rng(1);
  std::vector<ree::XState> inputs;
  for (int i = 0; i < 1024; ++i) inputs.push_back(ree::sample_interior_xstate(rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ree::ree_closed_form(inputs[i++ & 1023]));
}
BENCHMARK(BM_ClosedForm);

void BM_MinimizeG(benchmark::State& state) {
  ree::SplitMix64 rng(2);
  const ree::XState s = ree::sample_interior_xstate(rng);
  for (auto _ : state) benchmark::DoNotOptimize(ree::minimize_g(s));
}
BENCHMARK(BM_MinimizeG)->Unit(benchmark::kMillisecond);

void BM_Eigensystem(benchmark::State& state) {
  const ree::WParams w = ree::WParams::from_squares(0.5, 0.3, 0.2);
  const ree::ComplexMatrix rho = ree::w_state_density(w).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(ree::hermitian_eigensystem(rho));
}
BENCHMARK(BM_Eigensystem);

void BM_GeneralOracle(benchmark::State& state) {
  const ree::DensityMatrix rho = ree::to_density(ree::XState::make(0.2, 0.5, 0.3));
  for (auto _ : state) benchmark::DoNotOptimize(ree::ree_numeric_general(rho));
}
BENCHMARK(BM_GeneralOracle)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ree::sweep(n));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ree::sweep_size(n)));
}
BENCHMARK(BM_Sweep)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
